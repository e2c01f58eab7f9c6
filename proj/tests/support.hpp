#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wsm/layout.hpp"
#include "wsm/metrics.hpp"
#include "wsm/nlp.hpp"

namespace wsm::test {

inline const nlp::Lexicon& lexicon() {
  static const nlp::Lexicon lex = nlp::Lexicon::load(WSM_TEST_LEXICON_DIR);
  return lex;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string sample_csv() { return read_file(WSM_TEST_SAMPLE_CSV); }

// --- generators ---------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::string random_word(Rng& rng, int min_len = 3, int max_len = 12) {
  std::string w;
  const auto len = uniform(rng, min_len, max_len);
  for (std::int64_t i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + uniform(rng, 0, 25)));
  return w;
}

// Frequency series with runs of zeros and occasional bursts.
inline std::vector<std::int64_t> random_series(Rng& rng, std::size_t max_len = 40) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_len))));
  for (auto& v : f) {
    const auto roll = uniform(rng, 0, 9);
    v = roll < 3 ? 0 : roll < 8 ? uniform(rng, 1, 20) : uniform(rng, 100, 100000);
  }
  return f;
}

struct LayoutCase {
  layout::LayoutConfig config;
  std::vector<std::vector<double>> weights;  // [slot][box]
  std::vector<metrics::BoxSelection> selections;
  std::vector<std::string> labels;
};

// Random weights, selections and viewport. Some cells get zero weight, some
// terms are long enough to never fit.
inline LayoutCase random_layout_case(Rng& rng) {
  LayoutCase c;
  auto& cfg = c.config;
  cfg.width = static_cast<double>(uniform(rng, 200, 1800));
  cfg.height = static_cast<double>(uniform(rng, 150, 900));
  cfg.min_font = static_cast<double>(uniform(rng, 6, 16));
  cfg.max_font = cfg.min_font + static_cast<double>(uniform(rng, 0, 40));
  cfg.top_k = static_cast<int>(uniform(rng, 1, 12));
  cfg.mode = uniform(rng, 0, 1) ? metrics::Mode::Ner : metrics::Mode::Pos;

  const auto n = static_cast<std::size_t>(uniform(rng, 1, 14));
  c.weights.assign(3, std::vector<double>(n, 0.0));
  for (auto& row : c.weights) {
    for (auto& w : row) w = uniform(rng, 0, 4) == 0 ? 0.0 : static_cast<double>(uniform(rng, 1, 300));
  }
  c.weights[0][0] = std::max(c.weights[0][0], 1.0);

  const auto cats = metrics::categories(cfg.mode);
  for (std::size_t t = 0; t < n; ++t) {
    c.labels.push_back("t" + std::to_string(t));
    for (auto cat : cats) {
      metrics::BoxSelection sel{t, cat, {}};
      const auto count = uniform(rng, 0, cfg.top_k);
      double value = uniform_real(rng, 1, 60);
      for (std::int64_t i = 0; i < count; ++i) {
        sel.terms.push_back({random_word(rng, 2, uniform(rng, 0, 20) == 0 ? 30 : 10), value, 1});
        value = std::max(0.0, value - uniform_real(rng, 0, 8));
      }
      c.selections.push_back(std::move(sel));
    }
  }
  return c;
}

// --- independent oracles ---------------------------------------------------------

inline double smoothstep_boundary(const std::vector<double>& centers, const std::vector<double>& knots, double x) {
  if (x <= centers.front()) return knots.front();
  if (x >= centers.back()) return knots.back();
  std::size_t i = 0;
  while (i + 2 < centers.size() && x >= centers[i + 1]) ++i;
  const double u = (x - centers[i]) / (centers[i + 1] - centers[i]);
  return knots[i] + (knots[i + 1] - knots[i]) * (3 * u * u - 2 * u * u * u);
}

// Extremes of the boundary over [x0, x1]: dense samples plus every knot inside.
inline std::pair<double, double> boundary_extremes(const std::vector<double>& centers,
                                                   const std::vector<double>& knots, double x0, double x1) {
  double lo = smoothstep_boundary(centers, knots, x0);
  double hi = lo;
  constexpr int kSamples = 64;
  for (int i = 1; i <= kSamples; ++i) {
    const double y = smoothstep_boundary(centers, knots, x0 + (x1 - x0) * i / kSamples);
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (centers[i] > x0 && centers[i] < x1) {
      lo = std::min(lo, knots[i]);
      hi = std::max(hi, knots[i]);
    }
  }
  return {lo, hi};
}

inline bool boxes_overlap(const layout::PlacedWord& a, const layout::PlacedWord& b) {
  constexpr double kEps = 1e-9;
  return a.x < b.x + b.w - kEps && b.x < a.x + a.w - kEps && a.y < b.y + b.h - kEps && b.y < a.y + a.h - kEps;
}

struct InvariantReport {
  std::size_t overlaps = 0;
  std::size_t uncontained = 0;
  std::size_t disproportionate = 0;
  std::size_t miscounted = 0;
  std::string first_problem;

  bool ok() const { return overlaps + uncontained + disproportionate + miscounted == 0; }
};

inline InvariantReport check_layout(const layout::LayoutResult& r, const std::vector<std::vector<double>>& weights,
                                    const std::vector<metrics::BoxSelection>& selections) {
  InvariantReport rep;
  auto note = [&](const std::string& what) {
    if (rep.first_problem.empty()) rep.first_problem = what;
  };

  for (std::size_t i = 0; i < r.words.size(); ++i) {
    for (std::size_t j = i + 1; j < r.words.size(); ++j) {
      if (boxes_overlap(r.words[i], r.words[j])) {
        ++rep.overlaps;
        note("overlap: " + r.words[i].term + " / " + r.words[j].term);
      }
    }
  }

  constexpr double kTol = 0.5;
  const double col = r.width / static_cast<double>(r.centers.size());
  for (const auto& w : r.words) {
    const auto& layer = r.layers.at(metrics::category_slot(w.category));
    const double left = static_cast<double>(w.box) * col;
    const double right = left + col;
    const auto top = boundary_extremes(r.centers, layer.knot_top, w.x, w.x + w.w);
    const auto bottom = boundary_extremes(r.centers, layer.knot_bottom, w.x, w.x + w.w);
    const bool inside = w.x >= left - kTol && w.x + w.w <= right + kTol && w.y >= top.second - kTol &&
                        w.y + w.h <= bottom.first + kTol;
    if (!inside) {
      ++rep.uncontained;
      note("outside cell: " + w.term);
    }
  }

  double tallest = 0;
  for (std::size_t t = 0; t < r.centers.size(); ++t) {
    double total = 0;
    for (const auto& row : weights) total += row[t];
    tallest = std::max(tallest, total);
  }
  const double scale = layout::kHeightUse * r.height / tallest;
  for (std::size_t c = 0; c < r.layers.size(); ++c) {
    for (std::size_t t = 0; t < r.centers.size(); ++t) {
      const double thickness = r.layers[c].knot_bottom[t] - r.layers[c].knot_top[t];
      const double expected = scale * weights[c][t];
      const double err = expected == 0 ? std::fabs(thickness) : std::fabs(thickness - expected) / expected;
      if (err > 1e-6) {
        ++rep.disproportionate;
        note("thickness off at layer " + std::to_string(c) + " box " + std::to_string(t));
      }
    }
  }

  for (const auto& sel : selections) {
    std::size_t placed = 0, dropped = 0;
    for (const auto& w : r.words) placed += (w.box == sel.box && w.category == sel.category);
    for (const auto& d : r.dropped) dropped += (d.box == sel.box && d.category == sel.category);
    if (placed + dropped != sel.terms.size()) {
      ++rep.miscounted;
      note("count mismatch at box " + std::to_string(sel.box));
    }
  }
  return rep;
}

// --- corpora ---------------------------------------------------------------------

// Deterministic journal-style CSV of at least `min_bytes` and `min_rows`.
inline std::string generate_corpus(std::size_t min_bytes, std::size_t min_rows, std::uint64_t seed = 11) {
  static const std::vector<std::string> subjects = {
      "The students", "Our group", "Alice", "The instructor", "My classmate", "Every team", "The community",
      "Researchers at Google", "A friend in Seattle", "The new analysts"};
  static const std::vector<std::string> verbs = {
      "studied", "discussed", "compared", "visualized", "collected", "explained", "questioned", "shared",
      "analyzed", "reviewed", "wrote about", "searched for"};
  static const std::vector<std::string> objects = {
      "large data sets", "the privacy policy", "social networks", "open source projects", "search results",
      "weekly reflections", "careful measurements", "surprising patterns", "online communities",
      "the history of computing", "several beautiful charts", "difficult questions"};
  static const std::vector<std::string> tails = {
      "quickly", "during the lab", "with Microsoft tools", "on GitHub", "before the deadline",
      "in Boston", "after class", "without much help", "for the final project", "carefully"};

  Rng rng(seed);
  std::string out = "Week,Student,Response\n";
  std::size_t rows = 0;
  while (out.size() < min_bytes || rows < min_rows) {
    std::string text;
    const auto sentences = uniform(rng, 2, 4);
    for (std::int64_t s = 0; s < sentences; ++s) {
      if (!text.empty()) text += ' ';
      text += subjects[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(subjects.size()) - 1))] + ' ';
      text += verbs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(verbs.size()) - 1))] + ' ';
      text += objects[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(objects.size()) - 1))] + ' ';
      text += tails[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(tails.size()) - 1))] + ".";
    }
    out += std::to_string(1 + rows % 15) + ",s" + std::to_string(rows % 97) + ",\"" + text + "\"\n";
    ++rows;
  }
  return out;
}

}  // namespace wsm::test
