#include "wsm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wsm/error.hpp"

namespace wsm::metrics {

namespace {

constexpr std::array<std::string_view, 6> kCategoryNames = {"Noun",   "Verb",  "Adjective",
                                                            "Person", "Place", "Organization"};

std::optional<Category> category_of(const nlp::Token& token, Mode mode) {
  if (mode == Mode::Pos) {
    switch (token.pos) {
      case nlp::Pos::Noun: return Category::Noun;
      case nlp::Pos::Verb: return Category::Verb;
      case nlp::Pos::Adjective: return Category::Adjective;
      default: return std::nullopt;
    }
  }
  if (!token.ner) return std::nullopt;
  switch (*token.ner) {
    case nlp::Entity::Person: return Category::Person;
    case nlp::Entity::Place: return Category::Place;
    case nlp::Entity::Organization: return Category::Organization;
  }
  return std::nullopt;
}

}  // namespace

std::array<Category, 3> categories(Mode mode) {
  if (mode == Mode::Pos) return {Category::Noun, Category::Verb, Category::Adjective};
  return {Category::Person, Category::Place, Category::Organization};
}

std::size_t category_slot(Category category) { return static_cast<std::size_t>(category) % 3; }

std::string_view to_string(Mode mode) { return mode == Mode::Pos ? "pos" : "ner"; }

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Frequency: return "frequency";
    case Metric::SuddenChange: return "sudden";
    case Metric::TfIdf: return "tfidf";
  }
  return "frequency";
}

std::string_view to_string(Category category) { return kCategoryNames[static_cast<std::size_t>(category)]; }

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "pos") return Mode::Pos;
  if (name == "ner") return Mode::Ner;
  return std::nullopt;
}

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "frequency") return Metric::Frequency;
  if (name == "sudden") return Metric::SuddenChange;
  if (name == "tfidf") return Metric::TfIdf;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::int64_t TermStats::total() const {
  std::int64_t sum = 0;
  for (auto f : frequency) sum += f;
  return sum;
}

std::vector<Ratio> sudden_change(std::span<const std::int64_t> frequency) {
  std::vector<Ratio> out;
  out.reserve(frequency.size());
  std::int64_t previous = 0;
  for (auto f : frequency) {
    out.push_back(Ratio{f + 1, previous + 1});
    previous = f;
  }
  return out;
}

std::vector<double> tfidf(std::span<const std::int64_t> frequency, std::int64_t document_frequency,
                          std::int64_t box_count) {
  const double idf = std::log(static_cast<double>(box_count) / static_cast<double>(document_frequency));
  std::vector<double> out;
  out.reserve(frequency.size());
  for (auto f : frequency) out.push_back(f == 0 ? 0.0 : static_cast<double>(f) * idf);
  return out;
}

std::vector<TermStats> count_frequencies(std::span<const std::vector<nlp::Token>> boxes, Mode mode) {
  const std::size_t n = boxes.size();
  // (slot, lemma) keeps the output sorted
  std::map<std::pair<std::size_t, std::string>, TermStats> table;
  for (std::size_t t = 0; t < n; ++t) {
    for (const auto& token : boxes[t]) {
      const auto category = category_of(token, mode);
      if (!category) continue;
      auto [it, inserted] = table.try_emplace({category_slot(*category), token.lemma});
      if (inserted) {
        it->second.term = token.lemma;
        it->second.category = *category;
        it->second.frequency.assign(n, 0);
      }
      ++it->second.frequency[t];
    }
  }
  if (table.empty()) {
    throw Error(Stage::Metrics, ErrorCode::NoTermsExtracted,
                std::string("no ") + (mode == Mode::Pos ? "noun, verb or adjective" : "named-entity") +
                    " terms in " + std::to_string(n) + " time boxes");
  }

  std::vector<TermStats> out;
  out.reserve(table.size());
  for (auto& [key, stats] : table) {
    stats.document_frequency = std::count_if(stats.frequency.begin(), stats.frequency.end(),
                                             [](std::int64_t f) { return f > 0; });
    stats.sudden = sudden_change(stats.frequency);
    stats.tfidf = tfidf(stats.frequency, stats.document_frequency, static_cast<std::int64_t>(n));
    out.push_back(std::move(stats));
  }
  return out;
}

std::vector<std::vector<double>> category_weights(std::span<const TermStats> stats, std::size_t box_count) {
  std::vector<std::vector<double>> weights(3, std::vector<double>(box_count, 0.0));
  for (const auto& s : stats) {
    auto& row = weights[category_slot(s.category)];
    for (std::size_t t = 0; t < box_count && t < s.frequency.size(); ++t) {
      row[t] += static_cast<double>(s.frequency[t]);
    }
  }
  return weights;
}

std::vector<BoxSelection> select_top_k(std::span<const TermStats> stats, Mode mode, Metric metric,
                                       std::size_t k) {
  std::vector<BoxSelection> out;
  if (stats.empty()) return out;
  const std::size_t n = stats.front().frequency.size();
  const auto cats = categories(mode);

  struct Candidate {
    const TermStats* stats;
    std::int64_t total;
  };
  // terms present in each (box, slot)
  std::vector<std::array<std::vector<Candidate>, 3>> present(n);
  for (const auto& s : stats) {
    const std::int64_t total = s.total();
    for (std::size_t t = 0; t < n; ++t) {
      if (s.frequency[t] > 0) present[t][category_slot(s.category)].push_back({&s, total});
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (Category category : cats) {
      auto& candidates = present[t][category_slot(category)];
      auto better = [&](const Candidate& a, const Candidate& b) {
        std::partial_ordering cmp = std::partial_ordering::equivalent;
        switch (metric) {
          case Metric::Frequency: cmp = a.stats->frequency[t] <=> b.stats->frequency[t]; break;
          case Metric::SuddenChange: cmp = a.stats->sudden[t] <=> b.stats->sudden[t]; break;
          case Metric::TfIdf: cmp = a.stats->tfidf[t] <=> b.stats->tfidf[t]; break;
        }
        if (cmp != 0) return cmp > 0;
        if (a.total != b.total) return a.total > b.total;
        return a.stats->term < b.stats->term;
      };
      const std::size_t keep = std::min(k, candidates.size());
      std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                        candidates.end(), better);
      BoxSelection selection{t, category, {}};
      selection.terms.reserve(keep);
      for (std::size_t i = 0; i < keep; ++i) {
        const TermStats& s = *candidates[i].stats;
        double value = 0;
        switch (metric) {
          case Metric::Frequency: value = static_cast<double>(s.frequency[t]); break;
          case Metric::SuddenChange: value = s.sudden[t].value(); break;
          case Metric::TfIdf: value = s.tfidf[t]; break;
        }
        selection.terms.push_back(RankedTerm{s.term, value, candidates[i].total});
      }
      out.push_back(std::move(selection));
    }
  }
  return out;
}

}  // namespace wsm::metrics
