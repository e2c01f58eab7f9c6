#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsm/metrics.hpp"
#include "wsm/nlp.hpp"

namespace wsm::layout {

// All user-tunable parameters. Lengths are layout units (1 unit = 1 SVG px).
struct LayoutConfig {
  double min_font = 12;
  double max_font = 42;
  int top_k = 8;
  double width = 1200;
  double height = 600;
  metrics::Mode mode = metrics::Mode::Pos;
  metrics::Metric metric = metrics::Metric::Frequency;
  nlp::Tokenization tokenization = nlp::Tokenization::Word;

  // Throws InvalidConfig naming the first violated invariant.
  void validate() const;

  friend bool operator==(const LayoutConfig&, const LayoutConfig&) = default;
};

inline constexpr double kGridCell = 2.0;         // occupancy grid resolution
inline constexpr double kHeightUse = 0.9;        // tallest stack / viewport height
inline constexpr double kShrinkFactor = 0.9;     // font reduction per failed attempt
inline constexpr int kMinSamplesPerInterval = 8;
inline constexpr double kMaxSampleStep = 4.0;

// One category band. Knots sit at the box centers; between knots each
// boundary follows y0 + (y1 - y0)·(3u² - 2u³), a monotone cubic with flat
// tangents, and it is constant outside the first and last center. Because
// every boundary uses the same blend, band order and thickness ≥ 0 hold
// everywhere. `x/top/bottom` are samples of that curve across the viewport.
struct StreamLayer {
  std::string category;
  std::vector<double> box_weights;  // W(t, c)
  std::vector<double> knot_top;     // boundary values at the box centers
  std::vector<double> knot_bottom;
  std::vector<double> x;
  std::vector<double> top;
  std::vector<double> bottom;

  friend bool operator==(const StreamLayer&, const StreamLayer&) = default;
};

struct Layers {
  std::vector<StreamLayer> layers;
  std::vector<double> centers;  // box-center x
  double scale = 0;             // thickness = scale · W(t, c)
};

// Boundary value at `x` for knots at `centers`.
double boundary_at(std::span<const double> centers, std::span<const double> knots, double x);
// Min and max of the boundary over [x0, x1].
std::pair<double, double> boundary_range(std::span<const double> centers, std::span<const double> knots,
                                         double x0, double x1);

// `weights[c][t]` ≥ 0; categories stacked top to bottom in the given order.
// Silhouette baseline centered at height/2, tallest stack = 90% of height.
// Throws AllWeightsZero.
Layers compute_layers(const std::vector<std::vector<double>>& weights, std::span<const std::string> names,
                      const LayoutConfig& config);

// Linear map of [vmin, vmax] onto [min_font, max_font]; midpoint when flat.
double font_size(double value, double vmin, double vmax, const LayoutConfig& config);

// Advance width of `text` at `font_size` from the bundled character table.
double text_width(std::string_view text, double font_size);

struct PlacedWord {
  std::string term;
  metrics::Category category = metrics::Category::Noun;
  std::size_t box = 0;
  std::size_t rank = 0;
  double font_size = 0;
  double x = 0, y = 0, w = 0, h = 0;  // top-left corner and size
  double value = 0;

  friend bool operator==(const PlacedWord&, const PlacedWord&) = default;
};

struct DroppedWord {
  std::string term;
  std::size_t box = 0;
  metrics::Category category = metrics::Category::Noun;
  std::size_t rank = 0;
  std::string reason;

  friend bool operator==(const DroppedWord&, const DroppedWord&) = default;
};

struct LayoutResult {
  LayoutConfig config;
  std::vector<std::string> time_labels;
  std::vector<double> centers;
  double scale = 0;
  std::vector<StreamLayer> layers;
  std::vector<PlacedWord> words;      // (box, category slot, rank) order
  std::vector<DroppedWord> dropped;   // same order
  double width = 0, height = 0;       // viewport

  friend bool operator==(const LayoutResult&, const LayoutResult&) = default;
};

// Column t spans [t·W/n, (t+1)·W/n]; the (box, category) cell is that slice
// of the category band. Words go in rank order onto a 2-unit occupancy grid,
// candidates scanned center-out vertically and center-out horizontally (left
// first on ties). A word that fits nowhere is retried at 90% size down to
// min_font, then dropped with reason "no-fit".
LayoutResult place_words(const Layers& layers, std::span<const metrics::BoxSelection> selections,
                         std::vector<std::string> time_labels, const LayoutConfig& config);

}  // namespace wsm::layout
