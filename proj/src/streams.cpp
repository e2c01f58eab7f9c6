#include <algorithm>
#include <cmath>

#include "wsm/error.hpp"
#include "wsm/layout.hpp"

namespace wsm::layout {

namespace {

double blend(double u) { return u * u * (3.0 - 2.0 * u); }

std::vector<double> sample_positions(std::span<const double> centers, double width) {
  std::vector<double> xs;
  xs.push_back(0.0);
  if (centers.front() > 0.0) xs.push_back(centers.front());
  for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
    const double len = centers[i + 1] - centers[i];
    const int segments = std::max(kMinSamplesPerInterval, static_cast<int>(std::ceil(len / kMaxSampleStep)));
    for (int j = 1; j < segments; ++j) xs.push_back(centers[i] + len * j / segments);
    xs.push_back(centers[i + 1]);
  }
  if (centers.back() < width) xs.push_back(width);
  return xs;
}

}  // namespace

void LayoutConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(Stage::Config, ErrorCode::InvalidConfig, what); };
  if (!(std::isfinite(min_font) && min_font > 0)) fail("min-font must be > 0");
  if (!(std::isfinite(max_font) && max_font > 0)) fail("max-font must be > 0");
  if (min_font > max_font) fail("min-font must be <= max-font");
  if (top_k < 1) fail("top-k must be >= 1");
  if (!(std::isfinite(width) && width >= 100)) fail("width must be >= 100");
  if (!(std::isfinite(height) && height >= 100)) fail("height must be >= 100");
}

double boundary_at(std::span<const double> centers, std::span<const double> knots, double x) {
  if (x <= centers.front()) return knots.front();
  if (x >= centers.back()) return knots.back();
  const auto it = std::upper_bound(centers.begin(), centers.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - centers.begin()) - 1;
  const double u = (x - centers[i]) / (centers[i + 1] - centers[i]);
  return knots[i] + (knots[i + 1] - knots[i]) * blend(u);
}

std::pair<double, double> boundary_range(std::span<const double> centers, std::span<const double> knots,
                                         double x0, double x1) {
  double lo = boundary_at(centers, knots, x0);
  double hi = lo;
  const double end = boundary_at(centers, knots, x1);
  lo = std::min(lo, end);
  hi = std::max(hi, end);
  // monotone between knots, so interior extremes sit on knots
  auto it = std::upper_bound(centers.begin(), centers.end(), x0);
  for (; it != centers.end() && *it < x1; ++it) {
    const double y = knots[static_cast<std::size_t>(it - centers.begin())];
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  return {lo, hi};
}

Layers compute_layers(const std::vector<std::vector<double>>& weights, std::span<const std::string> names,
                      const LayoutConfig& config) {
  if (weights.empty() || weights.front().empty()) {
    throw Error(Stage::Layout, ErrorCode::AllWeightsZero, "no time boxes to lay out");
  }
  const std::size_t n = weights.front().size();
  std::vector<double> totals(n, 0.0);
  for (const auto& row : weights) {
    if (row.size() != n) throw Error(Stage::Layout, ErrorCode::InvalidConfig, "ragged weight matrix");
    for (std::size_t t = 0; t < n; ++t) {
      if (!(row[t] >= 0) || !std::isfinite(row[t])) {
        throw Error(Stage::Layout, ErrorCode::InvalidConfig, "weights must be finite and >= 0");
      }
      totals[t] += row[t];
    }
  }
  const double tallest = *std::max_element(totals.begin(), totals.end());
  if (tallest <= 0) throw Error(Stage::Layout, ErrorCode::AllWeightsZero, "every category weight is zero");

  Layers out;
  out.scale = kHeightUse * config.height / tallest;
  out.centers.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.centers[t] = (static_cast<double>(t) + 0.5) * config.width / static_cast<double>(n);
  const auto xs = sample_positions(out.centers, config.width);

  std::vector<double> cursor(n);
  for (std::size_t t = 0; t < n; ++t) cursor[t] = config.height / 2.0 - out.scale * totals[t] / 2.0;

  for (std::size_t c = 0; c < weights.size(); ++c) {
    StreamLayer layer;
    layer.category = c < names.size() ? names[c] : std::to_string(c);
    layer.box_weights = weights[c];
    layer.knot_top.resize(n);
    layer.knot_bottom.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
      layer.knot_top[t] = cursor[t];
      layer.knot_bottom[t] = cursor[t] + out.scale * weights[c][t];
      cursor[t] = layer.knot_bottom[t];
    }
    layer.x = xs;
    layer.top.reserve(xs.size());
    layer.bottom.reserve(xs.size());
    for (double x : xs) {
      layer.top.push_back(boundary_at(out.centers, layer.knot_top, x));
      layer.bottom.push_back(boundary_at(out.centers, layer.knot_bottom, x));
    }
    out.layers.push_back(std::move(layer));
  }
  return out;
}

double font_size(double value, double vmin, double vmax, const LayoutConfig& config) {
  if (!(vmax > vmin)) return (config.min_font + config.max_font) / 2.0;
  const double t = std::clamp((value - vmin) / (vmax - vmin), 0.0, 1.0);
  return config.min_font + (config.max_font - config.min_font) * t;
}

}  // namespace wsm::layout
