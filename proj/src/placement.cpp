#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "wsm/layout.hpp"

namespace wsm::layout {

namespace {

constexpr double kEps = 1e-9;

// Viewport discretised into kGridCell squares. A box claims every cell it
// touches, so boxes with disjoint cell sets cannot overlap.
class OccupancyGrid {
 public:
  OccupancyGrid(double width, double height)
      : cols_(static_cast<std::size_t>(std::ceil(width / kGridCell))),
        rows_(static_cast<std::size_t>(std::ceil(height / kGridCell))),
        cells_(cols_ * rows_, 0),
        prefix_((cols_ + 1) * (rows_ + 1), 0) {}

  bool is_free(double x, double y, double w, double h) {
    const auto r = span(x, y, w, h);
    if (dirty_) rebuild();
    const auto at = [&](std::size_t row, std::size_t col) { return prefix_[row * (cols_ + 1) + col]; };
    const std::int64_t used = at(r.row1, r.col1) - at(r.row0, r.col1) - at(r.row1, r.col0) + at(r.row0, r.col0);
    return used == 0;
  }

  void occupy(double x, double y, double w, double h) {
    const auto r = span(x, y, w, h);
    for (std::size_t row = r.row0; row < r.row1; ++row) {
      std::fill_n(cells_.begin() + static_cast<std::ptrdiff_t>(row * cols_ + r.col0), r.col1 - r.col0, 1);
    }
    dirty_ = true;
  }

 private:
  struct Range {
    std::size_t col0, col1, row0, row1;  // half-open cell ranges
  };

  Range span(double x, double y, double w, double h) const {
    auto lo = [](double v, std::size_t limit) {
      return std::min(limit, static_cast<std::size_t>(std::max(0.0, std::floor(v / kGridCell))));
    };
    auto hi = [](double v, std::size_t limit) {
      return std::min(limit, static_cast<std::size_t>(std::max(0.0, std::ceil(v / kGridCell))));
    };
    return {lo(x, cols_), hi(x + w, cols_), lo(y, rows_), hi(y + h, rows_)};
  }

  void rebuild() {
    for (std::size_t row = 0; row < rows_; ++row) {
      std::int64_t line = 0;
      for (std::size_t col = 0; col < cols_; ++col) {
        line += cells_[row * cols_ + col];
        prefix_[(row + 1) * (cols_ + 1) + col + 1] = prefix_[row * (cols_ + 1) + col + 1] + line;
      }
    }
    dirty_ = false;
  }

  std::size_t cols_;
  std::size_t rows_;
  std::vector<std::uint8_t> cells_;
  std::vector<std::int64_t> prefix_;
  bool dirty_ = false;
};

// 0, -1, +1, -2, +2, ... limited to [lo, hi] around `origin`.
std::vector<double> center_out(double origin, double lo, double hi) {
  std::vector<double> out;
  if (hi < lo - kEps) return out;
  hi = std::max(hi, lo);
  origin = std::clamp(origin, lo, hi);
  out.push_back(origin);
  for (int k = 1;; ++k) {
    const double below = origin - k * kGridCell;
    const double above = origin + k * kGridCell;
    const bool has_below = below >= lo - kEps;
    const bool has_above = above <= hi + kEps;
    if (!has_below && !has_above) break;
    if (has_below) out.push_back(std::max(below, lo));
    if (has_above) out.push_back(std::min(above, hi));
  }
  return out;
}

struct Cell {
  double left, right;  // column
  double center_x;
  const std::vector<double>* top;
  const std::vector<double>* bottom;
  const std::vector<double>* centers;
};

struct Slot {
  double x, y;
};

// First free position for a w×h box inside `cell`, or nothing.
std::optional<Slot> find_slot(const Cell& cell, double w, double h, OccupancyGrid& grid) {
  if (w > cell.right - cell.left + kEps) return std::nullopt;

  struct Column {
    double x, y_min, y_max;
  };
  std::vector<Column> columns;
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -y_lo;
  for (double x : center_out(cell.center_x - w / 2.0, cell.left, cell.right - w)) {
    const double y_min = boundary_range(*cell.centers, *cell.top, x, x + w).second;
    const double y_max = boundary_range(*cell.centers, *cell.bottom, x, x + w).first - h;
    if (y_max < y_min - kEps) continue;
    columns.push_back({x, y_min, y_max});
    y_lo = std::min(y_lo, y_min);
    y_hi = std::max(y_hi, y_max);
  }
  if (columns.empty()) return std::nullopt;

  const double mid = (boundary_at(*cell.centers, *cell.top, cell.center_x) +
                      boundary_at(*cell.centers, *cell.bottom, cell.center_x)) / 2.0;
  for (double y : center_out(mid - h / 2.0, y_lo, y_hi)) {
    for (const auto& column : columns) {
      if (y < column.y_min - kEps || y > column.y_max + kEps) continue;
      const double yy = std::clamp(y, column.y_min, std::max(column.y_min, column.y_max));
      if (grid.is_free(column.x, yy, w, h)) return Slot{column.x, yy};
    }
  }
  return std::nullopt;
}

}  // namespace

LayoutResult place_words(const Layers& layers, std::span<const metrics::BoxSelection> selections,
                         std::vector<std::string> time_labels, const LayoutConfig& config) {
  LayoutResult result;
  result.config = config;
  result.time_labels = std::move(time_labels);
  result.centers = layers.centers;
  result.scale = layers.scale;
  result.layers = layers.layers;
  result.width = config.width;
  result.height = config.height;

  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (const auto& sel : selections) {
    for (const auto& term : sel.terms) {
      vmin = std::min(vmin, term.value);
      vmax = std::max(vmax, term.value);
    }
  }

  const std::size_t n = layers.centers.size();
  const double column_width = config.width / static_cast<double>(n);
  OccupancyGrid grid(config.width, config.height);

  for (const auto& sel : selections) {
    const auto name = metrics::to_string(sel.category);
    const auto layer = std::find_if(result.layers.begin(), result.layers.end(),
                                    [&](const StreamLayer& l) { return l.category == name; });
    for (std::size_t rank = 0; rank < sel.terms.size(); ++rank) {
      const auto& term = sel.terms[rank];
      if (layer == result.layers.end() || sel.box >= n) {
        result.dropped.push_back({term.term, sel.box, sel.category, rank, "no-layer"});
        continue;
      }
      const Cell cell{static_cast<double>(sel.box) * column_width,
                      static_cast<double>(sel.box + 1) * column_width,
                      result.centers[sel.box],
                      &layer->knot_top,
                      &layer->knot_bottom,
                      &result.centers};

      double size = font_size(term.value, vmin, vmax, config);
      bool placed = false;
      while (true) {
        const double w = text_width(term.term, size);
        if (auto slot = find_slot(cell, w, size, grid)) {
          grid.occupy(slot->x, slot->y, w, size);
          result.words.push_back({term.term, sel.category, sel.box, rank, size, slot->x, slot->y, w, size, term.value});
          placed = true;
          break;
        }
        if (size <= config.min_font + kEps) break;
        size = std::max(config.min_font, size * kShrinkFactor);
      }
      if (!placed) result.dropped.push_back({term.term, sel.box, sel.category, rank, "no-fit"});
    }
  }
  return result;
}

}  // namespace wsm::layout
