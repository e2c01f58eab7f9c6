#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "wsm/render.hpp"

namespace wsm::render {

namespace {

constexpr std::array<std::string_view, 3> kPalette = {"#4e79a7", "#f28e2b", "#59a14f"};
constexpr std::string_view kFontStack = "Helvetica, Arial, sans-serif";
constexpr double kLabelSize = 12;

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0;
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

void escape_into(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
}

// Knot-to-knot Bézier form of the blend curve: control points sit a third of
// the way along each interval at the start and end heights.
void append_curve(std::string& d, std::span<const double> xs, std::span<const double> ys, bool reverse) {
  const std::size_t n = xs.size();
  for (std::size_t step = 0; step + 1 < n; ++step) {
    const std::size_t a = reverse ? n - 1 - step : step;
    const std::size_t b = reverse ? a - 1 : a + 1;
    const double third = (xs[b] - xs[a]) / 3.0;
    d += " C " + num(xs[a] + third) + ' ' + num(ys[a]) + ' ' + num(xs[b] - third) + ' ' + num(ys[b]) + ' ' +
         num(xs[b]) + ' ' + num(ys[b]);
  }
}

std::string layer_path(const layout::StreamLayer& layer, std::span<const double> centers, double width) {
  const auto& top = layer.knot_top;
  const auto& bottom = layer.knot_bottom;
  std::string d = "M 0 " + num(top.front());
  d += " L " + num(centers.front()) + ' ' + num(top.front());
  append_curve(d, centers, top, false);
  d += " L " + num(width) + ' ' + num(top.back());
  d += " L " + num(width) + ' ' + num(bottom.back());
  d += " L " + num(centers.back()) + ' ' + num(bottom.back());
  append_curve(d, centers, bottom, true);
  d += " L 0 " + num(bottom.front()) + " Z";
  return d;
}

}  // namespace

std::string_view layer_color(std::size_t slot) { return kPalette[slot % kPalette.size()]; }

std::string word_color(std::size_t slot, std::size_t rank) {
  const auto base = layer_color(slot);
  const double keep = 0.5 + 0.06 * static_cast<double>(std::min<std::size_t>(rank, 8));
  std::string out = "#";
  for (int i = 0; i < 3; ++i) {
    int channel = 0;
    std::from_chars(base.data() + 1 + 2 * i, base.data() + 3 + 2 * i, channel, 16);
    const int shaded = static_cast<int>(std::lround(channel * keep));
    std::array<char, 3> hex{};
    std::snprintf(hex.data(), hex.size(), "%02x", std::clamp(shaded, 0, 255));
    out += hex.data();
  }
  return out;
}

std::string emit_svg(const layout::LayoutResult& result) {
  const std::string w = num(result.width);
  const std::string h = num(result.height);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + ' ' + h + "\" font-family=\"" + std::string(kFontStack) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";

  out += "<g class=\"layers\">\n";
  for (std::size_t i = 0; i < result.layers.size(); ++i) {
    const auto& layer = result.layers[i];
    out += "<path class=\"layer ";
    escape_into(out, layer.category);
    out += "\" d=\"" + layer_path(layer, result.centers, result.width) + "\" fill=\"" +
           std::string(layer_color(i)) + "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"words\">\n";
  for (const auto& word : result.words) {
    const std::size_t slot = metrics::category_slot(word.category);
    out += "<text class=\"word " + std::string(metrics::to_string(word.category)) + "\" x=\"" + num(word.x) +
           "\" y=\"" + num(word.y) + "\" font-size=\"" + num(word.font_size) + "\" textLength=\"" + num(word.w) +
           "\" lengthAdjust=\"spacingAndGlyphs\" dominant-baseline=\"text-before-edge\" fill=\"" +
           word_color(slot, word.rank) + "\">";
    escape_into(out, word.term);
    out += "</text>\n";
  }
  out += "</g>\n";

  out += "<g class=\"axis\" font-size=\"" + num(kLabelSize) + "\" fill=\"#555555\" text-anchor=\"middle\">\n";
  for (std::size_t t = 0; t < result.time_labels.size() && t < result.centers.size(); ++t) {
    out += "<text x=\"" + num(result.centers[t]) + "\" y=\"" + num(result.height - 6) + "\">";
    escape_into(out, result.time_labels[t]);
    out += "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace wsm::render
