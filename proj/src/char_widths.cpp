#include <array>

#include "wsm/layout.hpp"
#include "wsm/utf8.hpp"

namespace wsm::layout {

namespace {

// Advance widths in 1/1000 em for printable ASCII (0x20..0x7E), taken from
// the standard Helvetica metrics. The SVG output names a Helvetica/Arial
// font stack, and text elements carry textLength so renderers match these.
constexpr std::array<int, 95> kAsciiWidths = {
    278, 278, 355, 556, 556, 889, 667, 191, 333, 333, 389, 584, 278, 333, 278, 278,  // ' '..'/'
    556, 556, 556, 556, 556, 556, 556, 556, 556, 556,                                // 0..9
    278, 278, 584, 584, 584, 556, 1015,                                              // :..@
    667, 667, 722, 722, 667, 611, 778, 722, 278, 500, 667, 556, 833,                 // A..M
    722, 778, 667, 778, 722, 667, 611, 722, 667, 944, 667, 667, 611,                 // N..Z
    278, 278, 278, 469, 556, 333,                                                    // [..`
    556, 556, 500, 556, 556, 278, 556, 556, 222, 222, 500, 222, 833,                 // a..m
    556, 556, 556, 556, 333, 500, 278, 556, 500, 722, 500, 500, 500,                 // n..z
    334, 260, 334, 584,                                                              // {..~
};

constexpr int kDefaultWidth = 600;  // everything outside ASCII
constexpr int kWideWidth = 1000;    // CJK and fullwidth forms

int advance(char32_t cp) {
  if (cp >= 0x20 && cp <= 0x7E) return kAsciiWidths[cp - 0x20];
  if ((cp >= 0x2E80 && cp <= 0x9FFF) || (cp >= 0xAC00 && cp <= 0xD7AF) || (cp >= 0xFF00 && cp <= 0xFF60)) {
    return kWideWidth;
  }
  return kDefaultWidth;
}

}  // namespace

double text_width(std::string_view text, double font_size) {
  int units = 0;
  for (std::size_t pos = 0; pos < text.size();) units += advance(utf8::decode(text, pos));
  return units * font_size / 1000.0;
}

}  // namespace wsm::layout
