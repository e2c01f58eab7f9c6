#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "wsm/layout.hpp"

namespace wsm::render {

inline constexpr std::string_view kSchemaVersion = "layout-schema v1";

// Stream fill for a category slot (0..2); shared by both modes.
std::string_view layer_color(std::size_t slot);
// Slot color darkened by rank: rank 0 is darkest.
std::string word_color(std::size_t slot, std::size_t rank);

// SVG 1.1: background rect, one path per layer, one text per placed word,
// one text per time label. Word and layer coordinates are written with two
// decimals.
std::string emit_svg(const layout::LayoutResult& result);

// Canonical layout document: fixed key order, at most six fractional digits,
// arrays in (box, category slot, rank) order.
std::string emit_json(const layout::LayoutResult& result);

// Reads a document produced by emit_json. Throws BadDocument.
layout::LayoutResult parse_json(std::string_view document);

}  // namespace wsm::render
