#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 helpers. Inputs to everything except `sanitize` are assumed
// to be valid UTF-8 (the ingest stage guarantees it).
namespace wsm::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Replaces every invalid sequence with U+FFFD; `replaced` receives the count.
std::string sanitize(std::string_view bytes, std::size_t& replaced);

// Decodes the code point starting at `pos` and advances `pos` past it.
char32_t decode(std::string_view s, std::size_t& pos);

void append(std::string& out, char32_t cp);

// Code point count.
std::size_t length(std::string_view s);

// Lowercases ASCII, Latin-1 Supplement and Latin Extended-A letters.
std::string to_lower(std::string_view s);

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
// Symbols that never form part of a word (arrows, math, dingbats, emoji).
bool is_symbol(char32_t cp);
// Letters, digits and any other code point that can be part of a word.
bool is_word_char(char32_t cp);
bool is_upper(char32_t cp);

}  // namespace wsm::utf8
