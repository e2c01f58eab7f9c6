#include "wsm/nlp.hpp"
#include "wsm/utf8.hpp"

namespace wsm::nlp {

namespace {

bool ends_sentence(char32_t cp) { return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026; }

bool strippable(char32_t cp) { return utf8::is_punct(cp) || utf8::is_symbol(cp); }

}  // namespace

std::vector<Unit> split_units(std::string_view text) {
  std::vector<Unit> units;
  bool next_starts_sentence = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size()) {
      std::size_t probe = pos;
      if (!utf8::is_space(utf8::decode(text, probe))) break;
      pos = probe;
    }
    const std::size_t raw_begin = pos;
    if (raw_begin == text.size()) break;
    while (pos < text.size()) {
      std::size_t probe = pos;
      if (utf8::is_space(utf8::decode(text, probe))) break;
      pos = probe;
    }
    const std::string_view raw = text.substr(raw_begin, pos - raw_begin);

    // leading punctuation
    std::size_t begin = 0;
    bool leading = false;
    while (begin < raw.size()) {
      std::size_t probe = begin;
      if (!strippable(utf8::decode(raw, probe))) break;
      begin = probe;
      leading = true;
    }
    // trailing punctuation: walk forward remembering the end of the last word char
    std::size_t end = begin;
    bool sentence_end = false;
    for (std::size_t probe = begin; probe < raw.size();) {
      const char32_t cp = utf8::decode(raw, probe);
      if (!strippable(cp)) end = probe;
    }
    for (std::size_t probe = end; probe < raw.size();) {
      if (ends_sentence(utf8::decode(raw, probe))) sentence_end = true;
    }
    for (std::size_t probe = 0; probe < begin;) {
      if (ends_sentence(utf8::decode(raw, probe)) && end == begin) sentence_end = true;
    }
    const bool trailing = end < raw.size();

    if (leading && !units.empty()) units.back().boundary_after = true;
    if (end > begin) {
      units.push_back(Unit{std::string(raw.substr(begin, end - begin)), next_starts_sentence, trailing});
      next_starts_sentence = sentence_end;
    } else {
      // a pure punctuation unit
      if (!units.empty()) units.back().boundary_after = true;
      if (sentence_end) next_starts_sentence = true;
    }
  }
  return units;
}

std::vector<Token> fuse_noun_chunks(std::span<const Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    // Adjective* Noun+ starting at i, stopping at punctuation or a new sentence
    std::size_t j = i;
    auto continues = [&](std::size_t k) {
      return k == i || (!tokens[k - 1].boundary_after && !tokens[k].sentence_start);
    };
    while (j < tokens.size() && continues(j) && tokens[j].pos == Pos::Adjective) ++j;
    std::size_t k = j;
    while (k < tokens.size() && continues(k) && tokens[k].pos == Pos::Noun) ++k;
    if (k == j || k - i == 1) {
      // no noun after the adjectives, or a lone token
      out.push_back(tokens[i]);
      ++i;
      continue;
    }
    Token chunk;
    chunk.pos = Pos::Noun;
    chunk.sentence_start = tokens[i].sentence_start;
    chunk.boundary_after = tokens[k - 1].boundary_after;
    chunk.known = true;
    for (std::size_t m = i; m < k; ++m) {
      if (m > i) chunk.surface.push_back(' ');
      chunk.surface += tokens[m].surface;
      chunk.known = chunk.known && tokens[m].known;
    }
    out.push_back(std::move(chunk));
    i = k;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text, Tokenization mode, const Lexicon& lexicon) {
  std::vector<std::string> out;
  const auto units = split_units(text);
  if (mode == Tokenization::Word) {
    out.reserve(units.size());
    for (const auto& u : units) out.push_back(u.surface);
    return out;
  }
  const auto chunks = fuse_noun_chunks(pos_tag(units, lexicon));
  out.reserve(chunks.size());
  for (const auto& t : chunks) out.push_back(t.surface);
  return out;
}

}  // namespace wsm::nlp
