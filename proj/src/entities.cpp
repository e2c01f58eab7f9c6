#include "wsm/nlp.hpp"
#include "wsm/utf8.hpp"

namespace wsm::nlp {

namespace {

constexpr std::array<Entity, 3> kPriority = {Entity::Organization, Entity::Place, Entity::Person};

std::optional<Entity> gazetteer_match(std::string_view key, const Lexicon& lexicon) {
  for (Entity kind : kPriority) {
    if (lexicon.in_gazetteer(kind, key)) return kind;
  }
  return std::nullopt;
}

bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  return utf8::is_upper(utf8::decode(s, pos));
}

// "NASA" or "AI": acronyms are not names.
bool all_upper(std::string_view s) {
  std::size_t letters = 0;
  for (std::size_t pos = 0; pos < s.size();) {
    const char32_t cp = utf8::decode(s, pos);
    if (cp >= 'a' && cp <= 'z') return false;
    if (utf8::is_upper(cp)) ++letters;
  }
  return letters >= 2;
}

bool looks_like_name(std::string_view word) { return starts_upper(word) && !all_upper(word); }

bool every_word_looks_like_name(std::string_view surface) {
  std::size_t start = 0;
  while (start <= surface.size()) {
    std::size_t end = surface.find(' ', start);
    if (end == std::string_view::npos) end = surface.size();
    if (!looks_like_name(surface.substr(start, end - start))) return false;
    start = end + 1;
  }
  return true;
}

}  // namespace

std::vector<Token> ner_tag(std::vector<Token> tokens, const Lexicon& lexicon) {
  for (auto& token : tokens) {
    token.ner.reset();
    if (token.pos != Pos::Noun) continue;
    std::string key = normalize_key(token.surface);
    if (key.size() > 2 && key.ends_with("'s") && !lexicon.contains(key)) key.resize(key.size() - 2);
    if (auto kind = gazetteer_match(key, lexicon)) {
      token.ner = kind;
      continue;
    }
    // Fallback: capitalised, not sentence-initial, not a lexicon word.
    if (!token.known && !token.sentence_start && every_word_looks_like_name(token.surface)) {
      token.ner = Entity::Person;
    }
  }
  return tokens;
}

}  // namespace wsm::nlp
