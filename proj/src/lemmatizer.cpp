#include "wsm/nlp.hpp"

// Rule order here must match tools/build_lexicon.py, which uses the same
// rules to decide which inflections need an exception entry.
namespace wsm::nlp {

namespace {

constexpr int kMaxSteps = 8;

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_double_consonant(std::string_view stem) {
  if (stem.size() < 3) return false;
  const char c = stem.back();
  return c == stem[stem.size() - 2] && c >= 'a' && c <= 'z' && !is_vowel(c);
}

bool ends_with_any(std::string_view w, std::initializer_list<std::string_view> suffixes) {
  for (auto s : suffixes) {
    if (w.ends_with(s)) return true;
  }
  return false;
}

std::string drop(std::string_view w, std::size_t n) { return std::string(w.substr(0, w.size() - n)); }

std::string resolve_verb_stem(std::string stem, const Lexicon& lex) {
  if (is_double_consonant(stem)) {
    if (lex.contains(stem)) return stem;
    std::string single = drop(stem, 1);
    if (lex.contains(single)) return single;
    const char c = stem.back();
    return c == 'l' || c == 's' || c == 'z' || c == 'f' ? stem : single;
  }
  if (lex.contains(stem + "e")) return stem + "e";
  return stem;
}

std::string plural_step(std::string_view w) {
  if (w.size() > 4 && w.ends_with("ies")) return drop(w, 3) + "y";
  if (w.size() > 3 && w.ends_with("es")) {
    const auto stem = w.substr(0, w.size() - 2);
    if (ends_with_any(stem, {"s", "x", "z", "ch", "sh"})) return std::string(stem);
  }
  if (w.size() > 3 && w.ends_with("s") && !ends_with_any(w, {"ss", "us", "is"})) return drop(w, 1);
  return std::string(w);
}

std::string verb_step(std::string_view w, const Lexicon& lex) {
  if (w.size() > 4 && (w.ends_with("ies") || w.ends_with("ied"))) return drop(w, 3) + "y";
  if (w.size() > 5 && w.ends_with("ying")) return drop(w, 3);
  if (w.size() > 4 && w.ends_with("ing")) return resolve_verb_stem(drop(w, 3), lex);
  if (w.size() > 3 && w.ends_with("ed")) return resolve_verb_stem(drop(w, 2), lex);
  if (w.size() > 3 && w.ends_with("es")) {
    const auto stem = w.substr(0, w.size() - 2);
    if (ends_with_any(stem, {"s", "x", "z", "ch", "sh", "o"})) return std::string(stem);
  }
  if (w.size() > 3 && w.ends_with("s") && !ends_with_any(w, {"ss", "us", "is"})) return drop(w, 1);
  return std::string(w);
}

std::string adjective_step(std::string_view w, const Lexicon& lex) {
  for (std::string_view suffix : {"est", "er"}) {
    if (!w.ends_with(suffix) || w.size() <= suffix.size() + 2) continue;
    const std::string stem = drop(w, suffix.size());
    std::vector<std::string> candidates;
    if (stem.ends_with('i')) candidates.push_back(drop(stem, 1) + "y");
    if (is_double_consonant(stem)) candidates.push_back(drop(stem, 1));
    candidates.push_back(stem + "e");
    candidates.push_back(stem);
    for (const auto& c : candidates) {
      if (lex.lookup(c) == Pos::Adjective) return c;
    }
  }
  return std::string(w);
}

bool in_any_gazetteer(std::string_view key, const Lexicon& lex) {
  return lex.in_gazetteer(Entity::Organization, key) || lex.in_gazetteer(Entity::Place, key) ||
         lex.in_gazetteer(Entity::Person, key);
}

std::string lemma_step(const std::string& w, Pos pos, const Lexicon& lex) {
  if (w.size() > 2 && w.ends_with("'s") && !lex.contains(w)) return drop(w, 2);
  if (auto exception = lex.lemma_exception(w)) return std::string(*exception);
  if (pos != Pos::Noun && pos != Pos::Verb && pos != Pos::Adjective) return w;
  if (lex.contains(w) || in_any_gazetteer(w, lex)) return w;
  switch (pos) {
    case Pos::Noun: {
      std::string r = plural_step(w);
      if (r != w) return r;
      if (w.ends_with("ing") || w.ends_with("ed")) {
        std::string v = verb_step(w, lex);
        if (v != w && lex.lookup(v) == Pos::Verb) return v;
      }
      return w;
    }
    case Pos::Verb:
      return verb_step(w, lex);
    default:
      return adjective_step(w, lex);
  }
}

// Multi-word chunks lemmatize their head (last word) only.
std::string lemmatize_word(std::string key, Pos pos, const Lexicon& lex) {
  for (int i = 0; i < kMaxSteps; ++i) {
    std::string next = lemma_step(key, pos, lex);
    if (next == key || next.empty()) break;
    key = std::move(next);
  }
  return key;
}

}  // namespace

std::string lemmatize(std::string_view surface, Pos pos, const Lexicon& lexicon) {
  std::string key = normalize_key(surface);
  const auto space = key.rfind(' ');
  if (in_any_gazetteer(key, lexicon)) return key;
  if (space == std::string::npos) return lemmatize_word(std::move(key), pos, lexicon);
  return key.substr(0, space + 1) + lemmatize_word(key.substr(space + 1), pos, lexicon);
}

}  // namespace wsm::nlp
