#include <array>

#include "wsm/nlp.hpp"
#include "wsm/utf8.hpp"

namespace wsm::nlp {

namespace {

struct SuffixRule {
  std::string_view suffix;
  Pos pos;
};

// Checked in order; the first match wins.
constexpr std::array<SuffixRule, 11> kSuffixRules = {{
    {"ly", Pos::Adverb},
    {"ing", Pos::Verb},
    {"ed", Pos::Verb},
    {"ous", Pos::Adjective},
    {"ful", Pos::Adjective},
    {"ive", Pos::Adjective},
    {"able", Pos::Adjective},
    {"tion", Pos::Noun},
    {"ness", Pos::Noun},
    {"ment", Pos::Noun},
    {"ity", Pos::Noun},
}};

std::optional<Pos> suffix_pos(std::string_view key) {
  for (const auto& rule : kSuffixRules) {
    if (key.size() >= rule.suffix.size() + 2 && key.ends_with(rule.suffix)) return rule.pos;
  }
  return std::nullopt;
}

// 42, 3.5, 1,000, -7, $20, 50%, 1990s, 2nd
bool is_numeric_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-' || s.front() == '$')) s.remove_prefix(1);
  for (std::string_view tail : {"st", "nd", "rd", "th", "s", "%"}) {
    if (s.size() > tail.size() && s.ends_with(tail)) {
      s.remove_suffix(tail.size());
      break;
    }
  }
  if (s.empty()) return false;
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != ',' && c != '.') {
      return false;
    }
  }
  return digit && s.front() >= '0' && s.front() <= '9';
}

bool has_word_char(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    if (utf8::is_word_char(utf8::decode(s, pos))) return true;
  }
  return false;
}

std::vector<std::string> singular_candidates(std::string_view key) {
  std::vector<std::string> out;
  if (key.size() > 4 && key.ends_with("ies")) out.push_back(std::string(key.substr(0, key.size() - 3)) + "y");
  if (key.size() > 3 && key.ends_with("es")) out.emplace_back(key.substr(0, key.size() - 2));
  if (key.size() > 3 && key.ends_with("s") && !key.ends_with("ss")) out.emplace_back(key.substr(0, key.size() - 1));
  return out;
}

struct Decision {
  Pos pos;
  bool known;
  bool from_suffix;
};

Decision decide(std::string_view surface, const Lexicon& lexicon) {
  const std::string key = normalize_key(surface);
  if (!has_word_char(key)) return {Pos::Other, false, false};

  // (1) lexicon: exact, possessive, then regular -s forms
  if (auto pos = lexicon.lookup(key)) return {*pos, true, false};
  if (key.size() > 2 && key.ends_with("'s")) {
    const auto stem = std::string_view(key).substr(0, key.size() - 2);
    return {Pos::Noun, lexicon.contains(stem), false};
  }
  for (const auto& cand : singular_candidates(key)) {
    if (auto pos = lexicon.lookup(cand); pos && (*pos == Pos::Noun || *pos == Pos::Verb)) {
      return {*pos, true, false};
    }
  }
  // (2) suffix rules
  if (auto pos = suffix_pos(key)) return {*pos, false, true};
  for (const auto& cand : singular_candidates(key)) {
    if (auto pos = suffix_pos(cand); pos == Pos::Noun) return {Pos::Noun, false, true};
  }
  // (3) numbers, (4) default
  if (is_numeric_literal(key)) return {Pos::Number, false, false};
  return {Pos::Noun, false, false};
}

}  // namespace

std::vector<Token> pos_tag(std::span<const Unit> units, const Lexicon& lexicon) {
  std::vector<Token> tokens;
  tokens.reserve(units.size());
  for (const auto& unit : units) {
    const Decision d = decide(unit.surface, lexicon);
    Token t;
    t.surface = unit.surface;
    t.pos = d.pos;
    t.known = d.known;
    t.sentence_start = unit.sentence_start;
    t.boundary_after = unit.boundary_after;
    // context rule: "the studying" reads as a noun
    if (d.from_suffix && d.pos == Pos::Verb && !tokens.empty() && tokens.back().pos == Pos::Determiner) {
      t.pos = Pos::Noun;
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<Token> pos_tag(std::span<const std::string> surfaces, const Lexicon& lexicon) {
  std::vector<Unit> units;
  units.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i) units.push_back(Unit{surfaces[i], i == 0, false});
  return pos_tag(units, lexicon);
}

}  // namespace wsm::nlp
