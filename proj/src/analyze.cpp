#include "wsm/nlp.hpp"

namespace wsm::nlp {

namespace {

constexpr std::size_t kMaxEntityWords = 4;

bool in_any_gazetteer(std::string_view key, const Lexicon& lexicon) {
  return lexicon.in_gazetteer(Entity::Organization, key) || lexicon.in_gazetteer(Entity::Place, key) ||
         lexicon.in_gazetteer(Entity::Person, key);
}

// Longest gazetteer match of 2..4 words starting at each position becomes one
// noun token that later chunking leaves alone.
std::vector<Token> merge_entity_spans(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t matched = 0;
    std::string surface;
    for (std::size_t len = std::min(kMaxEntityWords, tokens.size() - i); len >= 2; --len) {
      bool clean = true;
      std::string joined = tokens[i].surface;
      for (std::size_t j = i + 1; j < i + len; ++j) {
        clean = clean && !tokens[j - 1].boundary_after && !tokens[j].sentence_start;
        joined += ' ';
        joined += tokens[j].surface;
      }
      if (clean && in_any_gazetteer(normalize_key(joined), lexicon)) {
        matched = len;
        surface = std::move(joined);
        break;
      }
    }
    if (matched == 0) {
      out.push_back(tokens[i++]);
      continue;
    }
    if (!out.empty()) out.back().boundary_after = true;
    Token entity;
    entity.surface = std::move(surface);
    entity.pos = Pos::Noun;
    entity.sentence_start = tokens[i].sentence_start;
    entity.boundary_after = true;
    entity.known = true;
    out.push_back(std::move(entity));
    i += matched;
  }
  return out;
}

}  // namespace

std::vector<Token> filter_stopwords(std::vector<Token> tokens, const Lexicon& lexicon) {
  std::erase_if(tokens, [&](const Token& t) {
    return is_closed_class(t.pos) || lexicon.is_stopword(normalize_key(t.surface));
  });
  return tokens;
}

std::vector<Token> analyze(std::string_view text, Tokenization mode, const Lexicon& lexicon) {
  const auto units = split_units(text);
  std::vector<Token> tokens = pos_tag(units, lexicon);
  if (mode == Tokenization::NounChunk) tokens = fuse_noun_chunks(merge_entity_spans(tokens, lexicon));
  for (auto& t : tokens) t.lemma = lemmatize(t.surface, t.pos, lexicon);
  tokens = ner_tag(std::move(tokens), lexicon);
  return filter_stopwords(std::move(tokens), lexicon);
}

}  // namespace wsm::nlp
