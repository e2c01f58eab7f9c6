#include <cstdlib>
#include <fstream>

#include "wsm/error.hpp"
#include "wsm/nlp.hpp"
#include "wsm/utf8.hpp"

#ifndef WSM_BUNDLED_LEXICON_DIR
#define WSM_BUNDLED_LEXICON_DIR "data/lexicon"
#endif

namespace wsm::nlp {

namespace {

constexpr std::array<std::string_view, 10> kPosNames = {
    "Noun",        "Verb",    "Adjective", "Adverb", "Determiner",
    "Conjunction", "Preposition", "Pronoun", "Number", "Other"};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Calls `fn(line, line_number)` for every non-blank, non-comment line.
template <class Fn>
bool for_each_line(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (strip(view).empty() || strip(view).front() == '#') continue;
    fn(view, number);
  }
  return true;
}

[[noreturn]] void bad_line(const std::filesystem::path& path, std::size_t number, std::string_view why) {
  throw Error(Stage::Nlp, ErrorCode::BadLexicon,
              path.string() + ":" + std::to_string(number) + ": " + std::string(why));
}

}  // namespace

std::string_view to_string(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

std::string_view to_string(Entity entity) {
  switch (entity) {
    case Entity::Person: return "Person";
    case Entity::Place: return "Place";
    case Entity::Organization: return "Organization";
  }
  return "Unknown";
}

std::optional<Pos> parse_pos(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Tokenization mode) { return mode == Tokenization::Word ? "word" : "chunk"; }

std::optional<Tokenization> parse_tokenization(std::string_view name) {
  if (name == "word") return Tokenization::Word;
  if (name == "chunk") return Tokenization::NounChunk;
  return std::nullopt;
}

bool is_closed_class(Pos pos) {
  return pos == Pos::Determiner || pos == Pos::Conjunction || pos == Pos::Preposition ||
         pos == Pos::Pronoun;
}

std::string normalize_key(std::string_view surface) {
  std::string lower = utf8::to_lower(surface);
  std::string out;
  out.reserve(lower.size());
  std::size_t pos = 0;
  while (pos < lower.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(lower, pos);
    if (cp == 0x2019 || cp == 0x2018 || cp == 0x02BC) {
      out.push_back('\'');
    } else {
      out.append(lower, start, pos - start);
    }
  }
  return out;
}

Lexicon Lexicon::load(const std::filesystem::path& dir) {
  Lexicon lex;
  const auto lexicon_path = dir / "lexicon.tsv";
  const bool found = for_each_line(lexicon_path, [&](std::string_view line, std::size_t n) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) bad_line(lexicon_path, n, "expected surface<TAB>tag");
    const auto surface = strip(line.substr(0, tab));
    const auto pos = parse_pos(strip(line.substr(tab + 1)));
    if (surface.empty() || !pos) bad_line(lexicon_path, n, "unknown tag");
    lex.add_word(surface, *pos);
  });
  if (!found) {
    throw Error(Stage::Nlp, ErrorCode::BadLexicon, "cannot read " + lexicon_path.string());
  }

  const auto exceptions_path = dir / "lemma_exceptions.tsv";
  for_each_line(exceptions_path, [&](std::string_view line, std::size_t n) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) bad_line(exceptions_path, n, "expected surface<TAB>lemma");
    const auto surface = strip(line.substr(0, tab));
    const auto lemma = strip(line.substr(tab + 1));
    if (surface.empty() || lemma.empty()) bad_line(exceptions_path, n, "empty field");
    lex.add_exception(surface, lemma);
  });

  for_each_line(dir / "stopwords.txt", [&](std::string_view line, std::size_t) { lex.add_stopword(strip(line)); });

  const std::array<std::pair<Entity, const char*>, 3> gazetteers = {{
      {Entity::Person, "persons.txt"},
      {Entity::Place, "places.txt"},
      {Entity::Organization, "organizations.txt"},
  }};
  for (const auto& [kind, file] : gazetteers) {
    for_each_line(dir / file, [&, kind = kind](std::string_view line, std::size_t) {
      lex.add_entity(kind, strip(line));
    });
  }
  return lex;
}

std::filesystem::path Lexicon::default_directory() {
  if (const char* env = std::getenv("WSM_LEXICON_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return WSM_BUNDLED_LEXICON_DIR;
}

void Lexicon::add_word(std::string_view surface, Pos pos) { words_.insert_or_assign(normalize_key(surface), pos); }

void Lexicon::add_exception(std::string_view surface, std::string_view lemma) {
  exceptions_.insert_or_assign(normalize_key(surface), normalize_key(lemma));
}

void Lexicon::add_stopword(std::string_view surface) { stopwords_.insert(normalize_key(surface)); }

void Lexicon::add_entity(Entity kind, std::string_view name) {
  gazetteers_[static_cast<std::size_t>(kind)].insert(normalize_key(name));
}

std::optional<Pos> Lexicon::lookup(std::string_view key) const {
  auto it = words_.find(key);
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string_view> Lexicon::lemma_exception(std::string_view key) const {
  auto it = exceptions_.find(key);
  if (it == exceptions_.end()) return std::nullopt;
  return std::string_view(it->second);
}

bool Lexicon::in_gazetteer(Entity kind, std::string_view key) const {
  const auto& set = gazetteers_[static_cast<std::size_t>(kind)];
  return set.find(key) != set.end();
}

std::size_t Lexicon::gazetteer_size(Entity kind) const { return gazetteers_[static_cast<std::size_t>(kind)].size(); }

std::vector<std::pair<std::string, Pos>> Lexicon::entries() const { return {words_.begin(), words_.end()}; }

std::vector<std::string> Lexicon::closed_class_words() const {
  std::vector<std::string> out;
  for (const auto& [word, pos] : words_) {
    if (is_closed_class(pos)) out.push_back(word);
  }
  return out;
}

}  // namespace wsm::nlp
