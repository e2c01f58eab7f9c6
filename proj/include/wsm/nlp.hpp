#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wsm::nlp {

enum class Pos {
  Noun,
  Verb,
  Adjective,
  Adverb,
  Determiner,
  Conjunction,
  Preposition,
  Pronoun,
  Number,
  Other,
};

enum class Entity { Person, Place, Organization };

enum class Tokenization { Word, NounChunk };

std::string_view to_string(Pos pos);
std::string_view to_string(Entity entity);
std::optional<Pos> parse_pos(std::string_view name);
std::string_view to_string(Tokenization mode);  // "word" / "chunk"
std::optional<Tokenization> parse_tokenization(std::string_view name);

bool is_closed_class(Pos pos);

struct Token {
  std::string surface;
  std::string lemma;  // lowercase root form, filled by lemmatize
  Pos pos = Pos::Other;
  std::optional<Entity> ner;  // only ever set on nouns
  bool sentence_start = false;
  bool boundary_after = false;  // punctuation followed this token
  bool known = false;           // tag came from the lexicon

  friend bool operator==(const Token&, const Token&) = default;
};

// One whitespace-delimited unit with edge punctuation removed.
struct Unit {
  std::string surface;
  bool sentence_start = false;
  bool boundary_after = false;
};

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
template <class V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;
}  // namespace detail

// Immutable word knowledge: surface→tag lexicon, lemma exceptions, stop-list
// and three gazetteers. All keys are lowercase.
class Lexicon {
 public:
  // Reads lexicon.tsv, lemma_exceptions.tsv, stopwords.txt, persons.txt,
  // places.txt and organizations.txt from `dir`. Missing optional files are
  // treated as empty; a missing lexicon.tsv throws BadLexicon.
  static Lexicon load(const std::filesystem::path& dir);

  // Directory named by WSM_LEXICON_DIR, else the bundled one.
  static std::filesystem::path default_directory();

  void add_word(std::string_view surface, Pos pos);
  void add_exception(std::string_view surface, std::string_view lemma);
  void add_stopword(std::string_view surface);
  void add_entity(Entity kind, std::string_view name);

  std::optional<Pos> lookup(std::string_view key) const;
  bool contains(std::string_view key) const { return words_.find(key) != words_.end(); }
  std::optional<std::string_view> lemma_exception(std::string_view key) const;
  bool is_stopword(std::string_view key) const { return stopwords_.find(key) != stopwords_.end(); }
  bool in_gazetteer(Entity kind, std::string_view key) const;

  std::size_t word_count() const { return words_.size(); }
  std::size_t gazetteer_size(Entity kind) const;
  // (surface, tag) pairs in unspecified order.
  std::vector<std::pair<std::string, Pos>> entries() const;
  std::vector<std::string> closed_class_words() const;

 private:
  detail::StringMap<Pos> words_;
  detail::StringMap<std::string> exceptions_;
  detail::StringSet stopwords_;
  std::array<detail::StringSet, 3> gazetteers_;
};

// Lowercases, folds typographic apostrophes to `'`.
std::string normalize_key(std::string_view surface);

// --- tokenize --------------------------------------------------------------

// Splits on whitespace runs and strips leading/trailing punctuation; interior
// apostrophes and hyphens stay. Empty units are dropped.
std::vector<Unit> split_units(std::string_view text);

// Word mode returns the unit surfaces. NounChunk mode tags the units and fuses
// maximal Adjective* Noun+ runs into one space-joined surface.
std::vector<std::string> tokenize(std::string_view text, Tokenization mode, const Lexicon& lexicon);

// Fuses maximal Adjective* Noun+ runs of already tagged tokens. Runs never
// cross punctuation or a sentence start. The fused token is a Noun.
std::vector<Token> fuse_noun_chunks(std::span<const Token> tokens);

// --- tag ---------------------------------------------------------------------

// Lexicon lookup, then suffix rules, then numeric literals, then Noun. An
// unknown -ing/-ed word right after a determiner becomes a Noun.
std::vector<Token> pos_tag(std::span<const Unit> units, const Lexicon& lexicon);
std::vector<Token> pos_tag(std::span<const std::string> surfaces, const Lexicon& lexicon);

// Tags nouns from the gazetteers (Organization > Place > Person). Unknown
// capitalised nouns that do not open a sentence fall back to Person.
std::vector<Token> ner_tag(std::vector<Token> tokens, const Lexicon& lexicon);

// Lowercase root form. Exceptions first, then suffix rules; applied until it
// reaches a fixed point, so it is idempotent.
std::string lemmatize(std::string_view surface, Pos pos, const Lexicon& lexicon);

// Drops determiners, conjunctions, prepositions, pronouns and stop-list words.
std::vector<Token> filter_stopwords(std::vector<Token> tokens, const Lexicon& lexicon);

// tokenize → pos_tag → lemmatize → ner_tag → filter_stopwords. NounChunk mode
// first merges multi-word gazetteer names, then fuses noun chunks.
std::vector<Token> analyze(std::string_view text, Tokenization mode, const Lexicon& lexicon);

}  // namespace wsm::nlp
