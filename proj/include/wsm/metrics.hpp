#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsm/nlp.hpp"

namespace wsm::metrics {

enum class Mode { Pos, Ner };
enum class Metric { Frequency, SuddenChange, TfIdf };
enum class Category { Noun, Verb, Adjective, Person, Place, Organization };

// Stacking order of the three categories of a mode.
std::array<Category, 3> categories(Mode mode);
// Position of `category` within categories(mode of category).
std::size_t category_slot(Category category);

std::string_view to_string(Mode mode);
std::string_view to_string(Metric metric);
std::string_view to_string(Category category);
std::optional<Mode> parse_mode(std::string_view name);
std::optional<Metric> parse_metric(std::string_view name);
std::optional<Category> parse_category(std::string_view name);

// Exact non-negative rational; compared by cross-multiplication.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct TermStats {
  std::string term;  // lemma
  Category category = Category::Noun;
  std::vector<std::int64_t> frequency;  // F_t, one per box
  std::vector<Ratio> sudden;            // S_t
  std::vector<double> tfidf;
  std::int64_t document_frequency = 0;  // boxes with F_t > 0

  std::int64_t total() const;
};

// S_t = (F_t + 1) / (F_{t-1} + 1) with F_0 = 0.
std::vector<Ratio> sudden_change(std::span<const std::int64_t> frequency);

// tfidf_t = F_t · ln(n / df); every box is one document.
std::vector<double> tfidf(std::span<const std::int64_t> frequency, std::int64_t document_frequency,
                          std::int64_t box_count);

// Counts (lemma, category) per box and fills all three series. POS mode keeps
// Noun/Verb/Adjective tokens; NER mode keeps entity-tagged tokens. Sorted by
// (category slot, term). Throws NoTermsExtracted when nothing is counted.
std::vector<TermStats> count_frequencies(std::span<const std::vector<nlp::Token>> boxes, Mode mode);

// W(t, c): per category slot, per box, the sum of F_t over all terms.
std::vector<std::vector<double>> category_weights(std::span<const TermStats> stats, std::size_t box_count);

struct RankedTerm {
  std::string term;
  double value = 0;  // metric value at the box
  std::int64_t total = 0;

  friend bool operator==(const RankedTerm&, const RankedTerm&) = default;
};

struct BoxSelection {
  std::size_t box = 0;
  Category category = Category::Noun;
  std::vector<RankedTerm> terms;  // best first, at most k
};

// Per (box, category): terms with F_t > 0 ranked by metric desc, total
// frequency desc, term asc; top k kept. Ordered by box, then category slot.
std::vector<BoxSelection> select_top_k(std::span<const TermStats> stats, Mode mode, Metric metric,
                                       std::size_t k);

}  // namespace wsm::metrics
