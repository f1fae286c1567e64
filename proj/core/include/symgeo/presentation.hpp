#pragma once

#include <symgeo/linalg.hpp>
#include <symgeo/word.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symgeo {

/* A finite group presentation < generators | relators >.  Relators are
 * stored free-reduced but not cyclically reduced. */
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /* validates names and indices, free-reduces the relators */
  static Presentation make(std::vector<std::string> generators,
                           std::vector<Word> relators);

  std::size_t generator_count() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }

  /* generators minus relators; an invariant of the presentation only,
   * the group-level value is not computable */
  long long deficiency() const {
    return static_cast<long long>(generators.size()) -
           static_cast<long long>(relators.size());
  }

  /* round-trips through parse_presentation */
  std::string to_string() const;

  bool operator==(const Presentation&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/* Grammar:
 *   presentation := '<' names? '|' relators? '>'
 *   names        := name (',' name)*
 *   relators     := relator (',' relator)*
 *   relator      := unit+
 *   unit         := name ('^' '-'? digits)? | '[' name ',' name ']'
 * Names match [A-Za-z][A-Za-z0-9_]*, whitespace is insignificant.
 * Errors carry the byte offset of the offending token. */
Presentation parse_presentation(std::string_view text);

/* "x^3 y^-1" over the given generator names */
std::string word_to_string(const Word& w,
                           const std::vector<std::string>& names);

/* rows = relators, cols = generators, entries = exponent sums */
IntMatrix exponent_matrix(const Presentation& p);

AbelianInvariants abelianize(const Presentation& p);

/* Doubled presentation in which every relator becomes a positive word:
 * each generator x_i gets a partner y_i standing for its inverse, tied by
 * the relation x_i y_i; occurrences of x_i^-a (a > 0) in a relator are
 * replaced by y_i^a.  Generator 2i is x_i, generator 2i+1 is y_i. */
struct PositiveRewrite {
  Presentation base;            // 2g generators, no relators
  std::vector<Word> pairing;    // g words x_i y_i
  std::vector<Word> rewritten;  // r positive words

  /* base generators with pairing + rewritten installed as relators */
  Presentation assembled() const;
};

PositiveRewrite positive_rewrite(const Presentation& p);

/* x_1 y_1 x_1^-1 y_1^-1 ... x_g y_g x_g^-1 y_g^-1 over the doubled
 * (interleaved) generator indexing */
Word doubled_surface_relator(std::size_t g);

/* A letter of a positively rewritten relator with its second index
 * attached: x_{pair, second}^exp or y_{pair, second}^exp. */
struct IndexedLetter {
  bool inverse_letter = false;  // true for y
  std::uint32_t pair = 0;       // 0-based first index
  std::size_t second = 0;       // 1-based, strictly increasing globally
  long long exp = 0;            // > 0

  bool operator==(const IndexedLetter&) const = default;
};

struct IndexedRelationSet {
  std::vector<std::vector<IndexedLetter>> words;
  /* 1 + total syllable count across all rewritten relators */
  std::size_t n = 0;
};

/* Assign second indices 1..n-1 left to right across the concatenated
 * rewritten relators, one index per syllable. */
IndexedRelationSet double_index(const PositiveRewrite& pr);

/* Drop second indices and map pair indices back to doubled generators;
 * inverse of double_index up to the syllable structure. */
std::vector<Word> erase_second_indices(const IndexedRelationSet& set);

}  // namespace symgeo
