#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace symgeo {

/* One maximal power g^e with e != 0. */
struct Syllable {
  std::uint32_t gen = 0;
  long long exp = 0;

  bool operator==(const Syllable&) const = default;
};

/* A word in a free group, stored as a syllable list.  Words built through
 * push() stay free-reduced; raw() accepts anything and the caller is
 * expected to free_reduce. */
class Word {
 public:
  Word() = default;
  static Word raw(std::vector<Syllable> syl);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  /* append with cancellation against the current tail */
  void push(std::uint32_t gen, long long exp);
  void append(const Word& w);

  Word inverse() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syl_;
};

/* Merge adjacent equal-generator syllables and drop vanishing powers,
 * cascading.  Idempotent. */
Word free_reduce(const Word& w);

/* Number of maximal powers of the free reduction: |x^5 y x^-2| = 3,
 * counted per syllable rather than per letter. */
std::size_t syllable_length(const Word& w);

/* a b a^-1 b^-1 */
Word commutator(std::uint32_t a, std::uint32_t b);

/* Replace every generator by an arbitrary word and free-reduce. */
Word substitute(const Word& w, const std::function<Word(std::uint32_t)>& image);

}  // namespace symgeo
