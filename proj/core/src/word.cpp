#include <symgeo/word.hpp>

#include <utility>

namespace symgeo {

Word Word::raw(std::vector<Syllable> syl) {
  Word w;
  w.syl_ = std::move(syl);
  return w;
}

void Word::push(std::uint32_t gen, long long exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const Syllable& s : w.syl_) push(s.gen, s.exp);
}

Word Word::inverse() const {
  Word r;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    r.push(it->gen, -it->exp);
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (const Syllable& s : w.syllables()) r.push(s.gen, s.exp);
  return r;
}

std::size_t syllable_length(const Word& w) {
  return free_reduce(w).syllables().size();
}

Word commutator(std::uint32_t a, std::uint32_t b) {
  Word w;
  w.push(a, 1);
  w.push(b, 1);
  w.push(a, -1);
  w.push(b, -1);
  return w;
}

Word substitute(const Word& w,
                const std::function<Word(std::uint32_t)>& image) {
  Word r;
  for (const Syllable& s : w.syllables()) {
    const Word img = image(s.gen);
    const Word piece = s.exp > 0 ? img : img.inverse();
    long long reps = s.exp > 0 ? s.exp : -s.exp;
    for (long long i = 0; i < reps; ++i) r.append(piece);
  }
  return r;
}

}  // namespace symgeo
