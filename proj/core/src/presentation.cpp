#include <symgeo/presentation.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace symgeo {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(position) +
                         ": " + message),
      position_(position) {}

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    expect('<');
    std::vector<std::string> gens;
    skip_ws();
    if (peek() != '|') {
      gens.push_back(name());
      while (skip_ws(), peek() == ',') {
        ++pos_;
        gens.push_back(name());
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (gens[i] == gens[j])
          throw ParseError(pos_, "duplicate generator '" + gens[i] + "'");
    gen_names_ = &gens;

    expect('|');
    std::vector<Word> rels;
    skip_ws();
    if (peek() != '>') {
      rels.push_back(relator());
      while (skip_ws(), peek() == ',') {
        ++pos_;
        rels.push_back(relator());
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "trailing characters after '>'");
    return Presentation::make(std::move(gens), std::move(rels));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected a generator name");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t gen_index() {
    const std::size_t at = pos_;
    skip_ws();
    const std::string n = name();
    auto it = std::find(gen_names_->begin(), gen_names_->end(), n);
    if (it == gen_names_->end())
      throw ParseError(at, "unknown generator '" + n + "'");
    return static_cast<std::uint32_t>(it - gen_names_->begin());
  }

  long long exponent() {
    expect('^');
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected digits after '^'");
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1LL << 40)) throw ParseError(pos_, "exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Word relator() {
    Word w;
    bool any = false;
    for (;;) {
      const char c = peek();
      if (c == '[') {
        ++pos_;
        const std::uint32_t a = gen_index();
        expect(',');
        const std::uint32_t b = gen_index();
        expect(']');
        w.append(commutator(a, b));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::uint32_t g = gen_index();
        long long e = 1;
        if (peek() == '^') e = exponent();
        w.push(g, e);
        any = true;
      } else {
        break;
      }
    }
    if (!any) throw ParseError(pos_, "expected a relator");
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gen_names_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).run();
}

Presentation Presentation::make(std::vector<std::string> generators,
                                std::vector<Word> relators) {
  for (const std::string& g : generators)
    if (!valid_name(g))
      throw std::invalid_argument("invalid generator name '" + g + "'");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j])
        throw std::invalid_argument("duplicate generator name '" +
                                    generators[i] + "'");
  Presentation p;
  p.generators = std::move(generators);
  for (Word& w : relators) {
    Word r = free_reduce(w);
    if (r.empty() && p.generators.empty())
      throw std::invalid_argument(
          "empty relator in a generator-free presentation");
    for (const Syllable& s : r.syllables())
      if (s.gen >= p.generators.size())
        throw std::invalid_argument("relator uses an unknown generator index");
    p.relators.push_back(std::move(r));
  }
  return p;
}

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& names) {
  std::ostringstream os;
  const auto& syl = w.syllables();
  for (std::size_t j = 0; j < syl.size(); ++j) {
    if (j) os << " ";
    os << names.at(syl[j].gen);
    if (syl[j].exp != 1) os << "^" << syl[j].exp;
  }
  return os.str();
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) os << ", ";
    os << generators[i];
  }
  if (!generators.empty()) os << " ";
  os << "|";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    os << (i ? ", " : " ");
    if (relators[i].empty())
      os << generators.at(0) << "^0";  // only way to spell the empty relator
    else
      os << word_to_string(relators[i], generators);
  }
  os << " >";
  return os.str();
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Syllable& s : p.relators[r].syllables())
      m.at(r, s.gen) += s.exp;
  return m;
}

AbelianInvariants abelianize(const Presentation& p) {
  return cokernel_invariants(exponent_matrix(p));
}

namespace {

std::string fresh_partner_name(const std::string& base,
                               const std::vector<std::string>& taken) {
  std::string candidate = base + "_inv";
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end())
    candidate += "_";
  return candidate;
}

}  // namespace

PositiveRewrite positive_rewrite(const Presentation& p) {
  const std::size_t g = p.generators.size();
  PositiveRewrite out;

  std::vector<std::string> doubled;
  doubled.reserve(2 * g);
  for (const std::string& name : p.generators) {
    doubled.push_back(name);
    doubled.push_back(fresh_partner_name(name, p.generators));
  }
  /* partner names could collide with each other only if the input had
   * near-identical names; make() re-validates uniqueness */
  out.base = Presentation::make(std::move(doubled), {});

  for (std::uint32_t i = 0; i < g; ++i) {
    Word pair;
    pair.push(2 * i, 1);
    pair.push(2 * i + 1, 1);
    out.pairing.push_back(std::move(pair));
  }

  for (const Word& w : p.relators) {
    Word pos;
    for (const Syllable& s : w.syllables()) {
      if (s.exp > 0)
        pos.push(2 * s.gen, s.exp);
      else
        pos.push(2 * s.gen + 1, -s.exp);
    }
    out.rewritten.push_back(std::move(pos));
  }
  return out;
}

Presentation PositiveRewrite::assembled() const {
  std::vector<Word> rels = pairing;
  rels.insert(rels.end(), rewritten.begin(), rewritten.end());
  return Presentation::make(base.generators, std::move(rels));
}

Word doubled_surface_relator(std::size_t g) {
  Word w;
  for (std::uint32_t i = 0; i < g; ++i)
    w.append(commutator(2 * i, 2 * i + 1));
  return w;
}

IndexedRelationSet double_index(const PositiveRewrite& pr) {
  IndexedRelationSet set;
  std::size_t next = 1;
  for (const Word& w : pr.rewritten) {
    std::vector<IndexedLetter> letters;
    for (const Syllable& s : w.syllables()) {
      IndexedLetter l;
      l.inverse_letter = (s.gen % 2) == 1;
      l.pair = s.gen / 2;
      l.second = next++;
      l.exp = s.exp;
      letters.push_back(l);
    }
    set.words.push_back(std::move(letters));
  }
  set.n = next;  // 1 + total syllables
  return set;
}

std::vector<Word> erase_second_indices(const IndexedRelationSet& set) {
  std::vector<Word> out;
  for (const auto& letters : set.words) {
    Word w;
    for (const IndexedLetter& l : letters)
      w.push(2 * l.pair + (l.inverse_letter ? 1 : 0), l.exp);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace symgeo
