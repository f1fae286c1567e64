#include <symgeo/manifold.hpp>

#include <symgeo/errors.hpp>

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace symgeo {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    case Tri::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::yes && b == Tri::yes) return Tri::yes;
  return Tri::unknown;
}

/* chi + sigma = 2 - 2 b1 + 2 b+ pins b+ once chi, sigma, b1 are exact. */
long long derive_b_plus(long long chi, long long sigma, long long b1,
                        const char* where) {
  const long long twice = chi + sigma - 2 + 2 * b1;
  if (twice % 2 != 0)
    throw internal_error(std::string(where) +
                         ": chi + sigma parity breaks the b+ identity");
  return twice / 2;
}

void set_derived_b_plus(ManifoldClass& m, const char* where) {
  const long long v = derive_b_plus(m.chi, m.sigma, m.b1, where);
  if (m.b_plus && *m.b_plus != v)
    throw internal_error(std::string(where) + ": pinned b+ contradicts the "
                                              "chi/sigma/b1 identity");
  m.b_plus = v;
}

MarkedTorus square_zero(std::string label, ComplementPi1 complement,
                        std::vector<Pi1Element> image) {
  MarkedTorus t;
  t.label = std::move(label);
  t.complement = complement;
  t.image = std::move(image);
  return t;
}

std::string_view to_string(ComplementPi1 c) {
  switch (c) {
    case ComplementPi1::trivial:
      return "trivial";
    case ComplementPi1::infinite_cyclic_surjected_by_torus:
      return "infinite_cyclic_surjected_by_torus";
    case ComplementPi1::unknown:
      return "unknown";
  }
  return "unknown";
}

/* synthetic names g0, g1, ... for words detached from any presentation */
std::string generic_word_text(const Word& w) {
  std::uint32_t top = 0;
  for (const Syllable& s : w.syllables()) top = std::max(top, s.gen);
  std::vector<std::string> names(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < names.size(); ++i)
    names[i] = "g" + std::to_string(i);
  return word_to_string(w, names);
}

nlohmann::json element_to_json(const Pi1Element& e) {
  if (const std::uint32_t* i = std::get_if<std::uint32_t>(&e))
    return nlohmann::json{{"generator", *i}};
  return nlohmann::json{{"word", generic_word_text(std::get<Word>(e))}};
}

long long binomial2(long long m) { return m * (m - 1) / 2; }

}  // namespace

const MarkedTorus& ManifoldClass::mark(std::string_view label) const {
  for (const MarkedTorus& t : marks)
    if (t.label == label) return t;
  throw std::invalid_argument("no marked torus labeled '" +
                              std::string(label) + "'");
}

bool ManifoldClass::has_mark(std::string_view label) const {
  for (const MarkedTorus& t : marks)
    if (t.label == label) return true;
  return false;
}

ManifoldClass sym2(long long g) {
  if (g < 0) throw std::invalid_argument("Sym2: genus must be >= 0");
  ManifoldClass m;
  m.expr = "Sym2(" + std::to_string(g) + ")";
  m.chi = 3 - 4 * g + binomial2(2 * g);
  m.sigma = 1 - g;
  m.b1 = 2 * g;
  m.b_plus = g * g - g + 1;
  m.pi1 = Pi1Descriptor::family(GroupFamily::free_abelian(2 * g));
  /* Sym2(0) is the projective plane; beyond that neither flag is pinned
   * except that Sym2(2) blows down (it is the Jacobian blown up once) */
  m.spin = g == 0 ? Tri::no : Tri::unknown;
  m.minimal = g == 0 ? Tri::yes : (g == 2 ? Tri::no : Tri::unknown);
  m.symplectic = true;
  if (g >= 1)
    m.marks.push_back(square_zero("T", ComplementPi1::unknown,
                                  {std::uint32_t{0}, std::uint32_t{1}}));
  set_derived_b_plus(m, "Sym2");
  return m;
}

ManifoldClass dolgachev(long long p, long long q) {
  if (p < 1 || q < 1) throw std::invalid_argument("dolgachev: need p, q >= 1");
  const long long n = std::gcd(p, q);
  ManifoldClass m;
  m.expr = "dolgachev(" + std::to_string(p) + "," + std::to_string(q) + ")";
  m.chi = 12;
  m.sigma = -8;
  m.b1 = 0;
  m.b_plus = 1;
  m.pi1 = Pi1Descriptor::family(GroupFamily::cyclic(n));
  /* simply connected log transforms are never spin; p = 1 or q = 1
   * degenerates to the rational elliptic surface, which is not minimal */
  m.spin = n == 1 ? Tri::no : Tri::unknown;
  m.minimal = (p >= 2 && q >= 2) ? Tri::yes : Tri::no;
  m.symplectic = true;
  set_derived_b_plus(m, "dolgachev");
  return m;
}

ManifoldClass atomic(std::string_view name) {
  ManifoldClass m;
  m.expr = std::string(name);
  m.symplectic = true;

  if (name == "E1") {
    m.chi = 12;
    m.sigma = -8;
    m.b_plus = 1;
    m.spin = Tri::no;
    m.minimal = Tri::no;
    m.marks.push_back(square_zero("F", ComplementPi1::trivial, {}));
  } else if (name == "K3") {
    m.chi = 24;
    m.sigma = -16;
    m.b_plus = 3;
    m.spin = Tri::yes;
    m.minimal = Tri::yes;
    m.marks.push_back(square_zero("F", ComplementPi1::trivial, {}));
  } else if (name == "CP2") {
    m.chi = 3;
    m.sigma = 1;
    m.b_plus = 1;
    m.spin = Tri::no;
    m.minimal = Tri::yes;
  } else if (name == "CP2bar") {
    m.chi = 3;
    m.sigma = -1;
    m.b_plus = 0;
    m.spin = Tri::no;
    m.minimal = Tri::unknown;
    m.symplectic = false;  // b+ = 0 rules out a symplectic form
  } else if (name == "S2xS2") {
    m.chi = 4;
    m.sigma = 0;
    m.b_plus = 1;
    m.spin = Tri::yes;
    m.minimal = Tri::yes;
  } else if (name == "T4") {
    m.chi = 0;
    m.sigma = 0;
    m.b1 = 4;
    m.b_plus = 3;
    m.spin = Tri::yes;
    m.minimal = Tri::yes;
    m.pi1 = Pi1Descriptor::family(GroupFamily::free_abelian(4));
    for (std::uint32_t i = 0; i < 4; ++i)
      for (std::uint32_t j = i + 1; j < 4; ++j)
        m.marks.push_back(square_zero(
            "T" + std::to_string(i) + std::to_string(j),
            ComplementPi1::unknown, {i, j}));
  } else if (name == "S2xT2") {
    m.chi = 0;
    m.sigma = 0;
    m.b1 = 2;
    m.b_plus = 1;
    m.spin = Tri::yes;
    m.minimal = Tri::yes;
    m.pi1 = Pi1Descriptor::family(GroupFamily::free_abelian(2));
    m.marks.push_back(square_zero("T0", ComplementPi1::unknown,
                                  {std::uint32_t{0}, std::uint32_t{1}}));
  } else if (name == "KZ") {
    m.chi = 12;
    m.sigma = -8;
    m.b1 = 1;
    m.b_plus = 2;
    m.pi1 = Pi1Descriptor::family(GroupFamily::free_abelian(1));
    /* the torus surjects onto the Z of its own complement; summing along
     * it kills exactly one designated image element */
    m.marks.push_back(
        square_zero("T", ComplementPi1::infinite_cyclic_surjected_by_torus,
                    {std::uint32_t{0}}));
  } else if (name.size() >= 7 && name.substr(0, 5) == "Sym2(" &&
             name.back() == ')') {
    return sym2(std::stoll(std::string(name.substr(5, name.size() - 6))));
  } else if (name.size() >= 13 && name.substr(0, 10) == "dolgachev(" &&
             name.back() == ')') {
    const std::string inner(name.substr(10, name.size() - 11));
    const std::size_t comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("dolgachev atom needs two parameters");
    return dolgachev(std::stoll(inner.substr(0, comma)),
                     std::stoll(inner.substr(comma + 1)));
  } else {
    throw std::invalid_argument("unknown atom '" + std::string(name) + "'");
  }

  set_derived_b_plus(m, "atom table");
  return m;
}

ManifoldClass connected_sum(const ManifoldClass& a, const ManifoldClass& b) {
  ManifoldClass m;
  m.expr = nlohmann::json{{"op", "connected_sum"},
                          {"summands", nlohmann::json::array({a.expr, b.expr})}};
  m.chi = a.chi + b.chi - 2;
  m.sigma = a.sigma + b.sigma;
  m.pi1 = Pi1Descriptor::free_product({a.pi1, b.pi1});
  m.b1 = m.pi1.b1();
  m.spin = tri_and(a.spin, b.spin);
  /* a CP2bar summand is an exceptional sphere in the open */
  const auto is_cp2bar = [](const nlohmann::json& e) {
    return e.is_string() && e.get<std::string>() == "CP2bar";
  };
  m.minimal = (is_cp2bar(a.expr) || is_cp2bar(b.expr)) ? Tri::no : Tri::unknown;
  m.symplectic = false;
  set_derived_b_plus(m, "connected_sum");
  return m;
}

ManifoldClass blow_up(const ManifoldClass& a) {
  ManifoldClass m = a;
  m.expr = nlohmann::json{{"op", "blow_up"}, {"arg", a.expr}};
  m.chi = a.chi + 1;
  m.sigma = a.sigma - 1;
  m.spin = Tri::no;  // the exceptional sphere has odd square
  m.minimal = Tri::no;
  set_derived_b_plus(m, "blow_up");
  return m;
}

ManifoldClass fiber_sum_torus(const ManifoldClass& host,
                              std::string_view host_torus,
                              const ManifoldClass& guest,
                              std::string_view guest_torus,
                              std::size_t killed) {
  const MarkedTorus& th = host.mark(host_torus);
  const MarkedTorus& tg = guest.mark(guest_torus);
  if (th.self_intersection != 0 || tg.self_intersection != 0)
    throw std::invalid_argument("fiber sum: tori must have square zero");
  if (!th.symplectic || !tg.symplectic)
    throw std::invalid_argument("fiber sum: tori must be symplectic");
  if (!host.symplectic || !guest.symplectic)
    throw std::invalid_argument("fiber sum: both classes must be symplectic");

  /* The guest contributes no generators of its own: either its complement
   * is simply connected, or it is Z surjected by the torus and hence glued
   * onto classes the host already carries.  That is exactly why only those
   * two tags are usable on the guest side. */
  std::vector<Pi1Element> to_kill;
  switch (tg.complement) {
    case ComplementPi1::trivial:
      to_kill = th.image;
      break;
    case ComplementPi1::infinite_cyclic_surjected_by_torus:
      if (!th.image.empty()) {
        if (killed >= th.image.size())
          throw std::invalid_argument(
              "fiber sum: designated image index out of range");
        to_kill.push_back(th.image[killed]);
      }
      break;
    case ComplementPi1::unknown:
      throw std::invalid_argument(
          "fiber sum: guest torus has no usable complement description");
  }

  ManifoldClass m;
  nlohmann::json expr{{"op", "fiber_sum_torus"},
                      {"host", host.expr},
                      {"host_torus", std::string(host_torus)},
                      {"guest", guest.expr},
                      {"guest_torus", std::string(guest_torus)}};
  if (tg.complement == ComplementPi1::infinite_cyclic_surjected_by_torus)
    expr["killed"] = killed;
  m.expr = std::move(expr);
  m.chi = host.chi + guest.chi;
  m.sigma = host.sigma + guest.sigma;
  m.pi1 = kill_elements(host.pi1, to_kill);
  m.b1 = m.pi1.b1();
  m.spin = Tri::unknown;
  m.minimal = Tri::unknown;
  m.symplectic = true;

  /* Surviving host marks: family descriptors renumber their generators
   * when one is killed, so index-based images would dangle; such marks
   * are dropped rather than kept wrong.  Complements are reset: the
   * ambient manifold changed. */
  const bool family_renumbered =
      !to_kill.empty() && host.pi1.as_family() != nullptr;
  for (const MarkedTorus& t : host.marks) {
    if (t.label == host_torus) continue;
    if (family_renumbered && !t.image.empty()) continue;
    MarkedTorus kept = t;
    kept.complement = ComplementPi1::unknown;
    m.marks.push_back(std::move(kept));
  }

  set_derived_b_plus(m, "fiber_sum_torus");
  return m;
}

ManifoldClass stipsicz_member(long long k) {
  if (k < 1) throw std::invalid_argument("sequence member index must be >= 1");
  ManifoldClass m = atomic("CP2bar");
  for (long long i = 1; i < 2 * k * k; ++i)
    m = connected_sum(m, atomic("CP2bar"));
  for (long long i = 0; i < k * k - k; ++i)
    m = connected_sum(m, atomic("S2xS2"));
  if (m.chi != 2 + 4 * k * k - 2 * k || m.sigma != -2 * k * k)
    throw internal_error("sequence member drifted off its closed formulas");
  return m;
}

namespace {

void push_step(ConstructionTrace& tr, std::string op, nlohmann::json params,
               long long chi, long long sigma, std::string effect) {
  TraceStep s;
  s.op = std::move(op);
  s.params = std::move(params);
  s.chi = chi;
  s.sigma = sigma;
  s.pi1_effect = std::move(effect);
  tr.steps.push_back(std::move(s));
}

/* b_inv[1] a[2]^3 e[3]: doubled generator name with its second index */
std::string indexed_word_text(const std::vector<IndexedLetter>& letters,
                              const PositiveRewrite& pr) {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    const IndexedLetter& l = letters[i];
    os << pr.base.generators.at(2 * l.pair + (l.inverse_letter ? 1 : 0));
    os << '[' << l.second << ']';
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

}  // namespace

ConstructionTrace build_from_presentation(const Presentation& p) {
  const long long g = static_cast<long long>(p.generator_count());
  const long long r = static_cast<long long>(p.relator_count());

  const PositiveRewrite pr = positive_rewrite(p);
  const IndexedRelationSet idx = double_index(pr);
  const long long n = static_cast<long long>(idx.n);

  ConstructionTrace tr;
  long long chi = 0, sigma = 0;

  {
    nlohmann::json params{{"generators", pr.base.generators}};
    nlohmann::json pairing = nlohmann::json::array();
    for (const Word& w : pr.pairing)
      pairing.push_back(word_to_string(w, pr.base.generators));
    nlohmann::json rewritten = nlohmann::json::array();
    for (const Word& w : pr.rewritten)
      rewritten.push_back(word_to_string(w, pr.base.generators));
    params["pairing"] = std::move(pairing);
    params["rewritten"] = std::move(rewritten);
    push_step(tr, "positive_rewrite", std::move(params), chi, sigma,
              "every generator receives an inverse partner tied by a pairing "
              "relation; relators become positive words");
  }

  {
    nlohmann::json indexed = nlohmann::json::array();
    for (const auto& w : idx.words) indexed.push_back(indexed_word_text(w, pr));
    push_step(tr, "double_index", {{"n", n}, {"indexed", std::move(indexed)}},
              chi, sigma,
              "one second index per syllable, increasing left to right "
              "across the relators");
  }

  {
    nlohmann::json tori = nlohmann::json::array();
    for (long long i = 0; i <= r + g; ++i)
      tori.push_back("T" + std::to_string(i));
    push_step(tr, "base", {{"fiber_genus", g * n}, {"tori", std::move(tori)}},
              chi, sigma,
              "product of a mapping torus with a circle: doubly indexed "
              "surface generators, conjugation by t advances the second "
              "index, s central");
  }

  chi += 12;
  sigma -= 8;
  push_step(tr, "fiber_sum", {{"host_torus", "T0"}, {"guest", "E1"}}, chi,
            sigma, "kills t and s; the conjugation relations collapse the "
                   "second indices");

  for (long long i = 1; i <= r; ++i) {
    chi += 12;
    sigma -= 8;
    push_step(tr, "fiber_sum",
              {{"host_torus", "T" + std::to_string(i)}, {"guest", "E1"}}, chi,
              sigma,
              "kills rewritten relator " + std::to_string(i) + ": " +
                  indexed_word_text(idx.words.at(i - 1), pr));
  }

  for (long long k = 1; k <= g; ++k) {
    chi += 12;
    sigma -= 8;
    push_step(
        tr, "fiber_sum",
        {{"host_torus", "T" + std::to_string(r + k)}, {"guest", "E1"}}, chi,
        sigma,
        "kills pairing word " +
            word_to_string(pr.pairing.at(k - 1), pr.base.generators) +
            ", identifying " + pr.base.generators.at(2 * (k - 1) + 1) +
            " with the inverse of " + pr.base.generators.at(2 * (k - 1)));
  }

  ManifoldClass m;
  m.expr = nlohmann::json{{"op", "build_from_presentation"},
                          {"presentation", p.to_string()}};
  m.chi = chi;
  m.sigma = sigma;
  m.pi1 = Pi1Descriptor::presentation(p);
  m.b1 = m.pi1.b1();
  m.spin = Tri::unknown;
  m.minimal = Tri::unknown;
  m.symplectic = true;
  set_derived_b_plus(m, "build_from_presentation");

  if (m.chi != 12 * (g + r + 1) || m.sigma != -8 * (g + r + 1))
    throw internal_error("build_from_presentation: totals drifted off "
                         "12(g+r+1), -8(g+r+1)");

  /* The quotient bookkeeping says the sums leave the doubled generators
   * subject to the pairing words, the rewritten relators, and the surface
   * relation; that presentation must abelianize like the input. */
  std::vector<Word> rels = pr.pairing;
  rels.insert(rels.end(), pr.rewritten.begin(), pr.rewritten.end());
  if (g > 0) rels.push_back(doubled_surface_relator(p.generator_count()));
  const Presentation quotient =
      Presentation::make(pr.base.generators, std::move(rels));
  if (abelianize(quotient) != abelianize(p))
    throw internal_error("build_from_presentation: quotient bookkeeping "
                         "does not abelianize like the input");

  tr.result = std::move(m);
  return tr;
}

ConstructionTrace build_from_monodromy(long long genus,
                                       const std::vector<Word>& images) {
  if (genus < 0) throw std::invalid_argument("monodromy: negative genus");
  if (images.size() != static_cast<std::size_t>(2 * genus))
    throw std::invalid_argument("monodromy: expected one image per standard "
                                "generator (2 * genus words)");
  for (const Word& w : images)
    for (const Syllable& s : w.syllables())
      if (s.gen >= 2 * genus)
        throw std::invalid_argument("monodromy: image uses a generator "
                                    "outside the surface group");

  std::vector<std::string> names;
  for (long long i = 1; i <= genus; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }

  std::vector<Word> rels;
  if (genus > 0)
    rels.push_back(doubled_surface_relator(static_cast<std::size_t>(genus)));
  for (std::size_t j = 0; j < images.size(); ++j) {
    Word w;
    w.push(static_cast<std::uint32_t>(j), -1);
    w.append(images[j]);
    rels.push_back(std::move(w));
  }
  const Presentation pres = Presentation::make(names, std::move(rels));

  if (genus == 1) {
    /* MCG(T^2) = SL(2, Z): the abelianized image matrix must be in it */
    IntMatrix h(2, 2);
    for (std::size_t j = 0; j < 2; ++j)
      for (const Syllable& s : images[j].syllables())
        h.at(s.gen, j) += s.exp;
    if (h.at(0, 0) * h.at(1, 1) - h.at(0, 1) * h.at(1, 0) != 1)
      throw std::invalid_argument(
          "monodromy: genus 1 data must abelianize to determinant +1");
  }

  ConstructionTrace tr;
  nlohmann::json image_texts = nlohmann::json::array();
  for (const Word& w : images) image_texts.push_back(word_to_string(w, names));

  push_step(tr, "mapping_torus_bundle",
            {{"genus", genus}, {"images", image_texts}}, 0, 0,
            "fiber surface group extended by t acting as the monodromy, "
            "with a central s");
  push_step(tr, "fiber_sum", {{"host_torus", "T0"}, {"guest", "E1"}}, 12, -8,
            "kills t and s; each generator is identified with its monodromy "
            "image");

  ManifoldClass m;
  m.expr = nlohmann::json{{"op", "build_from_monodromy"},
                          {"genus", genus},
                          {"images", image_texts}};
  m.chi = 12;
  m.sigma = -8;
  m.spin = Tri::unknown;
  m.minimal = Tri::unknown;
  m.symplectic = true;
  if (genus <= 1) {
    /* a quotient of Z^2 is abelian, so its abelianization pins it */
    m.pi1 = descriptor_from_abelian(abelianize(pres));
  } else {
    m.pi1 = Pi1Descriptor::presentation(pres);
    tr.annotations.push_back(
        "genus >= 2 monodromy data: realizability by a surface "
        "diffeomorphism is not certified; invariants assume a realizing "
        "map exists");
  }
  m.b1 = m.pi1.b1();
  set_derived_b_plus(m, "build_from_monodromy");

  tr.result = std::move(m);
  return tr;
}

ConstructionTrace build_from_monodromy(
    const std::array<std::array<long long, 2>, 2>& h) {
  if (h[0][0] * h[1][1] - h[0][1] * h[1][0] != 1)
    throw std::invalid_argument("monodromy: determinant must be +1");
  Word hx, hy;
  if (h[0][0] != 0) hx.push(0, h[0][0]);
  if (h[1][0] != 0) hx.push(1, h[1][0]);
  if (h[0][1] != 0) hy.push(0, h[0][1]);
  if (h[1][1] != 0) hy.push(1, h[1][1]);
  return build_from_monodromy(1, {hx, hy});
}

DerivedReport derived_checks(const ManifoldClass& m, bool assume_bmy) {
  DerivedReport rep;
  rep.chi_plus_sigma = m.chi_plus_sigma();
  rep.k_squared = m.k_squared();

  const auto add = [&rep](std::string name, Tri status, std::string detail) {
    rep.checks.push_back({std::move(name), status, std::move(detail)});
  };

  {
    std::ostringstream os;
    if (m.b_plus) {
      const bool ok = m.chi + m.sigma == 2 - 2 * m.b1 + 2 * *m.b_plus;
      os << "chi + sigma = " << m.chi + m.sigma << " vs 2 - 2 b1 + 2 b+ = "
         << 2 - 2 * m.b1 + 2 * *m.b_plus;
      add("chi_sigma_identity", ok ? Tri::yes : Tri::no, os.str());
    } else {
      add("chi_sigma_identity", Tri::unknown, "b+ not tracked");
    }
  }

  if (!m.symplectic) {
    add("b_plus_positive", Tri::unknown,
        "only constrains symplectic classes");
    add("almost_complex_parity", Tri::unknown,
        "only constrains symplectic classes");
  } else if (!m.b_plus) {
    add("b_plus_positive", Tri::unknown, "b+ not tracked");
    add("almost_complex_parity", Tri::unknown, "b+ not tracked");
  } else {
    std::ostringstream os;
    os << "b+ = " << *m.b_plus;
    add("b_plus_positive", *m.b_plus >= 1 ? Tri::yes : Tri::no, os.str());

    const long long parity = 1 - m.b1 + *m.b_plus;
    std::ostringstream os2;
    os2 << "1 - b1 + b+ = " << parity << " must be even";
    if (m.b1 % 2 == 0)
      os2 << " (equivalently chi + sigma = " << m.chi + m.sigma
          << " is divisible by 4)";
    add("almost_complex_parity", parity % 2 == 0 ? Tri::yes : Tri::no,
        os2.str());
  }

  if (m.minimal != Tri::yes) {
    add("minimal_k_squared", Tri::unknown, "minimality not established");
  } else if (m.pi1.is_surface_group()) {
    add("minimal_k_squared", Tri::unknown,
        "irrational ruled classes over a surface group may have K^2 < 0");
  } else if (m.pi1.as_presentation() != nullptr) {
    add("minimal_k_squared", Tri::unknown,
        "presentation descriptor: a surface group cannot be excluded");
  } else {
    std::ostringstream os;
    os << "K^2 = " << rep.k_squared << " (Liu: minimal, not irrational "
       << "ruled forces K^2 >= 0)";
    add("minimal_k_squared", rep.k_squared >= 0 ? Tri::yes : Tri::no,
        os.str());
  }

  if (assume_bmy) {
    if (m.minimal != Tri::yes) {
      add("bmy_conjectural", Tri::unknown, "minimality not established");
    } else if (m.pi1.is_surface_group() ||
               m.pi1.as_presentation() != nullptr) {
      add("bmy_conjectural", Tri::unknown,
          "a surface group cannot be excluded");
    } else {
      std::ostringstream os;
      os << "chi - 3 sigma = " << m.chi - 3 * m.sigma
         << " (conjectural Bogomolov-Miyaoka-Yau bound, assumed by flag)";
      add("bmy_conjectural", m.chi - 3 * m.sigma >= 0 ? Tri::yes : Tri::no,
          os.str());
    }
  }

  return rep;
}

nlohmann::json descriptor_to_json(const Pi1Descriptor& d) {
  nlohmann::json j;
  j["abelianization"] = d.abelianization().to_string();
  if (const GroupFamily* f = d.as_family()) {
    j["kind"] = "family";
    j["name"] = f->to_string();
  } else if (const Presentation* p = d.as_presentation()) {
    j["kind"] = "presentation";
    j["text"] = p->to_string();
  } else {
    j["kind"] = "free_product";
    nlohmann::json factors = nlohmann::json::array();
    for (const Pi1Descriptor& f : d.as_free_product()->factors)
      factors.push_back(descriptor_to_json(f));
    j["factors"] = std::move(factors);
  }
  return j;
}

nlohmann::json manifold_to_json(const ManifoldClass& m) {
  nlohmann::json j;
  j["expr"] = m.expr;
  j["chi"] = m.chi;
  j["sigma"] = m.sigma;
  j["chi_plus_sigma"] = m.chi_plus_sigma();
  j["k_squared"] = m.k_squared();
  j["b1"] = m.b1;
  j["b_plus"] = m.b_plus ? nlohmann::json(*m.b_plus) : nlohmann::json();
  j["spin"] = std::string(to_string(m.spin));
  j["minimal"] = std::string(to_string(m.minimal));
  j["symplectic"] = m.symplectic;
  j["pi1"] = descriptor_to_json(m.pi1);
  nlohmann::json marks = nlohmann::json::array();
  for (const MarkedTorus& t : m.marks) {
    nlohmann::json mj;
    mj["label"] = t.label;
    mj["self_intersection"] = t.self_intersection;
    mj["symplectic"] = t.symplectic;
    mj["complement"] = std::string(to_string(t.complement));
    nlohmann::json image = nlohmann::json::array();
    for (const Pi1Element& e : t.image) image.push_back(element_to_json(e));
    mj["image"] = std::move(image);
    marks.push_back(std::move(mj));
  }
  j["marks"] = std::move(marks);
  return j;
}

nlohmann::json ConstructionTrace::to_json() const {
  nlohmann::json j;
  nlohmann::json step_list = nlohmann::json::array();
  for (const TraceStep& s : steps) {
    nlohmann::json sj;
    sj["op"] = s.op;
    sj["params"] = s.params;
    sj["chi"] = s.chi;
    sj["sigma"] = s.sigma;
    sj["pi1_effect"] = s.pi1_effect;
    step_list.push_back(std::move(sj));
  }
  j["steps"] = std::move(step_list);
  j["annotations"] = annotations;
  j["result"] = manifold_to_json(result);
  return j;
}

std::string ConstructionTrace::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TraceStep& s = steps[i];
    os << std::setw(2) << i + 1 << ". " << std::left << std::setw(22) << s.op
       << std::right << " chi=" << std::setw(5) << s.chi
       << " sigma=" << std::setw(5) << s.sigma << "  " << s.pi1_effect
       << '\n';
  }
  os << "result: chi=" << result.chi << " sigma=" << result.sigma;
  if (result.b_plus) os << " b+=" << *result.b_plus;
  os << " pi1=" << result.pi1.to_string() << '\n';
  for (const std::string& a : annotations) os << "note: " << a << '\n';
  return os.str();
}

}  // namespace symgeo
