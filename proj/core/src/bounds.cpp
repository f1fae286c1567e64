#include <symgeo/bounds.hpp>

#include <symgeo/errors.hpp>

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symgeo {

std::string_view to_string(Target t) {
  return t == Target::chi ? "chi" : "chi+sigma";
}

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }

/* ceil(a / b) for b > 0 */
long long ceil_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Contribution contrib(BoundKind kind, std::string name, long long value,
                     std::string citation) {
  Contribution c;
  c.kind = kind;
  c.name = std::move(name);
  c.value = value;
  c.citation = std::move(citation);
  return c;
}

Contribution lower_of(std::string name, long long value,
                      std::string citation) {
  return contrib(BoundKind::lower, std::move(name), value,
                 std::move(citation));
}

Contribution upper_of(std::string name, long long value, std::string citation,
                      std::optional<ManifoldClass> witness = std::nullopt) {
  Contribution c = contrib(BoundKind::upper, std::move(name), value,
                           std::move(citation));
  c.witness = std::move(witness);
  return c;
}

/* chi = 2 - 2 b1 + b2 with b2 >= b+ + b- >= b+, b+ >= 1 and even when b1
 * is odd.  Valid for every closed symplectic 4-manifold. */
long long parity_chi_lower(long long b1) { return 3 - 2 * b1 + (b1 % 2); }

const char* const kBettiCitation =
    "Hausmann-Weinberger: the classifying map surjects H2 of the manifold "
    "onto H2 of the group";
const char* const kParityChiCitation =
    "chi = 2 - 2 b1 + b2 with b2 >= b+ >= 1, and b+ is even when b1 is odd";
const char* const kParityChiSigmaCitation =
    "chi + sigma = 2 - 2 b1 + 2 b+ with b+ >= 1, and b+ is even when b1 is "
    "odd";
const char* const kPresentationCitation =
    "fiber sums of a surface bundle over the torus with one rational "
    "elliptic surface per relator, pairing word and base torus";

void add_generic_lowers(BoundReport& r, long long b1, long long b2) {
  if (r.target == Target::chi) {
    r.contributions.push_back(
        lower_of("homology_of_group", betti_lower(b1, b2), kBettiCitation));
    r.contributions.push_back(lower_of("b_plus_parity", parity_chi_lower(b1),
                                       kParityChiCitation));
  } else {
    r.contributions.push_back(lower_of("b_plus_parity", chi_sigma_lower(b1),
                                       kParityChiSigmaCitation));
  }
}

long long pick(Target t, long long chi, long long sigma) {
  return t == Target::chi ? chi : chi + sigma;
}

/* Kahler witnesses from the complex surface literature.  All four are
 * minimal of general type with b1 = 0 and b+ = 1, so chi + sigma = 4. */
ManifoldClass projective_witness(std::string name, long long chi,
                                 long long order) {
  ManifoldClass m;
  m.expr = std::move(name);
  m.chi = chi;
  m.sigma = 4 - chi;
  m.b1 = 0;
  m.b_plus = 1;
  m.spin = Tri::unknown;
  m.minimal = Tri::yes;
  m.symplectic = true;
  m.pi1 = Pi1Descriptor::family(GroupFamily::cyclic(order));
  return m;
}

/* The composite of Dehn twists along the y curves of a genus-n surface
 * sends x_i to x_i y_i and fixes y_i; the monodromy quotient is free on
 * the x_i. */
ManifoldClass free_group_witness(long long n) {
  std::vector<Word> images(static_cast<std::size_t>(2 * n));
  for (long long i = 0; i < n; ++i) {
    Word x;
    x.push(static_cast<std::uint32_t>(2 * i), 1);
    x.push(static_cast<std::uint32_t>(2 * i + 1), 1);
    Word y;
    y.push(static_cast<std::uint32_t>(2 * i + 1), 1);
    images[static_cast<std::size_t>(2 * i)] = std::move(x);
    images[static_cast<std::size_t>(2 * i + 1)] = std::move(y);
  }
  return build_from_monodromy(n, images).result;
}

/* Torus-bundle monodromy whose cokernel is Z/n. */
ManifoldClass cyclic_witness(long long n) {
  return build_from_monodromy({{{0, 1}, {-1, 2 - n}}}).result;
}

/* Sym2 of a genus-m surface summed with the infinite cyclic helper along
 * a Lagrangian-perturbed torus; kills one generator of Z^2m. */
ManifoldClass odd_rank_witness(long long m) {
  return fiber_sum_torus(sym2(m), "T", atomic("KZ"), "T", 0);
}

/* T^4 summed with the helper along the torus carrying the last two
 * coordinate circles; kills one of them. */
ManifoldClass rank3_witness() {
  return fiber_sum_torus(atomic("T4"), "T23", atomic("KZ"), "T", 1);
}

void trivial_bounds(BoundReport& r) {
  add_generic_lowers(r, 0, 0);
  if (r.target == Target::chi) {
    r.contributions.push_back(upper_of(
        "projective_plane", 3, "the complex projective plane", atomic("CP2")));
    r.contributions.push_back(
        upper_of("symmetric_square", 3,
                 "Sym2 of the sphere is the projective plane", sym2(0)));
  } else {
    r.contributions.push_back(upper_of(
        "projective_plane", 4, "the complex projective plane", atomic("CP2")));
    r.contributions.push_back(
        upper_of("symmetric_square", 4,
                 "Sym2 of the sphere is the projective plane", sym2(0)));
  }
}

void free_bounds(BoundReport& r, long long n) {
  add_generic_lowers(r, n, 0);
  const char* const dehn =
      "monodromy of a composite of Dehn twists along half a symplectic "
      "basis leaves a free group of half the surface rank";
  if (r.target == Target::chi) {
    r.contributions.push_back(
        lower_of("kotschick", ceil_div(6 * (1 - n), 5),
                 "Kotschick: 2 chi + 3 sigma >= 0 improves the parity "
                 "bound for free fundamental groups"));
    r.contributions.push_back(
        upper_of("dehn_twist_monodromy", 12, dehn, free_group_witness(n)));
  } else {
    r.contributions.push_back(
        upper_of("dehn_twist_monodromy", 4, dehn, free_group_witness(n)));
  }
}

void cyclic_bounds(BoundReport& r, long long n) {
  add_generic_lowers(r, 0, 0);
  const char* const monodromy =
      "torus-bundle monodromy with cokernel Z/n summed with a rational "
      "elliptic surface";
  if (r.target == Target::chi) {
    r.contributions.push_back(
        upper_of("torus_monodromy", 12, monodromy, cyclic_witness(n)));
    r.contributions.push_back(
        upper_of("log_transforms", 12,
                 "rational elliptic surface after two log transforms of "
                 "multiplicities n and 2n, a Kahler witness",
                 dolgachev(n, 2 * n)));
    if (n == 2)
      r.contributions.push_back(upper_of(
          "complex_surface", 11,
          "Barlow and Reid: complex projective surface with pi1 = Z/2",
          projective_witness("barlow_reid_surface", 11, 2)));
    if (n == 4)
      r.contributions.push_back(
          upper_of("complex_surface", 11,
                   "Godeaux: complex projective surface with pi1 = Z/4",
                   projective_witness("godeaux_surface", 11, 4)));
    if (n == 5)
      r.contributions.push_back(
          upper_of("complex_surface", 10,
                   "Catanese: complex projective surface with pi1 = Z/5",
                   projective_witness("catanese_surface", 10, 5)));
    if (n == 8)
      r.contributions.push_back(
          upper_of("complex_surface", 10,
                   "Reid: complex projective surface with pi1 = Z/8",
                   projective_witness("reid_surface", 10, 8)));
  } else {
    r.contributions.push_back(
        upper_of("torus_monodromy", 4, monodromy, cyclic_witness(n)));
  }
}

void free_abelian_bounds(BoundReport& r, long long n) {
  add_generic_lowers(r, n, binom2(n));
  if (r.target == Target::chi) {
    if (n == 3) {
      r.contributions.push_back(
          lower_of("metabolizer", 3,
                   "the intersection form has a 3-dimensional metabolizer, "
                   "so b+ >= 4 and b- >= 3"));
    } else if (n == 5) {
      r.contributions.push_back(
          lower_of("metabolizer", 7,
                   "the intersection form has a 7-dimensional metabolizer, "
                   "so b+ >= 8 and b- >= 7"));
    } else if (n >= 2) {
      r.contributions.push_back(
          lower_of("cup_product_parity", free_abelian_chi_lower(n),
                   "an exterior-algebra basis of square-zero classes would "
                   "force an even intersection form; ruled out unless the "
                   "rank is 1 or 4 mod 8"));
    }
  } else {
    r.contributions.push_back(
        lower_of("finite_covers", 0,
                 "chi + sigma is multiplicative in finite covers and Z^n "
                 "has finite-index copies of itself"));
    if (n == 3)
      r.contributions.push_back(
          lower_of("metabolizer", 4,
                   "the 3-dimensional metabolizer and the parity force "
                   "b+ >= 4"));
    if (n == 5)
      r.contributions.push_back(
          lower_of("metabolizer", 8,
                   "the 7-dimensional metabolizer and the parity force "
                   "b+ >= 8"));
  }

  if (n % 2 == 0) {
    const long long g = n / 2;
    r.contributions.push_back(upper_of(
        "symmetric_square", pick(r.target, 3 - 4 * g + binom2(n), 1 - g),
        "the symmetric square of a genus-g surface is Kahler with pi1 = "
        "Z^2g",
        sym2(g)));
    if (n == 2)
      r.contributions.push_back(
          upper_of("ruled_surface", pick(r.target, 0, 0),
                   "the trivial sphere bundle over the torus",
                   atomic("S2xT2")));
    if (n == 4)
      r.contributions.push_back(upper_of("four_torus",
                                         pick(r.target, 0, 0),
                                         "the four-torus", atomic("T4")));
  } else {
    const long long m = (n + 1) / 2;
    r.contributions.push_back(upper_of(
        "symmetric_square_helper_sum",
        pick(r.target, 15 - 5 * m + 2 * m * m, -7 - m),
        "a Lagrangian torus in the symmetric square summed with the "
        "infinite cyclic helper kills one generator",
        odd_rank_witness(m)));
    if (n == 3)
      r.contributions.push_back(
          upper_of("four_torus_helper_sum", pick(r.target, 12, -8),
                   "the four-torus summed with the infinite cyclic helper "
                   "kills one coordinate circle",
                   rank3_witness()));
  }
}

void surface_bounds(BoundReport& r, long long genus) {
  add_generic_lowers(r, 2 * genus, 1);
  std::vector<std::string> names;
  std::vector<Word> relators;
  Word rel;
  for (long long i = 0; i < genus; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    names.push_back("y" + std::to_string(i + 1));
    rel.append(commutator(static_cast<std::uint32_t>(2 * i),
                          static_cast<std::uint32_t>(2 * i + 1)));
  }
  relators.push_back(std::move(rel));
  const Presentation std_pres =
      Presentation::make(std::move(names), std::move(relators));
  const auto [chi, sigma] = presentation_upper(2 * static_cast<std::size_t>(genus), 1);
  r.contributions.push_back(
      upper_of("relator_fiber_sum", pick(r.target, chi, sigma),
               kPresentationCitation,
               build_from_presentation(std_pres).result));
}

void abelian_bounds(BoundReport& r, const std::vector<long long>& orders) {
  const long long f = std::count(orders.begin(), orders.end(), 0);
  const long long t = static_cast<long long>(orders.size()) - f;

  /* shapes covered by the torus-bundle sums: up to three cyclic summands
   * except Z^3, plus Z^2+Z/k+Z/l (chi 12, chi+sigma 4), and Z+3 finite
   * or Z^3+Z/k (chi 24, chi+sigma 8) */
  const bool small = (f + t <= 3 && !(f == 3 && t == 0)) || (f == 2 && t == 2);
  const bool large = (f == 1 && t == 3) || (f == 3 && t == 1);
  if (!small && !large) {
    std::ostringstream os;
    os << "no recorded bounds for abelian groups with free rank " << f
       << " and " << t << " finite summands";
    throw std::invalid_argument(os.str());
  }

  add_generic_lowers(r, f, binom2(f));
  if (r.target == Target::chi && f == 2 && t == 1) {
    r.contributions.push_back(
        lower_of("cup_product_parity", 0,
                 "a square-zero basis of the pulled-back torus classes "
                 "would force an even rank-1 intersection form"));
  }
  const long long value =
      r.target == Target::chi ? (small ? 12 : 24) : (small ? 4 : 8);
  r.contributions.push_back(
      upper_of("torus_bundle_sums", value,
               "Gompf: symplectic sums of torus bundles with rational "
               "elliptic surfaces"));
}

void finalize(BoundReport& r) {
  for (const Contribution& c : r.contributions) {
    if (c.kind == BoundKind::lower) {
      if (!r.lower || c.value > *r.lower) r.lower = c.value;
    } else {
      if (!r.upper || c.value < *r.upper) r.upper = c.value;
    }
  }
  if (r.lower && r.upper && *r.lower > *r.upper) {
    const bool hypothetical_involved =
        std::any_of(r.contributions.begin(), r.contributions.end(),
                    [](const Contribution& c) { return c.hypothetical; });
    if (hypothetical_involved)
      throw std::invalid_argument(
          "hypothetical upper bound contradicts a proven lower bound");
    throw internal_error("merged bounds violate lower <= upper");
  }
  r.exact = r.lower && r.upper && *r.lower == *r.upper;
}

std::string witness_label(const ManifoldClass& m) {
  if (m.expr.is_string()) return m.expr.get<std::string>();
  if (m.expr.is_object() && m.expr.contains("op"))
    return m.expr["op"].get<std::string>();
  return "class";
}

}  // namespace

long long betti_lower(long long b1, long long b2) { return 2 - 2 * b1 + b2; }

long long chi_sigma_lower(long long b1) {
  return b1 % 2 == 0 ? 4 - 2 * b1 : 6 - 2 * b1;
}

std::pair<long long, long long> presentation_upper(std::size_t g,
                                                   std::size_t r) {
  const long long blocks = static_cast<long long>(g + r + 1);
  return {12 * blocks, -8 * blocks};
}

std::pair<long long, long long> gompf_surface_upper(long long curves,
                                                    long long edges,
                                                    bool spin) {
  if (curves < 0 || edges < 0)
    throw std::invalid_argument("surface system: negative curve or edge count");
  const long long blocks = curves + 2 * edges + 1;
  if (spin) return {24 * blocks, -16 * blocks};
  return {12 * blocks, -8 * blocks};
}

long long small_summand_upper(long long k, long long l, std::size_t g,
                              std::size_t r, bool hypothetical_ok) {
  if ((k < 6 || l < 12) && !hypothetical_ok)
    throw std::invalid_argument(
        "helper Euler characteristics below every known construction; pass "
        "the hypothetical flag to explore them");
  return k + l * static_cast<long long>(g + r);
}

bool small_summand_hypothetical(long long k, long long l) {
  return k < 12 || l < 12;
}

long long free_abelian_chi_lower(long long n) {
  if (n < 0) throw std::invalid_argument("free abelian rank is negative");
  if (n == 0) return 3;
  if (n == 1) return 2;
  if (n == 3) return 3;
  if (n == 5) return 7;
  if (n % 8 == 1 || n % 8 == 4) return 2 - 2 * n + binom2(n);
  return 3 - 2 * n + binom2(n);
}

std::optional<GroupFamily> recognize_family(const Presentation& p) {
  const std::size_t g = p.generator_count();
  const std::size_t r = p.relator_count();
  if (g == 0) return GroupFamily::trivial();
  if (r == 0) return GroupFamily::free_group(static_cast<long long>(g));

  if (g == 1) {
    long long d = 0;
    for (const Word& w : p.relators) {
      long long e = 0;
      for (const Syllable& s : w.syllables()) e += s.exp;
      d = std::gcd(d, e);
    }
    return GroupFamily::cyclic(d);
  }

  /* exactly one commutator relator per unordered generator pair */
  const auto pair_count =
      static_cast<std::size_t>(binom2(static_cast<long long>(g)));
  if (r == pair_count) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    bool all_commutators = true;
    for (const Word& w : p.relators) {
      const auto& syl = w.syllables();
      if (syl.size() != 4 || syl[0].exp != 1 || syl[1].exp != 1 ||
          syl[2].exp != -1 || syl[3].exp != -1 || syl[0].gen != syl[2].gen ||
          syl[1].gen != syl[3].gen || syl[0].gen == syl[1].gen) {
        all_commutators = false;
        break;
      }
      pairs.emplace_back(std::min(syl[0].gen, syl[1].gen),
                         std::max(syl[0].gen, syl[1].gen));
    }
    if (all_commutators) {
      std::sort(pairs.begin(), pairs.end());
      if (std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end() &&
          pairs.size() == pair_count)
        return GroupFamily::free_abelian(static_cast<long long>(g));
    }
  }

  if (r == 1 && g % 2 == 0) {
    Word expected;
    for (std::size_t i = 0; i + 1 < g; i += 2)
      expected.append(commutator(static_cast<std::uint32_t>(i),
                                 static_cast<std::uint32_t>(i + 1)));
    if (p.relators[0] == expected)
      return GroupFamily::surface(static_cast<long long>(g) / 2);
  }

  return std::nullopt;
}

BoundReport family_report(const GroupFamily& f, Target target) {
  BoundReport r;
  r.target = target;
  switch (f.kind) {
    case FamilyKind::trivial_group:
      trivial_bounds(r);
      break;
    case FamilyKind::free_group:
      free_bounds(r, f.n);
      break;
    case FamilyKind::cyclic:
      cyclic_bounds(r, f.n);
      break;
    case FamilyKind::free_abelian:
      free_abelian_bounds(r, f.n);
      break;
    case FamilyKind::surface_group:
      surface_bounds(r, f.n);
      break;
    case FamilyKind::abelian:
      abelian_bounds(r, f.orders);
      break;
  }
  /* 1 - b1 + b+ is even for almost complex manifolds, which makes
   * chi + sigma = 2 - 2 b1 + 2 b+ a multiple of 4 */
  if (target == Target::chi_plus_sigma) r.congruence = Congruence{4, 0};
  finalize(r);
  return r;
}

BoundReport layered_report(const Presentation& p, Target target,
                           const LayeredOptions& opts) {
  BoundReport r;
  r.target = target;

  const std::optional<GroupFamily> fam = recognize_family(p);
  if (fam) {
    BoundReport family = family_report(*fam, target);
    r.contributions = std::move(family.contributions);
    r.caveats = std::move(family.caveats);
  } else {
    const long long b1 = abelianize(p).rank;
    add_generic_lowers(r, b1, 0);
    if (target == Target::chi)
      r.caveats.push_back(
          "b2 of the fundamental group is unknown; the homology lower bound "
          "uses b2 = 0");
    r.caveats.push_back(
        "fundamental group not recognized; upper bounds use only the "
        "presentation");
  }

  const auto [chi, sigma] =
      presentation_upper(p.generator_count(), p.relator_count());
  r.contributions.push_back(
      upper_of("relator_fiber_sum", pick(target, chi, sigma),
               kPresentationCitation, build_from_presentation(p).result));

  if (opts.small_summands && target == Target::chi) {
    const auto [k, l] = *opts.small_summands;
    Contribution c = upper_of(
        "small_summands",
        small_summand_upper(k, l, p.generator_count(), p.relator_count(),
                            opts.hypothetical_ok),
        "one helper with simply connected torus complement plus one helper "
        "with infinite cyclic complement per relator and pairing word");
    c.hypothetical = small_summand_hypothetical(k, l);
    if (c.hypothetical)
      r.caveats.push_back(
          "assumes helper summands smaller than any known construction");
    r.contributions.push_back(std::move(c));
  }

  if (opts.gompf) {
    const auto [gc, gs] = gompf_surface_upper(opts.gompf->curves,
                                              opts.gompf->edges,
                                              opts.gompf->spin);
    r.contributions.push_back(
        upper_of("surface_system_sum", pick(target, gc, gs),
                 "Gompf: sums of elliptic surfaces along a configuration "
                 "of surfaces and tori"));
    r.caveats.push_back(
        "the edge count of the curve system is supplied by the caller, not "
        "derived from curve geometry");
  }

  if (opts.assume_bmy)
    r.caveats.push_back(
        "assuming the conjectural Bogomolov-Miyaoka-Yau inequality for "
        "minimal symplectic classes");

  if (target == Target::chi_plus_sigma) r.congruence = Congruence{4, 0};
  finalize(r);
  return r;
}

std::string report_text(const BoundReport& r) {
  std::ostringstream os;
  os << "target: " << to_string(r.target) << '\n';
  os << "lower: ";
  if (r.lower)
    os << *r.lower;
  else
    os << '-';
  os << '\n';
  os << "upper: ";
  if (r.upper)
    os << *r.upper;
  else
    os << '-';
  os << '\n';
  os << "exact: " << (r.exact ? "yes" : "no") << '\n';
  if (r.congruence)
    os << "congruence: " << r.congruence->residue << " mod "
       << r.congruence->modulus << '\n';
  os << "contributions:\n";
  for (const Contribution& c : r.contributions) {
    os << "  " << (c.kind == BoundKind::lower ? "lower" : "upper")
       << std::setw(7) << c.value << "  " << std::left << std::setw(28)
       << c.name << std::right << c.citation;
    if (c.witness)
      os << " [witness " << witness_label(*c.witness)
         << ": chi=" << c.witness->chi << " sigma=" << c.witness->sigma
         << "]";
    if (c.hypothetical) os << " [hypothetical]";
    if (c.conjectural) os << " [conjectural]";
    os << '\n';
  }
  if (!r.caveats.empty()) {
    os << "caveats:\n";
    for (const std::string& c : r.caveats) os << "  - " << c << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json j;
  j["target"] = std::string(to_string(r.target));
  j["lower"] = r.lower ? nlohmann::json(*r.lower) : nlohmann::json();
  j["upper"] = r.upper ? nlohmann::json(*r.upper) : nlohmann::json();
  j["exact"] = r.exact;
  if (r.congruence)
    j["congruence"] = {{"modulus", r.congruence->modulus},
                       {"residue", r.congruence->residue}};
  else
    j["congruence"] = nlohmann::json();
  j["caveats"] = r.caveats;
  nlohmann::json items = nlohmann::json::array();
  for (const Contribution& c : r.contributions) {
    nlohmann::json item;
    item["name"] = c.name;
    item["kind"] = c.kind == BoundKind::lower ? "lower" : "upper";
    item["value"] = c.value;
    item["citation"] = c.citation;
    item["hypothetical"] = c.hypothetical;
    item["conjectural"] = c.conjectural;
    item["witness"] =
        c.witness ? manifold_to_json(*c.witness) : nlohmann::json();
    items.push_back(std::move(item));
  }
  j["contributions"] = std::move(items);
  return j;
}

}  // namespace symgeo
