#include <symgeo/pi1.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symgeo {

GroupFamily GroupFamily::trivial() { return {}; }

GroupFamily GroupFamily::free_group(long long rank) {
  if (rank < 0) throw std::invalid_argument("free group: negative rank");
  if (rank == 0) return trivial();
  GroupFamily f;
  f.kind = FamilyKind::free_group;
  f.n = rank;
  return f;
}

GroupFamily GroupFamily::cyclic(long long order) {
  if (order < 0) throw std::invalid_argument("cyclic: negative order");
  if (order == 0) return free_abelian(1);
  if (order == 1) return trivial();
  GroupFamily f;
  f.kind = FamilyKind::cyclic;
  f.n = order;
  return f;
}

GroupFamily GroupFamily::free_abelian(long long rank) {
  if (rank < 0) throw std::invalid_argument("free abelian: negative rank");
  if (rank == 0) return trivial();
  GroupFamily f;
  f.kind = FamilyKind::free_abelian;
  f.n = rank;
  return f;
}

GroupFamily GroupFamily::surface(long long genus) {
  if (genus < 0) throw std::invalid_argument("surface group: negative genus");
  if (genus == 0) return trivial();
  if (genus == 1) return free_abelian(2);
  GroupFamily f;
  f.kind = FamilyKind::surface_group;
  f.n = genus;
  return f;
}

GroupFamily GroupFamily::abelian_sum(std::vector<long long> orders) {
  long long rank = 0;
  std::vector<long long> finite;
  for (long long k : orders) {
    if (k < 0) throw std::invalid_argument("abelian summand: negative order");
    if (k == 0)
      ++rank;
    else if (k > 1)
      finite.push_back(k);
  }
  /* normalize the torsion part into a divisor chain */
  if (finite.size() > 1) {
    IntMatrix d(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) d.at(i, i) = finite[i];
    finite.clear();
    for (const Int& f : smith_normal_form(d).invariant_factors)
      if (f > 1) finite.push_back(f.convert_to<long long>());
  }

  if (finite.empty()) return free_abelian(rank);
  if (rank == 0 && finite.size() == 1) return cyclic(finite[0]);
  GroupFamily f;
  f.kind = FamilyKind::abelian;
  f.orders = std::move(finite);
  for (long long i = 0; i < rank; ++i) f.orders.push_back(0);
  return f;
}

long long GroupFamily::b1() const {
  switch (kind) {
    case FamilyKind::trivial_group:
    case FamilyKind::cyclic:
      return 0;
    case FamilyKind::free_group:
    case FamilyKind::free_abelian:
      return n;
    case FamilyKind::surface_group:
      return 2 * n;
    case FamilyKind::abelian:
      return static_cast<long long>(
          std::count(orders.begin(), orders.end(), 0));
  }
  return 0;
}

std::optional<long long> GroupFamily::aspherical_b2() const {
  const long long r = b1();
  switch (kind) {
    case FamilyKind::trivial_group:
    case FamilyKind::free_group:
    case FamilyKind::cyclic:
      return 0;
    case FamilyKind::free_abelian:
    case FamilyKind::abelian:
      return r * (r - 1) / 2;
    case FamilyKind::surface_group:
      return 1;
  }
  return std::nullopt;
}

AbelianInvariants GroupFamily::abelianization() const {
  AbelianInvariants inv;
  inv.rank = b1();
  if (kind == FamilyKind::cyclic) inv.torsion.push_back(n);
  if (kind == FamilyKind::abelian)
    for (long long k : orders)
      if (k != 0) inv.torsion.push_back(k);
  return inv;
}

std::string GroupFamily::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::trivial_group:
      return "trivial";
    case FamilyKind::free_group:
      os << "F_" << n;
      return os.str();
    case FamilyKind::cyclic:
      os << "Z/" << n;
      return os.str();
    case FamilyKind::free_abelian:
      if (n == 1) return "Z";
      os << "Z^" << n;
      return os.str();
    case FamilyKind::surface_group:
      os << "surface group (genus " << n << ")";
      return os.str();
    case FamilyKind::abelian: {
      bool first = true;
      const long long r = b1();
      if (r == 1) {
        os << "Z";
        first = false;
      } else if (r > 1) {
        os << "Z^" << r;
        first = false;
      }
      for (long long k : orders)
        if (k != 0) {
          if (!first) os << " + ";
          os << "Z/" << k;
          first = false;
        }
      return os.str();
    }
  }
  return "?";
}

Pi1Descriptor Pi1Descriptor::free_product(std::vector<Pi1Descriptor> factors) {
  std::vector<Pi1Descriptor> flat;
  for (Pi1Descriptor& f : factors) {
    if (f.is_trivial()) continue;
    if (const FreeProduct* p = f.as_free_product()) {
      for (const Pi1Descriptor& inner : p->factors) flat.push_back(inner);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return family(GroupFamily::trivial());
  if (flat.size() == 1) return flat[0];
  Pi1Descriptor d;
  d.value = FreeProduct{std::move(flat)};
  return d;
}

bool Pi1Descriptor::is_trivial() const {
  if (const GroupFamily* f = as_family())
    return f->kind == FamilyKind::trivial_group;
  if (const Presentation* p = as_presentation())
    return p->generators.empty();
  return false;
}

const GroupFamily* Pi1Descriptor::as_family() const {
  return std::get_if<GroupFamily>(&value);
}

const Presentation* Pi1Descriptor::as_presentation() const {
  return std::get_if<Presentation>(&value);
}

const FreeProduct* Pi1Descriptor::as_free_product() const {
  return std::get_if<FreeProduct>(&value);
}

AbelianInvariants Pi1Descriptor::abelianization() const {
  if (const GroupFamily* f = as_family()) return f->abelianization();
  if (const Presentation* p = as_presentation()) return abelianize(*p);

  const FreeProduct& fp = *as_free_product();
  AbelianInvariants out;
  std::vector<Int> torsion;
  for (const Pi1Descriptor& f : fp.factors) {
    AbelianInvariants inv = f.abelianization();
    out.rank += inv.rank;
    torsion.insert(torsion.end(), inv.torsion.begin(), inv.torsion.end());
  }
  if (torsion.size() > 1) {
    IntMatrix d(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) d.at(i, i) = torsion[i];
    torsion.clear();
    for (const Int& f : smith_normal_form(d).invariant_factors)
      if (f > 1) torsion.push_back(f);
  }
  out.torsion = std::move(torsion);
  return out;
}

bool Pi1Descriptor::is_surface_group() const {
  const GroupFamily* f = as_family();
  if (!f) return false;
  return f->kind == FamilyKind::surface_group ||
         (f->kind == FamilyKind::free_abelian && f->n == 2);
}

std::string Pi1Descriptor::to_string() const {
  if (const GroupFamily* f = as_family()) return f->to_string();
  if (const Presentation* p = as_presentation()) return p->to_string();
  const FreeProduct& fp = *as_free_product();
  std::ostringstream os;
  for (std::size_t i = 0; i < fp.factors.size(); ++i) {
    if (i) os << " * ";
    os << fp.factors[i].to_string();
  }
  return os.str();
}

namespace {

/* family descriptors address their standard generators by index; accept a
 * one-syllable exponent +-1 word as the same thing */
std::optional<std::uint32_t> as_generator_index(const Pi1Element& e) {
  if (const std::uint32_t* i = std::get_if<std::uint32_t>(&e)) return *i;
  const Word& w = std::get<Word>(e);
  const auto& syl = w.syllables();
  if (syl.size() == 1 && (syl[0].exp == 1 || syl[0].exp == -1))
    return syl[0].gen;
  return std::nullopt;
}

}  // namespace

Pi1Descriptor kill_elements(const Pi1Descriptor& d,
                            const std::vector<Pi1Element>& elements) {
  if (elements.empty()) return d;

  if (const Presentation* p = d.as_presentation()) {
    std::vector<Word> rels = p->relators;
    for (const Pi1Element& e : elements) {
      if (const Word* w = std::get_if<Word>(&e)) {
        rels.push_back(*w);
      } else {
        Word gen;
        gen.push(std::get<std::uint32_t>(e), 1);
        rels.push_back(std::move(gen));
      }
    }
    return Pi1Descriptor::presentation(
        Presentation::make(p->generators, std::move(rels)));
  }

  if (const GroupFamily* f = d.as_family()) {
    std::set<std::uint32_t> idx;
    for (const Pi1Element& e : elements) {
      auto i = as_generator_index(e);
      if (!i)
        throw std::invalid_argument(
            "pi1 effect not expressible on a family descriptor: "
            "non-generator element");
      idx.insert(*i);
    }
    if (idx.size() != elements.size())
      throw std::invalid_argument("pi1 kill: repeated generator");

    switch (f->kind) {
      case FamilyKind::trivial_group:
        throw std::invalid_argument("pi1 kill: trivial group has no "
                                    "designated generators");
      case FamilyKind::free_group:
      case FamilyKind::free_abelian: {
        const long long count = static_cast<long long>(idx.size());
        if (!idx.empty() && *idx.rbegin() >= f->n)
          throw std::invalid_argument("pi1 kill: generator out of range");
        return Pi1Descriptor::family(
            f->kind == FamilyKind::free_group
                ? GroupFamily::free_group(f->n - count)
                : GroupFamily::free_abelian(f->n - count));
      }
      case FamilyKind::cyclic:
        if (*idx.rbegin() != 0)
          throw std::invalid_argument("pi1 kill: generator out of range");
        return Pi1Descriptor::family(GroupFamily::trivial());
      case FamilyKind::abelian: {
        std::vector<long long> rest;
        for (std::size_t i = 0; i < f->orders.size(); ++i)
          if (!idx.count(static_cast<std::uint32_t>(i)))
            rest.push_back(f->orders[i]);
        if (f->orders.size() - rest.size() != idx.size())
          throw std::invalid_argument("pi1 kill: generator out of range");
        return Pi1Descriptor::family(GroupFamily::abelian_sum(rest));
      }
      case FamilyKind::surface_group:
        throw std::invalid_argument(
            "pi1 effect not expressible: quotient of a surface group is "
            "not tracked");
    }
  }

  throw std::invalid_argument(
      "pi1 effect not expressible on a free-product descriptor");
}

Pi1Descriptor descriptor_from_abelian(const AbelianInvariants& inv) {
  std::vector<long long> orders;
  for (const Int& t : inv.torsion) orders.push_back(t.convert_to<long long>());
  for (long long i = 0; i < inv.rank; ++i) orders.push_back(0);
  return Pi1Descriptor::family(GroupFamily::abelian_sum(std::move(orders)));
}

}  // namespace symgeo
