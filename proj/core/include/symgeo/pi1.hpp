#pragma once

#include <symgeo/linalg.hpp>
#include <symgeo/presentation.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symgeo {

/* Recognized group families with closed-form homological data. */
enum class FamilyKind {
  trivial_group,
  free_group,     // F_n
  cyclic,         // Z/n, n >= 2
  free_abelian,   // Z^n, n >= 1
  surface_group,  // genus >= 2 closed orientable surface
  abelian,        // finite list of cyclic summands, mixed finite/infinite
};

struct GroupFamily {
  FamilyKind kind = FamilyKind::trivial_group;
  /* rank for free/free_abelian, order for cyclic, genus for surface_group */
  long long n = 0;
  /* abelian only: summand orders, 0 = Z, k >= 2 = Z/k */
  std::vector<long long> orders;

  static GroupFamily trivial();
  static GroupFamily free_group(long long rank);
  static GroupFamily cyclic(long long order);
  static GroupFamily free_abelian(long long rank);
  static GroupFamily surface(long long genus);
  /* normalizes: drops order-1 summands, collapses to the simpler kinds
   * when possible (all-infinite -> free_abelian, single -> cyclic, ...) */
  static GroupFamily abelian_sum(std::vector<long long> orders);

  long long b1() const;
  /* rational b2 of an aspherical (or standard) model space, when known */
  std::optional<long long> aspherical_b2() const;
  AbelianInvariants abelianization() const;
  std::string to_string() const;

  bool operator==(const GroupFamily&) const = default;
};

struct Pi1Descriptor;

struct FreeProduct {
  std::vector<Pi1Descriptor> factors;  // each nontrivial, >= 2 entries

  bool operator==(const FreeProduct&) const = default;
};

/* Three-tier fundamental group bookkeeping: an explicit presentation, a
 * recognized family, or a free product of descriptors. */
struct Pi1Descriptor {
  std::variant<GroupFamily, Presentation, FreeProduct> value =
      GroupFamily::trivial();

  static Pi1Descriptor family(GroupFamily f) { return {std::move(f)}; }
  static Pi1Descriptor presentation(Presentation p) { return {std::move(p)}; }
  static Pi1Descriptor free_product(std::vector<Pi1Descriptor> factors);

  bool is_trivial() const;
  const GroupFamily* as_family() const;
  const Presentation* as_presentation() const;
  const FreeProduct* as_free_product() const;

  AbelianInvariants abelianization() const;
  long long b1() const { return abelianization().rank; }

  /* genus >= 1 closed orientable surface group (torus included); used for
   * the irrational-ruled exception to the minimal K^2 bound */
  bool is_surface_group() const;

  std::string to_string() const;

  bool operator==(const Pi1Descriptor&) const = default;
};

/* An element of the group a descriptor stands for: a generator index for
 * family descriptors, a word for explicit presentations. */
using Pi1Element = std::variant<std::uint32_t, Word>;

/* Quotient by the normal closure of the given elements.  Throws
 * std::invalid_argument when the effect is not expressible on the stored
 * descriptor (e.g. generator indices out of range, or free products). */
Pi1Descriptor kill_elements(const Pi1Descriptor& d,
                            const std::vector<Pi1Element>& elements);

/* Descriptor of the abelian group with the given invariants. */
Pi1Descriptor descriptor_from_abelian(const AbelianInvariants& inv);

}  // namespace symgeo
