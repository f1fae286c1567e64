#pragma once

#include <symgeo/pi1.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symgeo {

/* Three-valued flag for properties that are frequently not determined by
 * the cut-and-paste bookkeeping. */
enum class Tri { yes, no, unknown };

std::string_view to_string(Tri t);

/* pi1 of the complement of the torus inside its own ambient manifold, as
 * far as the gluing rules care:
 *   trivial  - the sum kills the whole image of pi1 of the torus
 *   infinite_cyclic_surjected_by_torus - the torus surjects onto
 *     pi1(complement) = Z; the sum kills exactly one designated image
 *     element
 *   unknown  - no rewrite rule available; such a torus cannot be used on
 *     the guest side of a fiber sum */
enum class ComplementPi1 { unknown, trivial, infinite_cyclic_surjected_by_torus };

struct MarkedTorus {
  std::string label;
  long long self_intersection = 0;
  bool symplectic = true;
  ComplementPi1 complement = ComplementPi1::unknown;
  /* ordered image of pi1(T^2) in pi1 of the ambient class */
  std::vector<Pi1Element> image;
};

/* A diffeomorphism class tracked through cut-and-paste operations at the
 * level of its classical invariants.  chi and sigma are exact; b_plus is
 * carried when the identity chi + sigma = 2 - 2 b1 + 2 b_plus pins it. */
struct ManifoldClass {
  nlohmann::json expr;  // expression tree of the construction
  long long chi = 0;
  long long sigma = 0;
  long long b1 = 0;
  std::optional<long long> b_plus;
  Tri spin = Tri::unknown;
  Tri minimal = Tri::unknown;
  bool symplectic = true;
  Pi1Descriptor pi1;
  std::vector<MarkedTorus> marks;

  long long chi_plus_sigma() const { return chi + sigma; }
  long long k_squared() const { return 2 * chi + 3 * sigma; }

  const MarkedTorus& mark(std::string_view label) const;
  bool has_mark(std::string_view label) const;
};

/* Atom table.  Parameterless names: E1, K3, CP2, CP2bar, S2xS2, T4, S2xT2,
 * KZ.  Parameterized forms parse as Sym2(g) and dolgachev(p,q). */
ManifoldClass atomic(std::string_view name);
ManifoldClass sym2(long long g);
ManifoldClass dolgachev(long long p, long long q);

/* chi_A + chi_B - 2, sigma additive, pi1 free product, not symplectic. */
ManifoldClass connected_sum(const ManifoldClass& a, const ManifoldClass& b);

/* chi + 1, sigma - 1, pi1 unchanged, never minimal, symplectic preserved. */
ManifoldClass blow_up(const ManifoldClass& a);

/* Symplectic sum along marked square-zero tori.  chi and sigma add; the
 * guest torus's complement tag drives the pi1 rewrite on the host:
 * a trivial complement kills the whole image of the host torus, an
 * infinite-cyclic complement kills image[killed] only.  The host keeps its
 * other marks. */
ManifoldClass fiber_sum_torus(const ManifoldClass& host,
                              std::string_view host_torus,
                              const ManifoldClass& guest,
                              std::string_view guest_torus,
                              std::size_t killed = 0);

struct TraceStep {
  std::string op;
  nlohmann::json params;
  long long chi = 0;  // running totals after the step
  long long sigma = 0;
  std::string pi1_effect;
};

struct ConstructionTrace {
  std::vector<TraceStep> steps;
  std::vector<std::string> annotations;
  ManifoldClass result;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/* Symplectic class with pi1 presented by p: positive rewrite, double
 * indexing, a zero-chi surface-bundle base, then g + r + 1 fiber sums with
 * E1.  chi = 12(g + r + 1), sigma = -8(g + r + 1). */
ConstructionTrace build_from_presentation(const Presentation& p);

/* Symplectic class with pi1 = pi1(F_genus) / < x^-1 H(x) > for a mapping
 * class H given by generator images (interleaved x_i = 2i, y_i = 2i+1).
 * chi = 12, sigma = -8.  Genus 1 descriptors are refined through the
 * cokernel of H - I; genus >= 2 realizability is flagged, not certified. */
ConstructionTrace build_from_monodromy(long long genus,
                                       const std::vector<Word>& images);

/* Genus-1 convenience: H(x) = x^m00 y^m10, H(y) = x^m01 y^m11.
 * Requires determinant +1. */
ConstructionTrace build_from_monodromy(
    const std::array<std::array<long long, 2>, 2>& h);

/* 2k^2 CP2bar # (k^2 - k) S2xS2; chi = 2 + 4k^2 - 2k, sigma = -2k^2. */
ManifoldClass stipsicz_member(long long k);

struct CheckItem {
  std::string name;
  Tri status = Tri::unknown;
  std::string detail;
};

struct DerivedReport {
  long long chi_plus_sigma = 0;
  long long k_squared = 0;
  std::vector<CheckItem> checks;
};

/* Consistency checks: b+ >= 1 for symplectic classes, the almost-complex
 * parity of 1 - b1 + b+, the chi/sigma/b1/b+ identity, minimal K^2 >= 0
 * away from surface fundamental groups, and (only when assume_bmy) the
 * conjectural chi >= 3 sigma for minimal classes. */
DerivedReport derived_checks(const ManifoldClass& m, bool assume_bmy = false);

nlohmann::json manifold_to_json(const ManifoldClass& m);
nlohmann::json descriptor_to_json(const Pi1Descriptor& d);

}  // namespace symgeo
