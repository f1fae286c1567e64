#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symgeo {

/* Breakpoints like 3/2 and -10/3 must be exact; floating point appears
 * only in SVG coordinate emission. */
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

/* One known manifold entering an envelope: the affine function
 * chi + b sigma on the a = 1 slice. */
struct Witness {
  std::string label;
  long long chi = 0;
  long long sigma = 0;

  bool operator==(const Witness&) const = default;
};

struct Affine {
  long long constant = 0;
  long long slope = 0;

  Rational at(const Rational& b) const {
    return Rational(constant) + Rational(slope) * b;
  }

  bool operator==(const Affine&) const = default;
};

enum class PieceStatus {
  exact,      // the function value is known to equal the affine here
  upper_only  // the affine is only an upper bound for the true infimum
};

std::string_view to_string(PieceStatus s);

/* One affine piece over an interval in b.  An absent endpoint means the
 * piece is unbounded on that side; an internal breakpoint belongs to the
 * piece on its right. */
struct Piece {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = true;
  bool hi_closed = true;
  Affine affine;
  std::string witness;  // active witness or the table's named minimizer
  PieceStatus status = PieceStatus::upper_only;

  bool contains(const Rational& b) const;

  bool operator==(const Piece&) const = default;
};

/* Piecewise-affine concave function b -> f(1,b) with explicit domain;
 * the value is -infinity (reported as absent) outside the pieces. */
struct EnvelopeFn {
  std::string label;
  std::vector<Piece> pieces;  // ordered left to right, pairwise disjoint
  std::vector<std::string> annotations;

  const Piece* piece_at(const Rational& b) const;
  std::optional<Rational> value(const Rational& b) const;
};

struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

/* min over witnesses of chi + b sigma, clipped to the interval.  Pieces
 * are labeled by their active witness and marked upper_only: a finite
 * witness set only ever bounds the true infimum from above.
 * Throws std::invalid_argument on an empty witness set. */
EnvelopeFn upper_envelope(const std::vector<Witness>& ws,
                          const Interval& interval);

/* Clip an envelope to a smaller interval, keeping statuses. */
EnvelopeFn restrict_envelope(const EnvelopeFn& f, const Interval& interval);

/* Continuity at breakpoints plus strictly decreasing slopes after
 * merging adjacent pieces with equal affines. */
bool concavity_check(const EnvelopeFn& f);

/* A cut-and-paste operation that shifts (chi, sigma) without touching
 * the fundamental group. */
struct Move {
  std::string label;
  long long delta_chi = 0;
  long long delta_sigma = 0;
  bool repeatable = true;
};

/* coeff_a * a + coeff_b * b >= 0 (or > 0 when open). */
struct HalfPlane {
  std::string label;
  long long coeff_a = 0;
  long long coeff_b = 0;
  bool closed = true;

  bool satisfied(const Rational& a, const Rational& b) const;
};

/* Iterating a repeatable move makes a chi + b sigma unbounded below
 * wherever a d_chi + b d_sigma < 0, so the domain must satisfy the
 * complementary closed half-plane.  Throws std::invalid_argument on a
 * non-repeatable move. */
std::vector<HalfPlane> unbounded_directions(const std::vector<Move>& moves);

/* Convex cone of directions (a, b) where a chi + b sigma stays bounded
 * below; constraints are necessary conditions, exact when they are also
 * sufficient. */
struct ConeDomain {
  std::string label;
  std::vector<HalfPlane> constraints;
  bool exact = false;
  std::vector<std::string> notes;

  bool contains(const Rational& a, const Rational& b) const;
};

/* {a >= |b|}: exact for smooth manifolds with any fundamental group. */
ConeDomain smooth_domain();
/* Necessary constraints only; one boundary edge is the ray a = b, the
 * other has an unknown angle. */
ConeDomain symplectic_domain();
/* Contains the cone over {1} x [-1, 3/2]; assuming the conjectural
 * Bogomolov-Miyaoka-Yau inequality widens the interval to [-3, 3/2] for
 * groups that are not surface groups. */
ConeDomain minimal_domain(bool assume_bmy = false);

/* Registered symbolic sequences used in the domain discussion. */
enum class SequenceFamily {
  /* M_k = 2k^2 CP2bar # (k^2 - k) S2xS2: the domain of this family has
   * cone angle pi and contains only one of its boundary rays */
  non_closed_domain,
  /* Stipsicz's simply connected symplectic examples: a chi + b sigma is
   * unbounded below when 10 a + 3 b < 0 */
  stipsicz_ray,
};

/* Whether a chi + b sigma is bounded below on the family. */
bool sequence_bounded(SequenceFamily family, const Rational& a,
                      const Rational& b);

/* k-th member of the non_closed_domain family; the ray family has no
 * registered member formulas.  k >= 1. */
Witness sequence_member(SequenceFamily family, long long k);

enum class KnownTable {
  smooth_trivial,      // constant 2 on [-1, 1], S^4 minimizer
  symplectic_trivial,  // b+3 on [-1, 1]; unknown but <= b+3 on [-10/3, -1)
  minimal_trivial,     // adds the exact 12 - 8b piece on [1, 3/2]
  smooth_Z6,           // 6 - 2|b| upper bounds on [-1, 1], exact at b = 0
};

EnvelopeFn known_table(KnownTable t);

/* "b,value,witness,status" rows at evenly spaced rational sample points,
 * exact rationals throughout; samples >= 1 (from == to collapses). */
std::string envelope_csv(const EnvelopeFn& f, const Rational& from,
                         const Rational& to, std::size_t samples);

/* Self-contained stacked line charts; dashed strokes mark upper_only
 * pieces.  The only floating point in the library. */
std::string envelope_svg(
    const std::vector<std::pair<std::string, EnvelopeFn>>& charts);

nlohmann::json envelope_json(const EnvelopeFn& f);
nlohmann::json domain_json(const ConeDomain& d);

}  // namespace symgeo
