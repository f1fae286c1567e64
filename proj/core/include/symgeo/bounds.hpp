#pragma once

#include <symgeo/manifold.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symgeo {

/* Which functional of a closed symplectic 4-manifold is being bounded. */
enum class Target { chi, chi_plus_sigma };

std::string_view to_string(Target t);

enum class BoundKind { lower, upper };

struct Congruence {
  long long modulus = 0;
  long long residue = 0;

  bool operator==(const Congruence&) const = default;
};

/* One bound with its provenance.  A report is never a bare number: the
 * individual arguments are incomparable and the citations are the point. */
struct Contribution {
  std::string name;
  BoundKind kind = BoundKind::lower;
  long long value = 0;
  std::string citation;
  std::optional<ManifoldClass> witness;
  bool hypothetical = false;  // depends on summands nobody has constructed
  bool conjectural = false;
};

struct BoundReport {
  Target target = Target::chi;
  std::optional<long long> lower;  // max of the lower contributions
  std::optional<long long> upper;  // min of the upper contributions
  bool exact = false;
  std::optional<Congruence> congruence;
  std::vector<std::string> caveats;
  std::vector<Contribution> contributions;
};

/* 2 - 2 b1 + b2: the classifying-space map surjects H2 of the manifold
 * onto H2 of the group. */
long long betti_lower(long long b1, long long b2);

/* chi + sigma = 2 - 2 b1 + 2 b+ with b+ >= 1, bumped to b+ >= 2 when the
 * almost complex parity forces b+ even (odd b1). */
long long chi_sigma_lower(long long b1);

/* (12(g+r+1), -8(g+r+1)): fiber sums of a surface bundle with g + r + 1
 * rational elliptic surfaces realize any presentation. */
std::pair<long long, long long> presentation_upper(std::size_t g,
                                                   std::size_t r);

/* Surface-system construction: (12(r+2e+1), -8(r+2e+1)), doubled in the
 * spin case.  The edge count of the curve system is supplied by the
 * caller; no curve geometry is modeled. */
std::pair<long long, long long> gompf_surface_upper(long long curves,
                                                    long long edges,
                                                    bool spin);

/* k + l(g+r) where k is chi of a helper with simply connected torus
 * complement and l is chi of one with infinite cyclic complement.  The
 * best constructed values are k = l = 12; k >= 6 is forced, so smaller
 * inputs are refused unless hypothetical values are explicitly allowed. */
long long small_summand_upper(long long k, long long l, std::size_t g,
                              std::size_t r, bool hypothetical_ok = false);

/* true when the inputs assume helpers smaller than any known one */
bool small_summand_hypothetical(long long k, long long l);

/* Sharpest proven chi lower bound for pi1 = Z^n: the cup product and
 * parity analysis, overridden by the metabolizer specials n = 3, 5 and
 * the small cases n = 0, 1. */
long long free_abelian_chi_lower(long long n);

/* Conservative syntactic recognition: free iff no relators, cyclic iff a
 * single generator, free abelian iff exactly the commutator relators,
 * one surface relator, trivial iff no generators.  Group isomorphism is
 * undecidable; a wrong match would fabricate exactness claims. */
std::optional<GroupFamily> recognize_family(const Presentation& p);

/* Every applicable bound for a recognized family, with witnesses.
 * Throws std::invalid_argument for abelian shapes nothing is known for. */
BoundReport family_report(const GroupFamily& f, Target target);

struct LayeredOptions {
  /* (k, l) helper Euler characteristics for small_summand_upper */
  std::optional<std::pair<long long, long long>> small_summands;
  bool hypothetical_ok = false;

  struct Gompf {
    long long curves = 0;
    long long edges = 0;
    bool spin = false;
  };
  std::optional<Gompf> gompf;

  bool assume_bmy = false;
};

/* Generic presentation bounds merged with family bounds when the family
 * is recognized.  lower = max of lowers, upper = min of uppers; a
 * violation is invalid_argument when hypothetical inputs are involved
 * and an internal error otherwise. */
BoundReport layered_report(const Presentation& p, Target target,
                           const LayeredOptions& opts = {});

std::string report_text(const BoundReport& r);
nlohmann::json report_json(const BoundReport& r);

}  // namespace symgeo
