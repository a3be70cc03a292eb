#ifndef REGCOH_ENGINE_HPP
#define REGCOH_ENGINE_HPP

#include <optional>

#include "regcoh/cohomology.hpp"
#include "regcoh/weyl.hpp"

namespace regcoh {

/// One summand of a multiplicity: a Weyl-group term or the chamber term.
struct TermContribution {
  std::string label;  // reduced word ("e", "121", ...) or "chamber"
  long value = 0;
};

struct MultiplicityReport {
  RatVector mu;
  int degree = 0;
  long m = 0;
  bool lattice_ok = true;  // mu in h + X
  std::vector<TermContribution> breakdown;
  std::optional<Int> dim_endo;  // (dim L(mu))^2 when requested
};

/// m^i_h(mu) for a regular compactification: the Weyl sum of relative pair
/// dimensions plus the chamber term, zero outside h + X.
MultiplicityReport multiplicity(const RootDatum& rd, const PLFunction& h,
                                const RatVector& mu, int degree);

/// All degrees at once (degree i = index), cheaper than repeated calls.
std::vector<MultiplicityReport> multiplicity_all_degrees(const RootDatum& rd,
                                                         const PLFunction& h,
                                                         const RatVector& mu);

/// Closed-form count for the wonderful compactification: the number of t in W
/// with 2 l(t) + |J_t| = degree and t * mu in lambda + Q_t.
MultiplicityReport wonderful_multiplicity(const RootDatum& rd, const RatVector& lambda,
                                          const RatVector& mu, int degree);

/// All wonderful multiplicities at once (index = degree), one pass over W.
std::vector<long> wonderful_all_degrees(const RootDatum& rd, const RatVector& lambda,
                                        const RatVector& mu);

/// Complete-fan (torus) case: dim H^i(Y_R, V(h, mu)).
MultiplicityReport toric_multiplicity(const RootDatum& rd, const PLFunction& h,
                                      const RatVector& mu, int degree);

/// m^0_h(mu) = 1 iff <mu, n> <= h(n) on all of C+ and mu in h + X.
bool m0_characterization(const RootDatum& rd, const PLFunction& h, const RatVector& mu);

struct DecompositionRow {
  RatVector mu;
  int degree = 0;
  long m = 0;
  Int dim_endo;
};
struct DecompositionTable {
  std::vector<DecompositionRow> rows;        // nonzero multiplicities only
  std::vector<std::pair<int, Int>> totals;   // per degree: sum of m * dim_endo
  bool truncated = true;  // completeness outside the mu box is not guaranteed
};

/// Scans dominant integral mu with coordinates in [0, mu_box]; reports every
/// nonzero m^i and per-degree totals within the box.
DecompositionTable decomposition_table(const RootDatum& rd, const PLFunction& h,
                                       int degree_min, int degree_max, int mu_box);

struct OracleMismatch {
  RatVector lambda, mu;
  int degree = 0;
  long general = 0, closed_form = 0;
};

/// Runs the general engine on the trivial fan against the closed form for
/// every (lambda, mu, degree) in range; an empty report is a pass.
std::vector<OracleMismatch> check_wonderful_oracle(const RootDatum& rd, int lambda_box,
                                                   int mu_box, int degree_max);

struct DegreeRequirement {
  int degree = 0;
  enum class Op { Eq, Ge, Gt } op = Op::Ge;
  long value = 0;
};

/// All lambda in the box ||.||_inf <= radius whose wonderful multiplicities
/// at mu satisfy every requirement.  Closed-form counting only.
std::vector<RatVector> search_wonderful(const RootDatum& rd, const RatVector& mu,
                                        const std::vector<DegreeRequirement>& reqs,
                                        int radius);

/// Support of the total cohomology in the wonderful case, computed both via
/// t-enumeration and via the union over J of (lambda + Q_J) meets P_J; throws
/// when the two routes disagree.
std::vector<RatVector> wonderful_support(const RootDatum& rd, const RatVector& mu,
                                         const RatVector& lambda);

/// Deterministic parallel map over [0, n): results merged by index.  Thread
/// count from REGCOH_THREADS (default: hardware concurrency).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace regcoh

#endif  // REGCOH_ENGINE_HPP
