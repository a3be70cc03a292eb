#ifndef REGCOH_WEYL_HPP
#define REGCOH_WEYL_HPP

#include "regcoh/root_datum.hpp"

namespace regcoh {

/// Enumerates W by breadth-first search over products of simple reflections.
/// Deterministic: identity first, then by (length, lexicographic word).
std::vector<WeylElement> enumerate_weyl(const RatMatrix& cartan);

/// The shifted action w * lambda = w(lambda + rho) - rho.
RatVector dot_action(const RootDatum& rd, const WeylElement& w, const RatVector& lambda);

/// J_t = { alpha in Delta : t^{-1}(alpha) < 0 }, as a bit mask.
std::uint32_t descent_set(const WeylElement& t);

/// Degree 2 l(t) + |J_t| at which t contributes in the closed counting form.
int contribution_degree(const WeylElement& t);

/// nu in Q_t: integral simple-root coordinates, strictly positive exactly on J_t.
bool in_Qt(const RootDatum& rd, const RatVector& nu, const WeylElement& t);

/// nu in P_J: integral fundamental-weight coordinates with p_alpha < -1 iff alpha in J.
bool in_PJ(const RootDatum& rd, const RatVector& nu, std::uint32_t J);

/// nu in Q_J: integral simple-root coordinates with q_alpha > 0 iff alpha in J.
bool in_QJ(const RootDatum& rd, const RatVector& nu, std::uint32_t J);

}  // namespace regcoh

#endif  // REGCOH_WEYL_HPP
