// Pieri coefficients for the modified Macdonald basis: the corner-weight
// formulas (with their raw product references kept for verification),
// the duality relation between the two kinds, the one-cell-at-a-time
// recursion for k-cell coefficients, and the closed-form summation rules.
#pragma once

#include "macqt/qtcoeff.hpp"
#include "macqt/shapes.hpp"

namespace macqt {

/// A single structure constant, as printed by the CLI.
struct PieriEdge {
    Partition mu;
    Partition nu;
    QtScalar value;
    enum class Kind { c1, d1, ck, dk } kind;
    int k = 1;
};

/// Coefficient of H_nu in e1-perp H_mu (corner-weight form).
/// Requires nu = mu minus one removable corner.
QtScalar c1(const Partition& mu, const Partition& nu);

/// Coefficient of H_mu in e1 * H_nu (corner-weight form).
/// Requires mu = nu plus one addable corner.
QtScalar d1(const Partition& mu, const Partition& nu);

/// Raw product forms over the row and column of the changed cell;
/// reference implementations used only by the verification surface.
QtScalar c1_raw(const Partition& mu, const Partition& nu);
QtScalar d1_raw(const Partition& mu, const Partition& nu);

/// Returns (d1(mu,nu), M * (w_nu/w_mu) * c1(mu,nu)); the two are equal.
std::pair<QtScalar, QtScalar> duality_check(const Partition& mu, const Partition& nu);

/// Coefficient of H_nu in h_k-perp H_mu, via the one-cell recursion
/// c^(k+1) = (1/B_{mu/nu}) sum_alpha c^(k)_{mu,alpha} c^(1)_{alpha,nu} T_alpha/T_nu.
/// Memoized globally. k = 0 requires mu == nu and returns 1.
QtScalar ck(const Partition& mu, const Partition& nu, int k);

/// Coefficient of H_mu in e_k[X/M] * H_nu: (w_nu/w_mu) * ck.
QtScalar dk(const Partition& mu, const Partition& nu, int k);

enum class SumSide { c, d };

/// Closed form of the weighted corner sums:
///   side c: sum over nu of c1(mu,nu) (T_mu/T_nu)^k
///           = B_mu for k = 0, (tq/M) h_{k+1}[D_mu/tq] for k >= 1;
///   side d: sum over mu of d1(mu,nu) (T_mu/T_nu)^k
///           = 1 for k = 0, (-1)^(k-1) e_{k-1}[D_nu] for k >= 1.
QtScalar sum_rule(const Partition& part, int k, SumSide side);

/// Clears the ck memo table (used by benchmarks for cold timings).
void clear_pieri_cache();

} // namespace macqt
