#include "macqt/pieri.hpp"

#include "macqt/symfun.hpp"

#include <cassert>
#include <map>
#include <mutex>

namespace macqt {

namespace {

// index of the removable corner of mu whose removal yields nu, in the
// decreasing-row ladder order (1-based); throws NotACover
int removed_corner_index(const Partition& mu, const Partition& nu, const CornerData& cd) {
    if (mu.size() != nu.size() + 1 || !mu.contains(nu)) throw NotACover();
    for (int k = 1; k <= cd.ell(); ++k) {
        const Cell& c = cd.removable[k - 1].cell;
        if (nu.row_length(c.row) == mu.parts()[c.row] - 1) return k;
    }
    throw NotACover();
}

// index of the addable corner of nu whose addition yields mu (0-based
// ladder order); throws NotACover
int added_corner_index(const Partition& nu, const Partition& mu, const CornerData& cd) {
    if (mu.size() != nu.size() + 1 || !mu.contains(nu)) throw NotACover();
    for (int i = 0; i < static_cast<int>(cd.addable.size()); ++i) {
        const Cell& c = cd.addable[i].cell;
        if (mu.row_length(c.row) == nu.row_length(c.row) + 1) return i;
    }
    throw NotACover();
}

// cells of nu in the row resp. column of the changed cell
std::vector<Cell> row_cells(const Partition& nu, const Cell& changed) {
    std::vector<Cell> out;
    for (int j = 0; j < nu.row_length(changed.row); ++j)
        if (j != changed.col) out.push_back({changed.row, j});
    return out;
}

std::vector<Cell> col_cells(const Partition& nu, const Cell& changed) {
    std::vector<Cell> out;
    for (int i = 0; i < nu.length(); ++i)
        if (i != changed.row && nu.parts()[i] > changed.col) out.push_back({i, changed.col});
    return out;
}

QtScalar arm_leg_factor_row(const Partition& shape, const Cell& s) {
    const ArmLeg al = arm_leg(shape, s);
    return QtScalar::monomial(1, al.arm, 0) - QtScalar::monomial(1, 0, al.leg + 1);
}

QtScalar arm_leg_factor_col(const Partition& shape, const Cell& s) {
    const ArmLeg al = arm_leg(shape, s);
    return QtScalar::monomial(1, 0, al.leg) - QtScalar::monomial(1, al.arm + 1, 0);
}

} // namespace

QtScalar c1(const Partition& mu, const Partition& nu) {
    const CornerData cd = corner_data(mu);
    const int k = removed_corner_index(mu, nu, cd);
    const QtScalar xk = cd.x(k);
    QtScalar num = xk;
    QtScalar den = QtScalar::Mtilde();
    const QtScalar one(1);
    for (int i = 0; i <= cd.ell(); ++i) num *= one - cd.u(i) / xk;
    for (int i = 1; i <= cd.ell(); ++i)
        if (i != k) den *= one - cd.x(i) / xk;
    return num / den;
}

QtScalar d1(const Partition& mu, const Partition& nu) {
    const CornerData cd = corner_data(nu);
    const int k = added_corner_index(nu, mu, cd);
    const QtScalar uk = cd.ubar(k);
    QtScalar num = uk.inv();
    QtScalar den(1);
    const QtScalar one(1);
    for (int i = 1; i <= cd.ell(); ++i) num *= one - cd.xbar(i) / uk;
    for (int i = 0; i <= cd.ell(); ++i)
        if (i != k) den *= one - cd.ubar(i) / uk;
    return num / den;
}

QtScalar c1_raw(const Partition& mu, const Partition& nu) {
    const CornerData cd = corner_data(mu);
    const int k = removed_corner_index(mu, nu, cd);
    const Cell changed = cd.removable[k - 1].cell;
    QtScalar r(1);
    for (const Cell& s : row_cells(nu, changed))
        r *= arm_leg_factor_col(mu, s) / arm_leg_factor_col(nu, s);
    for (const Cell& s : col_cells(nu, changed))
        r *= arm_leg_factor_row(mu, s) / arm_leg_factor_row(nu, s);
    return r;
}

QtScalar d1_raw(const Partition& mu, const Partition& nu) {
    const CornerData cd = corner_data(nu);
    const int k = added_corner_index(nu, mu, cd);
    const Cell changed = cd.addable[k].cell;
    QtScalar r(1);
    for (const Cell& s : row_cells(nu, changed))
        r *= arm_leg_factor_row(nu, s) / arm_leg_factor_row(mu, s);
    for (const Cell& s : col_cells(nu, changed))
        r *= arm_leg_factor_col(nu, s) / arm_leg_factor_col(mu, s);
    return r;
}

std::pair<QtScalar, QtScalar> duality_check(const Partition& mu, const Partition& nu) {
    const QtScalar lhs = d1(mu, nu);
    const QtScalar rhs = QtScalar::M() * (stats(nu).w / stats(mu).w) * c1(mu, nu);
    return {lhs, rhs};
}

namespace {

std::mutex g_ck_mutex;
std::map<std::pair<Partition, Partition>, QtScalar> g_ck_cache;

QtScalar ck_impl(const Partition& mu, const Partition& nu) {
    const int k = mu.size() - nu.size();
    if (k == 0) return QtScalar(1);
    if (k == 1) return c1(mu, nu);
    {
        std::lock_guard<std::mutex> lock(g_ck_mutex);
        auto it = g_ck_cache.find({mu, nu});
        if (it != g_ck_cache.end()) return it->second;
    }
    const QtScalar tnu = stats(nu).T;
    const QtScalar bskew = stats(mu).B - stats(nu).B; // a nonempty sum of distinct monomials
    QtScalar acc(0);
    for (const Partition& alpha : covers(nu, CoverDirection::up)) {
        if (!mu.contains(alpha)) continue;
        acc += ck_impl(mu, alpha) * c1(alpha, nu) * (stats(alpha).T / tnu);
    }
    QtScalar r = acc / bskew;
    std::lock_guard<std::mutex> lock(g_ck_mutex);
    return g_ck_cache.emplace(std::make_pair(mu, nu), std::move(r)).first->second;
}

} // namespace

QtScalar ck(const Partition& mu, const Partition& nu, int k) {
    if (!mu.contains(nu)) throw NotContained();
    if (mu.size() - nu.size() != k || k < 0) throw EmptySkew();
    return ck_impl(mu, nu);
}

QtScalar dk(const Partition& mu, const Partition& nu, int k) {
    if (!mu.contains(nu)) throw NotContained();
    if (mu.size() - nu.size() != k || k < 0) throw EmptySkew();
    return (stats(nu).w / stats(mu).w) * ck_impl(mu, nu);
}

QtScalar sum_rule(const Partition& part, int k, SumSide side) {
    assert(k >= 0);
    if (side == SumSide::c) {
        if (k == 0) return stats(part).B;
        const QtScalar tq = QtScalar::monomial(1, 1, 1);
        return tq / QtScalar::M() * pleth_h(stats(part).D / tq, k + 1);
    }
    if (k == 0) return QtScalar(1);
    const QtScalar e = pleth_e(stats(part).D, k - 1);
    return (k - 1) % 2 == 0 ? e : -e;
}

void clear_pieri_cache() {
    std::lock_guard<std::mutex> lock(g_ck_mutex);
    g_ck_cache.clear();
}

} // namespace macqt
