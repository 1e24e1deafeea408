// Symmetric functions in the modified Macdonald basis and all operators
// that act there: one-cell multiplication and skewing, the nabla and
// delta eigenoperators, the conjugated one-cell generators, k-cell
// skewing/multiplication driven by the one-cell recursion, the fast
// monomial expansion with its persistent coefficient table, standard
// tableaux evaluation formulas, and the definitional eigen-decomposition
// oracle used to validate all of it.
#pragma once

#include <functional>
#include <optional>

#include "macqt/pieri.hpp"
#include "macqt/symfun.hpp"

namespace macqt {

/// Expansion sum_mu c_mu H_mu, graded by |mu|.
class HExp {
public:
    HExp() = default;
    static HExp unit(Partition mu, QtScalar c = QtScalar(1));

    const std::map<Partition, QtScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QtScalar coeff(const Partition& mu) const;
    void add_term(const Partition& mu, const QtScalar& c);
    HExp operator+(const HExp& o) const;
    HExp operator-(const HExp& o) const;
    HExp operator*(const QtScalar& c) const;
    HExp operator-() const { return *this * QtScalar(-1); }
    bool operator==(const HExp& o) const { return terms_ == o.terms_; }
    bool operator!=(const HExp& o) const { return !(*this == o); }

    std::vector<int> degrees() const;
    HExp component(int n) const;
    std::string text() const; // "H[2] + (1+q)*H[1,1]"

private:
    std::map<Partition, QtScalar> terms_;
};

/// Star scalar product of two expansions (diagonal with norms w_mu).
QtScalar star_product(const HExp& F, const HExp& G);

/// e1 * F and e1-perp F through the one-cell coefficients.
HExp mul_e1(const HExp& F);
HExp skew_e1(const HExp& F);

/// Multiply the coefficient of H_mu by T_mu^p (p may be negative).
HExp nabla(const HExp& F, int p);

/// Generic eigenoperator: multiply the coefficient of H_mu by eigen(mu).
HExp delta_eigen(const HExp& F, const std::function<QtScalar(const Partition&)>& eigen);

/// The conjugated one-cell generators:
///   q_m1:     -nabla^m e1 nabla^-m,
///   q_m_neg1: -M nabla^-m e1perp nabla^m.
HExp q_m1(const HExp& F, int m);
HExp q_m_neg1(const HExp& F, int m);

/// k-cell skewing / multiplication, edgewise via ck and dk.
HExp skew_hk(const HExp& F, int k);
HExp mul_ek_over_M(const HExp& F, int k);

/// The table of monomial-expansion coefficients at degree n, computed by
/// iterated k-cell skewing (the fast path) and cached; optionally
/// persisted as one JSON file per degree under the cache directory.
struct MTable {
    int n = 0;
    std::map<std::pair<Partition, Partition>, QtPoly> entries; // (lambda, mu)
    const QtPoly& at(const Partition& lambda, const Partition& mu) const;
};
const MTable& m_table(int n);

/// Monomial expansion of H_mu read from the table.
SymFun hmu_monomial(const Partition& mu);

/// sum_mu c_mu H_mu as an ordinary symmetric function (monomial basis).
SymFun from_hbasis(const HExp& F);

/// Exact expansion of any symmetric function in the H basis.
HExp to_hbasis(const SymFun& F);

/// Definitional oracle: eigen-decomposition of the degree-n component of
/// e_n[X/M] under the plethystic operator with eigenvalues 1 - M B_mu,
/// computed with no Pieri machinery. Throws DegenerateSpectrum if the
/// eigenvalues fail to separate (they never do).
std::map<Partition, SymFun> hmu_oracle(int n);

/// Multiply an H-expansion by an ordinary symmetric function.
HExp mul_sym(const HExp& F, const SymFun& G);

/// Composition word value on H_mu: both evaluation routes for
///   nabla^-a1 e1perp nabla^a1 ... nabla^-an e1perp nabla^an H_mu
/// with |a| = |mu| = n (a scalar in degree 0).
struct PiWordResult {
    std::vector<std::pair<StandardTableau, QtScalar>> terms; // tableau chain contributions
    QtScalar total;                                          // sum of terms
};
/// Tableau-sum route: sum over standard tableaux of
/// prod_k w_T(k)^{a_k} d1(T^(k), T^(k-1)).
PiWordResult pi_word_adjoint(const Partition& mu, const std::vector<int>& a);
/// Operator route scaled by M^n / w_mu; equals the tableau-sum total.
QtScalar pi_word_operator(const Partition& mu, const std::vector<int>& a);

/// Standard-tableaux evaluation of the k-cell coefficients:
/// tableau_m(lambda, mu) rebuilds the table entry from segment products
/// over full tableaux; tableau_skew_hm rebuilds h_m-perp H_mu from
/// m-step removal chains.
QtScalar tableau_m(const Partition& lambda, const Partition& mu);
HExp tableau_skew_hm(const Partition& mu, int m);

/// Cache directory for persisted tables: explicit path wins, else the
/// MACQT_CACHE_DIR environment variable, else in-memory only.
void set_cache_dir(std::optional<std::string> dir);
std::optional<std::string> cache_dir();

/// Drop all in-memory caches (cold benchmark runs).
void clear_hspace_caches();

} // namespace macqt
