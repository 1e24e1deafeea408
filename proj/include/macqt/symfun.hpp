// Symmetric functions over Q(q,t) in the classical bases m, e, h, p, s:
// exact basis conversion, Hall and star scalar products, plethystic
// evaluation, and the plethystic operators built from translations of
// the alphabet. Everything routes through the power-sum basis.
#pragma once

#include <map>
#include <optional>

#include "macqt/qtcoeff.hpp"
#include "macqt/shapes.hpp"

namespace macqt {

enum class Basis { m, e, h, p, s };

char basis_letter(Basis b);
std::optional<Basis> basis_from_letter(char c);

/// A symmetric function as a basis tag plus partition -> coefficient
/// terms. Terms of different sizes may coexist (graded value); zero
/// coefficients are never stored.
class SymFun {
public:
    explicit SymFun(Basis b = Basis::m) : basis_(b) {}

    static SymFun zero(Basis b) { return SymFun(b); }
    /// The constant 1 (empty-partition term).
    static SymFun one(Basis b);
    static SymFun single(Basis b, Partition lam, QtScalar c = QtScalar(1));

    Basis basis() const { return basis_; }
    const std::map<Partition, QtScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QtScalar coeff(const Partition& lam) const;
    void add_term(const Partition& lam, const QtScalar& c);
    SymFun& operator+=(const SymFun& o); // same basis
    SymFun operator+(const SymFun& o) const;
    SymFun operator-(const SymFun& o) const;
    SymFun operator*(const QtScalar& c) const;
    SymFun operator-() const { return *this * QtScalar(-1); }
    bool operator==(const SymFun& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }

    /// Degrees with a nonzero homogeneous component, ascending.
    std::vector<int> degrees() const;
    SymFun component(int n) const;

    std::string text() const; // "m[2] + (1+q)*m[1,1]"

private:
    Basis basis_;
    std::map<Partition, QtScalar> terms_;
};

/// Exact change of basis; convert(convert(F,b'),b) == F.
SymFun convert(const SymFun& F, Basis target);

/// Hall scalar product (diagonal z_lambda on power sums).
QtScalar hall_product(const SymFun& F, const SymFun& G);

/// Star scalar product: diagonal
/// (-1)^(|mu|-l(mu)) prod (1-t^mu_i)(1-q^mu_i) z_mu on power sums.
QtScalar star_product(const SymFun& F, const SymFun& G);

/// z_lambda = prod i^{m_i} m_i!.
mpz_class z_lambda(const Partition& lam);

/// omega: p_lambda -> (-1)^(|lambda|-l(lambda)) p_lambda.
SymFun omega(const SymFun& F);
/// down: omega composed with q -> 1/q, t -> 1/t on coefficients.
SymFun down(const SymFun& F);

/// General product (computed in the power-sum basis).
SymFun mul(const SymFun& F, const SymFun& G);
/// Multiplication by e_1 and its Hall adjoint (d/dp_1).
SymFun mul_e1(const SymFun& F);
SymFun skew_e1(const SymFun& F);

/// The alphabet scale*X + shift + zcoef*z^zexp. Power sums act by
/// p_k[A] = scale(q^k,t^k) p_k + shift(q^k,t^k) + zcoef(q^k,t^k) z^(k*zexp).
struct Alphabet {
    QtScalar scale;
    QtScalar shift;
    bool has_z = false;
    QtScalar zcoef;
    int zexp = 0;

    static Alphabet X() { return {QtScalar(1), QtScalar(0), false, QtScalar(0), 0}; }
    static Alphabet scaled(const QtScalar& c) { return {c, QtScalar(0), false, QtScalar(0), 0}; }
    static Alphabet constant(const QtScalar& c) { return {QtScalar(0), c, false, QtScalar(0), 0}; }
    static Alphabet x_plus_z(const QtScalar& zc, int ze) { return {QtScalar(1), QtScalar(0), true, zc, ze}; }
};

/// Result of plethysm: integer z-grading on ordinary symmetric functions
/// (power-sum basis components).
class ZGraded {
public:
    const std::map<int, SymFun>& components() const { return comps_; }
    SymFun at(int k) const;
    void add(int zdeg, const Partition& lam, const QtScalar& c);
    bool pure_scalar_grade() const { return comps_.empty() || (comps_.size() == 1 && comps_.begin()->first == 0); }

private:
    std::map<int, SymFun> comps_;
};

/// F[A] through the power-sum expansion of F.
ZGraded plethysm(const SymFun& F, const Alphabet& A);
/// F[A] when the alphabet has no z part (plain symmetric function).
SymFun plethysm_plain(const SymFun& F, const Alphabet& A);

/// Scalar plethysm: p_k, h_k, e_k evaluated at a scalar alphabet c(q,t).
QtScalar pleth_p(const QtScalar& c, int k);
QtScalar pleth_h(const QtScalar& c, int k);
QtScalar pleth_e(const QtScalar& c, int k);

/// h_k[c*X] and e_k[c*X] as symmetric functions (power-sum basis).
SymFun hk_of_scaled_x(int k, const QtScalar& c);
SymFun ek_of_scaled_x(int k, const QtScalar& c);

/// The operators D_k and D_k^*: coefficient of z^k in
/// F[X+M/z] * sum_i (-z)^i e_i[X], resp. F[X-Mtilde/z] * sum_i z^i h_i[X].
/// Defined for every integer k; graded input is handled degree by degree.
SymFun d_op(const SymFun& F, int k);
SymFun d_star_op(const SymFun& F, int k);

} // namespace macqt
