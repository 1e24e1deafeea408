// Exact arithmetic in the field Q(q,t): sparse bivariate integer
// polynomials and reduced rational functions over them. Values are
// immutable once built and safe to share across threads.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "macqt/errors.hpp"

namespace macqt {

/// One monomial c * q^qe * t^te. Exponents are nonnegative in QtPoly;
/// Laurent behaviour lives in QtScalar denominators.
struct QtTerm {
    int qe = 0;
    int te = 0;
    mpz_class c;
};

/// Graded-lex order with q > t: first by total degree, then by q-exponent.
inline int grlex_cmp(int aq, int at, int bq, int bt) {
    const int da = aq + at, db = bq + bt;
    if (da != db) return da < db ? -1 : 1;
    if (aq != bq) return aq < bq ? -1 : 1;
    return 0;
}

/// Sparse polynomial in Z[q,t]. Terms are kept sorted ascending in
/// graded-lex order and never hold a zero coefficient; the zero
/// polynomial is the empty term list.
class QtPoly {
public:
    QtPoly() = default;
    explicit QtPoly(long v) { if (v != 0) terms_.push_back({0, 0, mpz_class(v)}); }
    explicit QtPoly(const mpz_class& v) { if (v != 0) terms_.push_back({0, 0, v}); }

    static QtPoly monomial(mpz_class c, int qe, int te);
    static QtPoly q() { return monomial(1, 1, 0); }
    static QtPoly t() { return monomial(1, 0, 1); }

    /// Build from unsorted (possibly duplicated) terms.
    static QtPoly from_terms(std::vector<QtTerm> terms);

    const std::vector<QtTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    const QtTerm& leading() const { return terms_.back(); }
    int qdeg() const;  // max q-exponent, -1 for zero
    int tdeg() const;  // max t-exponent, -1 for zero

    QtPoly operator-() const;
    QtPoly operator+(const QtPoly& o) const;
    QtPoly operator-(const QtPoly& o) const;
    QtPoly operator*(const QtPoly& o) const;
    QtPoly mul_mpz(const mpz_class& c) const;
    QtPoly mul_monomial(const mpz_class& c, int qe, int te) const;
    QtPoly pow(unsigned e) const;

    bool operator==(const QtPoly& o) const;
    bool operator!=(const QtPoly& o) const { return !(*this == o); }
    /// Total order usable as a map key (grlex term-list comparison).
    int cmp(const QtPoly& o) const;

    /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
    mpz_class content() const;
    QtPoly divexact_mpz(const mpz_class& c) const;

    /// q -> q^k, t -> t^k.
    QtPoly substitute_powers(int k) const;
    /// q <-> t.
    QtPoly swap_qt() const;

    mpq_class evaluate(const mpq_class& q0, const mpq_class& t0) const;

    /// Quotient when d divides this exactly; nullptr-style failure via bool.
    static bool try_divexact(const QtPoly& a, const QtPoly& d, QtPoly& quot);

    /// gcd in Z[q,t], positive leading coefficient; gcd(0,0) = 0.
    static QtPoly gcd(const QtPoly& a, const QtPoly& b);

    std::string text() const;

private:
    std::vector<QtTerm> terms_;
};

/// Reduced rational function num/den over Z[q,t].
///
/// Canonical form: den != 0, gcd(num, den) = 1 (integer contents
/// included), and the coefficient of den's graded-lex greatest term is
/// positive. Structural equality of canonical fields decides equality
/// in Q(q,t).
class QtScalar {
public:
    QtScalar() : num_(), den_(1) {}
    explicit QtScalar(long v) : num_(v), den_(1) {}
    explicit QtScalar(const mpz_class& v) : num_(v), den_(1) {}
    explicit QtScalar(const mpq_class& v);

    /// Canonicalize num/den. Throws ZeroDenominator.
    static QtScalar normalize(QtPoly num, QtPoly den);

    static QtScalar q() { return from_poly(QtPoly::q()); }
    static QtScalar t() { return from_poly(QtPoly::t()); }
    static QtScalar from_poly(QtPoly p) { QtScalar s; s.num_ = std::move(p); s.den_ = QtPoly(1); return s; }
    /// c * q^qe * t^te with possibly negative exponents.
    static QtScalar monomial(const mpz_class& c, int qe, int te);
    /// M = (1-t)(1-q).
    static QtScalar M();
    /// Mtilde = (1-1/t)(1-1/q).
    static QtScalar Mtilde();

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one() && num_.is_constant(); }

    QtScalar operator-() const;
    QtScalar operator+(const QtScalar& o) const;
    QtScalar operator-(const QtScalar& o) const;
    QtScalar operator*(const QtScalar& o) const;
    QtScalar operator/(const QtScalar& o) const;  // throws DivisionByZero
    QtScalar inv() const;                         // throws DivisionByZero
    QtScalar pow(int e) const;

    QtScalar& operator+=(const QtScalar& o) { *this = *this + o; return *this; }
    QtScalar& operator-=(const QtScalar& o) { *this = *this - o; return *this; }
    QtScalar& operator*=(const QtScalar& o) { *this = *this * o; return *this; }

    QtScalar mul_mpq(const mpq_class& c) const;

    bool operator==(const QtScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QtScalar& o) const { return !(*this == o); }
    int cmp(const QtScalar& o) const;

    /// q -> q^k, t -> t^k (ring homomorphism; preserves canonical form).
    QtScalar substitute_powers(int k) const;
    /// q -> 1/q, t -> 1/t, re-normalized; an involution.
    QtScalar invert_variables() const;
    QtScalar swap_qt() const;

    /// The quotient polynomial; throws NotPolynomial unless den divides num.
    QtPoly as_polynomial() const;

    /// Exact value at a rational point; throws PoleAtPoint.
    mpq_class evaluate(const mpq_class& q0, const mpq_class& t0) const;

    std::string text() const;

private:
    QtPoly num_;
    QtPoly den_;
};

inline QtScalar operator*(long a, const QtScalar& s) { return QtScalar(a) * s; }

} // namespace macqt
