// The lattice-indexed operator family built from the conjugated
// one-cell generators: the closest-lattice-point splitting, bracket
// words, commutative symbol polynomials, eigenoperator forms on the
// axis and diagonal, and the standard-tableaux evaluation of word
// actions on constants.
#pragma once

#include "macqt/hspace.hpp"

namespace macqt {

struct QIndex {
    int m = 0;
    int n = 0;
};

/// One word letter: T_a (the conjugated multiplication generator) or
/// the degree-preserving eigenoperator D0.
struct Generator {
    int a = 0;
    bool is_d0 = false;
    bool operator==(const Generator& g) const { return a == g.a && is_d0 == g.is_d0; }
    bool operator<(const Generator& g) const {
        if (is_d0 != g.is_d0) return is_d0 < g.is_d0;
        return a < g.a;
    }
};

/// Linear combination of generator sequences. Sequences apply right to
/// left; the empty sequence is the identity.
class OperatorWord {
public:
    using Gens = std::vector<Generator>;

    static OperatorWord identity();
    static OperatorWord t_gen(int a);
    static OperatorWord d0_gen();

    const std::map<Gens, QtScalar>& terms() const { return terms_; }
    void add_term(const Gens& g, const QtScalar& c);
    OperatorWord operator+(const OperatorWord& o) const;
    OperatorWord operator-(const OperatorWord& o) const;
    OperatorWord operator*(const QtScalar& c) const;
    /// Concatenation: (A*B)(F) = A(B(F)).
    OperatorWord concat(const OperatorWord& o) const;
    /// (1/M)(A B - B A).
    static OperatorWord bracket_over_M(const OperatorWord& A, const OperatorWord& B);
    bool operator==(const OperatorWord& o) const { return terms_ == o.terms_; }

    std::string text() const; // e.g. "(1/M)*(T1*T2 - T2*T1)"

private:
    std::map<Gens, QtScalar> terms_;
};

/// Split of a co-prime pair (m,n), m,n >= 1: the unique ((a,b),(c,d))
/// with (a,b)+(c,d) = (m,n), a d - b c = 1, and (a,b) the closest
/// lattice point below the segment to (m,n). Throws NotCoprime.
std::pair<std::pair<int, int>, std::pair<int, int>> split(int m, int n);

/// The word of Q_{m,n} in the region n >= 1 (plus the single letter D0
/// at (1,0)): T_m at n = 1, the splitting bracket for co-prime n > 1,
/// and for (u,v) = (k m, k n) the canonical splitting choice that peels
/// one primitive step. Memoized. Throws UnsupportedRegion outside.
OperatorWord q_word(QIndex idx);

/// The bracket of the general splitting family for (u,v) with
/// gcd k >= 2 and a choice 0 <= i <= k-1 (j = k-1-i). All choices act
/// identically; exposed for the well-definedness checks.
OperatorWord q_word_choice(int u, int v, int i);

/// Commutative polynomial in x_1..x_n with scalar coefficients.
class XPoly {
public:
    explicit XPoly(int nvars = 0) : nvars_(nvars) {}
    static XPoly monomial(int nvars, std::vector<int> exps, QtScalar c);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, QtScalar>& terms() const { return terms_; }
    void add_term(const std::vector<int>& e, const QtScalar& c);
    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const QtScalar& c) const;
    /// Index shift x_i -> x_{i+k} inside an n-variable frame.
    XPoly shift(int k, int new_nvars) const;
    QtScalar eval(const std::vector<QtScalar>& xs) const;
    bool operator==(const XPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    std::string text() const;

private:
    int nvars_;
    std::map<std::vector<int>, QtScalar> terms_;
};

/// Symbol polynomial of a co-prime pair by the splitting recursion.
XPoly symbol(int m, int n);

/// Left-to-right substitution of a pure T-word: the i-th factor of each
/// sequence becomes x_i^{a_i}. All sequences must have equal length.
XPoly symbolize(const OperatorWord& w);

/// Apply a word (right to left) to an H-expansion.
HExp apply_word(const OperatorWord& w, const HExp& F);

/// Action of Q_{m,n} on an H-expansion over the supported regions:
/// words for n >= 1 (the diagonal uses the conjugated multiplication
/// form, the m = 0 column the plain multiplication form), the
/// eigenoperator on n = 0, m >= 1, and the adjoint generators on
/// n = -1, m >= 0. Throws UnsupportedRegion.
HExp apply_q(QIndex idx, const HExp& F);

/// Tableau-sum evaluation of Q_{m,n} applied to the constant (-1)^n,
/// for co-prime (m,n), n >= 1; equals the word route exactly.
/// Throws NotCoprime / SingularSubstitution.
HExp q_const(int m, int n);

/// Compares the plethystic route D_k = coefficient extraction against
/// the word route Q_{1,k} on every H_mu with mu of size n; returns the
/// list of disagreeing partitions (expected empty).
std::vector<Partition> d_bridge_check(int k, int n);

void clear_qalgebra_caches();

} // namespace macqt
