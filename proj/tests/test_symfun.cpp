#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macqt/symfun.hpp"

using namespace macqt;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
QtScalar S(long v) { return QtScalar(v); }
const QtScalar Q = QtScalar::q();
const QtScalar T = QtScalar::t();
SymFun sf(Basis b, std::vector<int> lam, QtScalar c = QtScalar(1)) {
    return SymFun::single(b, P(std::move(lam)), std::move(c));
}
bool same(const SymFun& a, const SymFun& b) {
    return convert(a, Basis::p) == convert(b, Basis::p);
}
} // namespace

TEST_CASE("classical conversions") {
    CHECK(convert(sf(Basis::e, {1}), Basis::m) == sf(Basis::m, {1}));
    SymFun h2m = convert(sf(Basis::h, {2}), Basis::m);
    CHECK(h2m.coeff(P({2})) == S(1));
    CHECK(h2m.coeff(P({1, 1})) == S(1));

    SymFun s11p = convert(sf(Basis::s, {1, 1}), Basis::p);
    CHECK(s11p.coeff(P({1, 1})).mul_mpq(mpq_class(2)) == S(1));
    CHECK(s11p.coeff(P({2})).mul_mpq(mpq_class(-2)) == S(1));

    // e_n = m_{1^n}, h_n = sum of all m_mu
    SymFun e3m = convert(sf(Basis::e, {3}), Basis::m);
    CHECK(e3m.terms().size() == 1);
    CHECK(e3m.coeff(P({1, 1, 1})) == S(1));
    SymFun h3m = convert(sf(Basis::h, {3}), Basis::m);
    CHECK(h3m.terms().size() == 3);

    // s_{2,1} classical: m-expansion m21 + 2 m111
    SymFun s21m = convert(sf(Basis::s, {2, 1}), Basis::m);
    CHECK(s21m.coeff(P({2, 1})) == S(1));
    CHECK(s21m.coeff(P({1, 1, 1})) == S(2));
    CHECK(s21m.coeff(P({3})).is_zero());
}

TEST_CASE("conversion round-trips exactly") {
    const Basis all[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
    SymFun F(Basis::m);
    F.add_term(P({3, 1}), Q * T + S(1));
    F.add_term(P({2, 2}), (S(1) - T) / (S(1) - Q));
    F.add_term(P({2, 1, 1}), -Q);
    F.add_term(P({2}), T.pow(2)); // graded input
    for (Basis b1 : all)
        for (Basis b2 : all) {
            const SymFun there = convert(F, b1);
            CHECK(convert(convert(there, b2), b1) == there);
        }
}

TEST_CASE("hall product") {
    CHECK(hall_product(sf(Basis::p, {2}), sf(Basis::p, {2})) == S(2));
    for (const Partition& lam : partitions_of(4)) {
        const QtScalar v = hall_product(sf(Basis::h, {4}), SymFun::single(Basis::m, lam));
        CHECK(v == (lam == P({4}) ? S(1) : S(0)));
    }
    for (const Partition& la : partitions_of(3))
        for (const Partition& mu : partitions_of(3)) {
            const QtScalar v = hall_product(SymFun::single(Basis::s, la), SymFun::single(Basis::s, mu));
            CHECK(v == (la == mu ? S(1) : S(0)));
        }
}

TEST_CASE("star product") {
    CHECK(star_product(sf(Basis::p, {1}), sf(Basis::p, {1})) == QtScalar::M());
    QtScalar expect = S(-2) * (S(1) - T * T) * (S(1) - Q * Q);
    CHECK(star_product(sf(Basis::p, {2}), sf(Basis::p, {2})) == expect);
    // symmetry on a mixed pair
    SymFun f = sf(Basis::s, {2, 1});
    SymFun g = sf(Basis::h, {2, 1});
    CHECK(star_product(f, g) == star_product(g, f));
}

TEST_CASE("star product through the Hall product with omega and f[MX]") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& la : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                SymFun f = SymFun::single(Basis::m, la);
                SymFun g = SymFun::single(Basis::h, mu);
                SymFun phi_omega_f = plethysm_plain(omega(f), Alphabet::scaled(QtScalar::M()));
                CHECK(star_product(f, g) == hall_product(phi_omega_f, g));
            }
}

TEST_CASE("omega and down") {
    for (int n = 1; n <= 5; ++n) CHECK(same(omega(sf(Basis::h, {n})), sf(Basis::e, {n})));
    CHECK(omega(sf(Basis::p, {2})) == sf(Basis::p, {2}, S(-1)));
    SymFun F = sf(Basis::s, {2, 1}, Q / (S(1) - T));
    CHECK(same(down(down(F)), F));
    CHECK(same(omega(omega(F)), F));
}

TEST_CASE("plethysm basics") {
    // h_2[M] = (1-t)(1-q)(1+qt)
    SymFun h2 = sf(Basis::h, {2});
    SymFun r = plethysm_plain(h2, Alphabet::constant(QtScalar::M()));
    REQUIRE(r.terms().size() == 1);
    CHECK(r.coeff(Partition()) == QtScalar::M() * (S(1) + Q * T));
    CHECK(pleth_h(QtScalar::M(), 2) == QtScalar::M() * (S(1) + Q * T));
    // h_m[M] = M * sum (qt)^i for m = 3
    QtScalar qt = Q * T;
    CHECK(pleth_h(QtScalar::M(), 3) == QtScalar::M() * (S(1) + qt + qt * qt));
    CHECK(pleth_h(QtScalar::M(), 0) == S(1));

    // p_k[X + M/z] = p_k + M(q^k,t^k) z^-k
    for (int k = 1; k <= 3; ++k) {
        ZGraded g = plethysm(sf(Basis::p, {k}), Alphabet::x_plus_z(QtScalar::M(), -1));
        CHECK(g.at(0) == sf(Basis::p, {k}));
        CHECK(g.at(-k) == SymFun::single(Basis::p, Partition(), QtScalar::M().substitute_powers(k)));
    }

    // e_1[X/M] = p_1/M
    SymFun e1m = plethysm_plain(sf(Basis::e, {1}), Alphabet::scaled(QtScalar::M().inv()));
    CHECK(convert(e1m, Basis::p) == sf(Basis::p, {1}, QtScalar::M().inv()));
}

TEST_CASE("exponential generating identity: h_m[A+B] factors") {
    const QtScalar A = QtScalar::M();
    const QtScalar B = Q * T + T;
    for (int m = 0; m <= 6; ++m) {
        QtScalar conv(0);
        for (int r = 0; r <= m; ++r) conv += pleth_h(A, m - r) * pleth_h(B, r);
        CHECK(pleth_h(A + B, m) == conv);
    }
}

TEST_CASE("D operator basics") {
    // D_1 applied to 1 is -e_1
    SymFun one = SymFun::one(Basis::p);
    CHECK(same(d_op(one, 1), sf(Basis::e, {1}, S(-1))));
    CHECK(same(d_op(one, 0), one));
    // D_0 p_1 = (1-M) p_1
    SymFun p1 = sf(Basis::p, {1});
    CHECK(convert(d_op(p1, 0), Basis::p) == sf(Basis::p, {1}, S(1) - QtScalar::M()));
    // D_{-1} e_1 = M
    SymFun r = d_op(sf(Basis::e, {1}), -1);
    CHECK(convert(r, Basis::p) == SymFun::single(Basis::p, Partition(), QtScalar::M()));
}

TEST_CASE("commutator recursion for D_k") {
    // (1/M)(D_{k-1} e1 - e1 D_{k-1}) = D_k on degree <= 5, k <= 3
    const QtScalar Minv = QtScalar::M().inv();
    for (int n = 0; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const SymFun F = SymFun::single(Basis::m, lam);
            for (int k = 1; k <= 3; ++k) {
                SymFun lhs = (d_op(mul_e1(F), k - 1) - mul_e1(d_op(F, k - 1))) * Minv;
                CHECK(same(lhs, d_op(F, k)));
            }
        }
}

TEST_CASE("D and D* ladder identities") {
    const QtScalar M = QtScalar::M();
    const QtScalar Mt = QtScalar::Mtilde();
    for (int n = 0; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const SymFun F = SymFun::single(Basis::m, lam);
            for (int k = -1; k <= 2; ++k) {
                // D_k e1 - e1 D_k = M D_{k+1}
                CHECK(same(d_op(mul_e1(F), k) - mul_e1(d_op(F, k)), d_op(F, k + 1) * M));
                // D*_k e1 - e1 D*_k = -Mt D*_{k+1}
                CHECK(same(d_star_op(mul_e1(F), k) - mul_e1(d_star_op(F, k)),
                           d_star_op(F, k + 1) * (-Mt)));
                // D_k e1perp - e1perp D_k = D_{k-1}
                CHECK(same(d_op(skew_e1(F), k) - skew_e1(d_op(F, k)), d_op(F, k - 1)));
                // D*_k e1perp - e1perp D*_k = -D*_{k-1}
                CHECK(same(d_star_op(skew_e1(F), k) - skew_e1(d_star_op(F, k)),
                           -d_star_op(F, k - 1)));
            }
        }
}

TEST_CASE("mixed commutator of D and D*") {
    // (D_a D*_b - D*_b D_a) P = M (qt)^{-a}/(tq-1) h_{a+b}[X(1-tq)] P
    const QtScalar M = QtScalar::M();
    const QtScalar denom = T * Q - S(1);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3 - a; ++b) {
            if (a + b < 1) continue;
            const QtScalar pref = M * QtScalar::monomial(1, -a, -a) / denom;
            const SymFun hmul = hk_of_scaled_x(a + b, S(1) - T * Q);
            for (int n = 0; n <= 3; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    const SymFun F = SymFun::single(Basis::m, lam);
                    // operator products apply right to left
                    SymFun lhs = d_op(d_star_op(F, b), a) - d_star_op(d_op(F, a), b);
                    SymFun rhs = mul(F, hmul) * pref;
                    CHECK(same(lhs, rhs));
                }
        }
}

TEST_CASE("star adjointness of D_k") {
    // <D_k f, g>_* = <f, (-1)^k D_{-k} g>_*
    for (int k = -2; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n) {
            if (n + k < 0) continue;
            for (const Partition& la : partitions_of(n))
                for (const Partition& mu : partitions_of(n + k)) {
                    const SymFun f = SymFun::single(Basis::m, la);
                    const SymFun g = SymFun::single(Basis::h, mu);
                    QtScalar lhs = star_product(d_op(f, k), g);
                    QtScalar rhs = star_product(f, d_op(g, -k));
                    if (k % 2 != 0) rhs = -rhs;
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("down conjugates D_k to D_k*") {
    // down(D_k(down F)) = (-1)^k D*_k F
    for (int k = 0; k <= 2; ++k)
        for (int n = 0; n <= 4; ++n)
            for (const Partition& lam : partitions_of(n)) {
                const SymFun F = SymFun::single(Basis::m, lam);
                SymFun lhs = down(d_op(down(F), k));
                SymFun rhs = d_star_op(F, k);
                if (k % 2 == 1) rhs = -rhs;
                CHECK(same(lhs, rhs));
            }
}

TEST_CASE("text form") {
    SymFun F(Basis::m);
    F.add_term(P({2}), S(1));
    F.add_term(P({1, 1}), S(1) + Q);
    CHECK(F.text() == "m[2] + (1 + q)*m[1,1]");
    CHECK(sf(Basis::m, {1}).text() == "m[1]");
}
