#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "macqt/qalgebra.hpp"

using namespace macqt;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
QtScalar S(long v) { return QtScalar(v); }
const QtScalar Q = QtScalar::q();
const QtScalar T = QtScalar::t();
const Partition EMPTY;
const QtScalar Minv = QtScalar::M().inv();

OperatorWord W(std::vector<int> ts) {
    OperatorWord w = OperatorWord::identity();
    for (int a : ts) w = w.concat(OperatorWord::t_gen(a));
    return w;
}
} // namespace

TEST_CASE("split") {
    auto s32 = split(3, 2);
    CHECK(s32.first == std::make_pair(2, 1));
    CHECK(s32.second == std::make_pair(1, 1));
    auto s53 = split(5, 3);
    CHECK(s53.first == std::make_pair(2, 1));
    CHECK(s53.second == std::make_pair(3, 2));
    auto s74 = split(7, 4);
    CHECK(s74.first == std::make_pair(2, 1));
    CHECK(s74.second == std::make_pair(5, 3));
    CHECK_THROWS_AS(split(4, 2), NotCoprime);

    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= 9; ++n) {
            if (std::gcd(m, n) != 1) continue;
            auto [ab, cd] = split(m, n);
            CHECK(ab.first + cd.first == m);
            CHECK(ab.second + cd.second == n);
            CHECK(ab.first * cd.second - ab.second * cd.first == 1);
            // (a,b) lies strictly below the segment, (c,d) weakly above
            CHECK(ab.second * m < ab.first * n);
            CHECK(cd.second * m >= cd.first * n);
        }
}

TEST_CASE("bracket words") {
    CHECK(q_word({1, 1}) == W({1}));
    CHECK(q_word({0, 1}) == W({0}));
    // (1/M)(T1 T2 - T2 T1)
    OperatorWord q32 = (W({1, 2}) - W({2, 1})) * Minv;
    CHECK(q_word({3, 2}) == q32);
    // (1/M^3)(T1 T2^3 - 3 T2 T1 T2^2 + 3 T2^2 T1 T2 - T2^3 T1)
    const QtScalar m3 = Minv.pow(3);
    OperatorWord q74 = W({1, 2, 2, 2}) * m3 + W({2, 1, 2, 2}) * (S(-3) * m3) +
                       W({2, 2, 1, 2}) * (S(3) * m3) + W({2, 2, 2, 1}) * (-m3);
    CHECK(q_word({7, 4}) == q74);
    CHECK_THROWS_AS(q_word({0, 2}), UnsupportedRegion);
    CHECK_THROWS_AS(q_word({2, -1}), UnsupportedRegion);
}

TEST_CASE("symbols") {
    for (int m = 0; m <= 4; ++m) {
        XPoly x = symbol(m, 1);
        CHECK(x == XPoly::monomial(1, {m}, S(1)));
    }
    XPoly x32 = symbol(3, 2);
    XPoly expect32 = XPoly::monomial(2, {1, 2}, Minv) + XPoly::monomial(2, {2, 1}, -Minv);
    CHECK(x32 == expect32);

    const QtScalar m3 = Minv.pow(3);
    XPoly expect74 = XPoly::monomial(4, {1, 2, 2, 2}, m3) +
                     XPoly::monomial(4, {2, 1, 2, 2}, S(-3) * m3) +
                     XPoly::monomial(4, {2, 2, 1, 2}, S(3) * m3) +
                     XPoly::monomial(4, {2, 2, 2, 1}, -m3);
    CHECK(symbol(7, 4) == expect74);

    // the symbol is the left-to-right substitution of the word
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            if (m + n > 7 || std::gcd(m, n) != 1) continue;
            CHECK(symbol(m, n) == symbolize(q_word({m, n})));
        }
    CHECK_THROWS_AS(symbol(4, 2), NotCoprime);
}

TEST_CASE("actions on the axis and base cases") {
    CHECK(apply_q({0, 1}, HExp::unit(EMPTY)) == HExp::unit(P({1}), S(-1)));
    // eigenvalue on the n = 0 axis at m = 1 equals 1 - M B_mu
    for (int n = 0; n <= 3; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const HExp F = HExp::unit(mu);
            const QtScalar ev = S(1) - QtScalar::M() * stats(mu).B;
            CHECK(apply_q({1, 0}, F) == F * ev);
        }
    CHECK_THROWS_AS(apply_q({0, 0}, HExp::unit(EMPTY)), UnsupportedRegion);
    CHECK_THROWS_AS(apply_q({1, -2}, HExp::unit(EMPTY)), UnsupportedRegion);
}

TEST_CASE("conjugation moves the index by one column") {
    const std::pair<int, int> pairs[] = {{0, 1}, {1, 1}, {1, 2}, {2, 1}, {3, 2}};
    for (auto [m, n] : pairs)
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d)) {
                const HExp F = HExp::unit(mu);
                const HExp lhs = apply_q({m + n, n}, F);
                const HExp rhs = nabla(apply_q({m, n}, nabla(F, -1)), 1);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("well-definedness of the splitting choices") {
    const std::tuple<int, int, int> cases[] = {{2, 2, 2}, {4, 2, 2}, {3, 3, 3}};
    for (auto [u, v, g] : cases) {
        std::vector<OperatorWord> words;
        for (int i = 0; i < g; ++i) words.push_back(q_word_choice(u, v, i));
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d)) {
                const HExp F = HExp::unit(mu);
                const HExp base = apply_word(words[0], F);
                for (size_t i = 1; i < words.size(); ++i) CHECK(apply_word(words[i], F) == base);
            }
    }
    // the canonical word is one of the choices
    CHECK(q_word({2, 2}) == q_word_choice(2, 2, 1));
}

TEST_CASE("diagonal form agrees with the bracket route") {
    for (int d = 0; d <= 3; ++d)
        for (const Partition& mu : partitions_of(d)) {
            const HExp F = HExp::unit(mu);
            CHECK(apply_q({2, 2}, F) == apply_word(q_word({2, 2}), F));
            CHECK(apply_q({1, 1}, F) == apply_word(q_word({1, 1}), F));
        }
}

TEST_CASE("tableau evaluation of the word action on constants") {
    for (int m = 0; m <= 3; ++m) CHECK(q_const(m, 1) == HExp::unit(P({1})));
    // route equality for small co-prime pairs
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            if (std::gcd(m, n) != 1) continue;
            const HExp via_word = apply_q({m, n}, HExp::unit(EMPTY, S(n % 2 == 0 ? 1 : -1)));
            CHECK(q_const(m, n) == via_word);
        }
    CHECK_THROWS_AS(q_const(4, 2), NotCoprime);
}

TEST_CASE("plethystic route matches the word route") {
    for (int k = 0; k <= 2; ++k)
        for (int n = 0; n <= 3; ++n) CHECK(d_bridge_check(k, n).empty());
}

TEST_CASE("commutator family on a fixed anti-diagonal acts identically") {
    const QtScalar qt = Q * T;
    for (int m = 1; m <= 3; ++m) {
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d)) {
                const HExp F = HExp::unit(mu);
                // eigen form qt/(qt-1) h_m[D_mu(1/qt - 1)]
                const QtScalar ev =
                    qt / (qt - S(1)) * pleth_h(stats(mu).D * (qt.inv() - S(1)), m);
                const HExp expect = F * ev;
                for (int a = 0; a <= m; ++a) {
                    const int b = m - a;
                    // (1/M)[Q_{b,-1}, Q_{a,1}]
                    HExp lhs = (apply_q({b, -1}, apply_q({a, 1}, F)) -
                                apply_q({a, 1}, apply_q({b, -1}, F))) * Minv;
                    CHECK(lhs == expect);
                }
            }
    }
}

TEST_CASE("reversed commutator ladder on the lower half") {
    // [D0*, V_k] = Mtilde V_{k-1} with V_k = nabla^-k e1perp nabla^k
    const QtScalar Mt = QtScalar::Mtilde();
    auto Vk = [](const HExp& F, int k) { return nabla(skew_e1(nabla(F, k)), -k); };
    auto d0star = [](const HExp& F) {
        return delta_eigen(F, [](const Partition& mu) {
            return S(1) - QtScalar::Mtilde() * stats(mu).B.invert_variables();
        });
    };
    for (int k = 1; k <= 3; ++k)
        for (int d = 1; d <= 4; ++d)
            for (const Partition& mu : partitions_of(d)) {
                const HExp F = HExp::unit(mu);
                const HExp lhs = d0star(Vk(F, k)) - Vk(d0star(F), k);
                CHECK(lhs == Vk(F, k - 1) * Mt);
            }
}

TEST_CASE("one-cell ladder through the eigenoperator") {
    // Q_{a,1} = (1/M)[Q_{a-1,1}, D0] and Q_{b,-1} = (1/M)[D0, Q_{b-1,-1}]
    for (int a = 1; a <= 3; ++a)
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d)) {
                const HExp F = HExp::unit(mu);
                HExp lhs = (apply_q({a - 1, 1}, apply_q({1, 0}, F)) -
                            apply_q({1, 0}, apply_q({a - 1, 1}, F))) * Minv;
                CHECK(lhs == apply_q({a, 1}, F));
            }
    for (int b = 1; b <= 3; ++b)
        for (int d = 1; d <= 4; ++d)
            for (const Partition& mu : partitions_of(d)) {
                const HExp F = HExp::unit(mu);
                HExp lhs = (apply_q({1, 0}, apply_q({b - 1, -1}, F)) -
                            apply_q({b - 1, -1}, apply_q({1, 0}, F))) * Minv;
                CHECK(lhs == apply_q({b, -1}, F));
            }
}
