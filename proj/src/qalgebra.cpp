#include "macqt/qalgebra.hpp"

#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>

namespace macqt {

OperatorWord OperatorWord::identity() {
    OperatorWord w;
    w.terms_.emplace(Gens{}, QtScalar(1));
    return w;
}

OperatorWord OperatorWord::t_gen(int a) {
    OperatorWord w;
    w.terms_.emplace(Gens{Generator{a, false}}, QtScalar(1));
    return w;
}

OperatorWord OperatorWord::d0_gen() {
    OperatorWord w;
    w.terms_.emplace(Gens{Generator{0, true}}, QtScalar(1));
    return w;
}

void OperatorWord::add_term(const Gens& g, const QtScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorWord OperatorWord::operator+(const OperatorWord& o) const {
    OperatorWord r(*this);
    for (const auto& [g, c] : o.terms_) r.add_term(g, c);
    return r;
}

OperatorWord OperatorWord::operator-(const OperatorWord& o) const {
    return *this + (o * QtScalar(-1));
}

OperatorWord OperatorWord::operator*(const QtScalar& c) const {
    OperatorWord r;
    if (c.is_zero()) return r;
    for (const auto& [g, v] : terms_) r.terms_.emplace(g, v * c);
    return r;
}

OperatorWord OperatorWord::concat(const OperatorWord& o) const {
    OperatorWord r;
    for (const auto& [ga, ca] : terms_)
        for (const auto& [gb, cb] : o.terms_) {
            Gens g = ga;
            g.insert(g.end(), gb.begin(), gb.end());
            r.add_term(g, ca * cb);
        }
    return r;
}

OperatorWord OperatorWord::bracket_over_M(const OperatorWord& A, const OperatorWord& B) {
    return (A.concat(B) - B.concat(A)) * QtScalar::M().inv();
}

std::string OperatorWord::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.text() << ")";
        for (const Generator& gen : g) os << "*" << (gen.is_d0 ? "D0" : "T" + std::to_string(gen.a));
        if (g.empty()) os << "*1";
    }
    return os.str();
}

std::pair<std::pair<int, int>, std::pair<int, int>> split(int m, int n) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw NotCoprime();
    // (a,b) below the segment with a n - b m = 1
    int a = 1;
    if (m > 1) {
        // modular inverse of n mod m by extended Euclid
        long r0 = m, r1 = n % m, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const long q = r0 / r1;
            std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        }
        long inv = s0 % m;
        if (inv < 0) inv += m;
        a = static_cast<int>(inv == 0 ? m : inv);
    }
    const int b = (a * n - 1) / m;
    return {{a, b}, {m - a, n - b}};
}

namespace {

std::mutex g_word_mutex;
std::map<std::pair<int, int>, OperatorWord> g_word_cache;

} // namespace

OperatorWord q_word(QIndex idx) {
    const int m = idx.m, n = idx.n;
    if (m == 1 && n == 0) return OperatorWord::d0_gen();
    if (n < 1 || m < 0) throw UnsupportedRegion();
    if (n == 1) return OperatorWord::t_gen(m);
    if (m == 0) throw UnsupportedRegion(); // (0,n) for n >= 2 is a plain multiplication operator
    {
        std::lock_guard<std::mutex> lock(g_word_mutex);
        auto it = g_word_cache.find({m, n});
        if (it != g_word_cache.end()) return it->second;
    }
    OperatorWord w;
    const int g = std::gcd(m, n);
    if (g == 1) {
        const auto [ab, cd] = split(m, n);
        w = OperatorWord::bracket_over_M(q_word({cd.first, cd.second}),
                                         q_word({ab.first, ab.second}));
    } else {
        // canonical splitting choice: peel all but one primitive step
        const int m0 = m / g, n0 = n / g;
        const auto [ab, cd] = split(m0, n0);
        w = OperatorWord::bracket_over_M(
            q_word({cd.first, cd.second}),
            q_word({(g - 1) * m0 + ab.first, (g - 1) * n0 + ab.second}));
    }
    std::lock_guard<std::mutex> lock(g_word_mutex);
    return g_word_cache.emplace(std::make_pair(m, n), w).first->second;
}

OperatorWord q_word_choice(int u, int v, int i) {
    const int g = std::gcd(u, v);
    if (g < 2) throw Error("splitting choices require a non-co-prime pair");
    if (i < 0 || i > g - 1) throw Error("choice index out of range");
    const int m0 = u / g, n0 = v / g;
    const auto [ab, cd] = split(m0, n0);
    const int j = g - 1 - i;
    return OperatorWord::bracket_over_M(
        q_word({j * m0 + cd.first, j * n0 + cd.second}),
        q_word({i * m0 + ab.first, i * n0 + ab.second}));
}

// ---------------------------------------------------------------------------
// symbols
// ---------------------------------------------------------------------------

XPoly XPoly::monomial(int nvars, std::vector<int> exps, QtScalar c) {
    XPoly p(nvars);
    assert(static_cast<int>(exps.size()) == nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

void XPoly::add_term(const std::vector<int>& e, const QtScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPoly XPoly::operator+(const XPoly& o) const {
    assert(nvars_ == o.nvars_);
    XPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (o * QtScalar(-1)); }

XPoly XPoly::operator*(const XPoly& o) const {
    assert(nvars_ == o.nvars_);
    XPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e = ea;
            for (int i = 0; i < nvars_; ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

XPoly XPoly::operator*(const QtScalar& c) const {
    XPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

XPoly XPoly::shift(int k, int new_nvars) const {
    XPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) ne[i + k] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

QtScalar XPoly::eval(const std::vector<QtScalar>& xs) const {
    assert(static_cast<int>(xs.size()) == nvars_);
    QtScalar acc(0);
    for (const auto& [e, c] : terms_) {
        QtScalar term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= xs[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

std::string XPoly::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.text() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

XPoly symbol(int m, int n) {
    if (n == 1) {
        if (m < 0) throw UnsupportedRegion();
        return XPoly::monomial(1, {m}, QtScalar(1));
    }
    const auto [ab, cd] = split(m, n); // throws NotCoprime
    const XPoly xa = symbol(ab.first, ab.second);
    const XPoly xc = symbol(cd.first, cd.second);
    const XPoly lhs = xc.shift(0, n) * xa.shift(cd.second, n);
    const XPoly rhs = xa.shift(0, n) * xc.shift(ab.second, n);
    return (lhs - rhs) * QtScalar::M().inv();
}

XPoly symbolize(const OperatorWord& w) {
    int n = -1;
    XPoly out(0);
    bool started = false;
    for (const auto& [gens, c] : w.terms()) {
        if (!started) {
            n = static_cast<int>(gens.size());
            out = XPoly(n);
            started = true;
        }
        if (static_cast<int>(gens.size()) != n) throw Error("mixed word lengths cannot be symbolized");
        std::vector<int> e(n, 0);
        for (int i = 0; i < n; ++i) {
            if (gens[i].is_d0) throw Error("only pure generator words have symbols");
            e[i] = gens[i].a;
        }
        out.add_term(e, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// actions
// ---------------------------------------------------------------------------

namespace {

QtScalar d0_eigen(const Partition& mu) {
    return QtScalar(1) - QtScalar::M() * stats(mu).B;
}

// multiplication operator h_n[X(1/qt - 1)] scaled by qt/(qt-1)
HExp mul_axis_form(const HExp& F, int n) {
    const QtScalar qt = QtScalar::monomial(1, 1, 1);
    const SymFun h = hk_of_scaled_x(n, qt.inv() - QtScalar(1));
    return mul_sym(F, h) * (qt / (qt - QtScalar(1)));
}

} // namespace

HExp apply_word(const OperatorWord& w, const HExp& F) {
    HExp out;
    for (const auto& [gens, c] : w.terms()) {
        HExp cur = F;
        for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
            if (it->is_d0)
                cur = delta_eigen(cur, d0_eigen);
            else
                cur = q_m1(cur, it->a);
        }
        out = out + cur * c;
    }
    return out;
}

HExp apply_q(QIndex idx, const HExp& F) {
    const int m = idx.m, n = idx.n;
    if (n >= 1) {
        if (m == n) {
            // conjugated multiplication form on the diagonal
            const QtScalar qt = QtScalar::monomial(1, 1, 1);
            const SymFun h = hk_of_scaled_x(n, qt.inv() - QtScalar(1));
            return nabla(mul_sym(nabla(F, -1), h), 1) * (qt / (qt - QtScalar(1)));
        }
        if (m == 0 && n >= 2) return mul_axis_form(F, n);
        if (m < 0) throw UnsupportedRegion();
        return apply_word(q_word(idx), F);
    }
    if (n == 0) {
        if (m < 1) throw UnsupportedRegion();
        const QtScalar qt = QtScalar::monomial(1, 1, 1);
        const QtScalar pref = qt / (qt - QtScalar(1));
        const QtScalar scale = qt.inv() - QtScalar(1);
        return delta_eigen(F, [&](const Partition& mu) {
            return pref * pleth_h(stats(mu).D * scale, m);
        });
    }
    if (n == -1) {
        if (m < 0) throw UnsupportedRegion();
        return q_m_neg1(F, m);
    }
    throw UnsupportedRegion();
}

HExp q_const(int m, int n) {
    if (n < 1 || m < 0 || std::gcd(m, n) != 1) throw NotCoprime();
    const XPoly xi = symbol(m, n);
    const QtScalar qt = QtScalar::monomial(1, 1, 1);
    const QtScalar one(1);
    const QtScalar mn = QtScalar::M().pow(n);
    HExp out;
    for (const Partition& mu : partitions_of(n)) {
        QtScalar acc(0);
        for (const StandardTableau& T : standard_tableaux(mu)) {
            std::vector<QtScalar> ws(n);
            for (int k = 1; k <= n; ++k) ws[k - 1] = T.weight_of(k);
            // the symbol reads word factors left to right while the
            // tableau labels follow application order, so substitute
            // the weights reversed
            std::vector<QtScalar> rev(ws.rbegin(), ws.rend());
            QtScalar term = xi.eval(rev);
            if (term.is_zero()) continue;
            for (int k = 2; k <= n; ++k) term *= (one - ws[k - 1] * qt) / (one - qt);
            for (int h = 1; h <= n; ++h)
                for (int k = h + 1; k <= n; ++k) {
                    const QtScalar u = ws[h - 1] / ws[k - 1];
                    const QtScalar d1f = one - u;
                    const QtScalar d2f = one - u / qt;
                    if (d1f.is_zero() || d2f.is_zero()) throw SingularSubstitution();
                    term *= (one - u / QtScalar::t()) * (one - u / QtScalar::q()) / (d1f * d2f);
                }
            acc += term;
        }
        out.add_term(mu, mn * acc / stats(mu).w);
    }
    return out;
}

std::vector<Partition> d_bridge_check(int k, int n) {
    std::vector<Partition> bad;
    for (const Partition& mu : partitions_of(n)) {
        const HExp lhs = to_hbasis(d_op(hmu_monomial(mu), k));
        const HExp rhs = apply_q({1, k}, HExp::unit(mu));
        if (!(lhs == rhs)) bad.push_back(mu);
    }
    return bad;
}

void clear_qalgebra_caches() {
    std::lock_guard<std::mutex> lock(g_word_mutex);
    g_word_cache.clear();
}

} // namespace macqt
