#include "macqt/symfun.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <sstream>

namespace macqt {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::p: return 'p';
        case Basis::s: return 's';
    }
    return '?';
}

std::optional<Basis> basis_from_letter(char c) {
    switch (c) {
        case 'm': return Basis::m;
        case 'e': return Basis::e;
        case 'h': return Basis::h;
        case 'p': return Basis::p;
        case 's': return Basis::s;
    }
    return std::nullopt;
}

SymFun SymFun::one(Basis b) { return single(b, Partition()); }

SymFun SymFun::single(Basis b, Partition lam, QtScalar c) {
    SymFun f(b);
    if (!c.is_zero()) f.terms_.emplace(std::move(lam), std::move(c));
    return f;
}

QtScalar SymFun::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? QtScalar(0) : it->second;
}

void SymFun::add_term(const Partition& lam, const QtScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
        terms_.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFun& SymFun::operator+=(const SymFun& o) {
    assert(basis_ == o.basis_);
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFun SymFun::operator+(const SymFun& o) const {
    SymFun r(*this);
    r += o;
    return r;
}

SymFun SymFun::operator-(const SymFun& o) const { return *this + (-o); }

SymFun SymFun::operator*(const QtScalar& c) const {
    SymFun r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [lam, v] : terms_) r.terms_.emplace(lam, v * c);
    return r;
}

std::vector<int> SymFun::degrees() const {
    std::vector<int> out;
    for (const auto& [lam, c] : terms_)
        if (out.empty() || out.back() != lam.size()) out.push_back(lam.size());
    return out;
}

SymFun SymFun::component(int n) const {
    SymFun r(basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.size() == n) r.terms_.emplace(lam, c);
    return r;
}

std::string SymFun::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        std::string cs = c.text();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        std::string mono = std::string(1, basis_letter(basis_)) + lam.text();
        if (cs == "1") {
            os << mono;
        } else if (needs_parens) {
            os << "(" << cs << ")*" << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// transition tables (all coefficients are plain rationals)
// ---------------------------------------------------------------------------

mpz_class z_lambda(const Partition& lam) {
    mpz_class z(1);
    int run = 0, prev = -1;
    auto flush = [&](int value, int count) {
        if (count == 0) return;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), count);
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), value, count);
        z *= f * pw;
    };
    for (int part : lam.parts()) {
        if (part == prev) {
            ++run;
        } else {
            flush(prev, run);
            prev = part;
            run = 1;
        }
    }
    flush(prev, run);
    return z;
}

namespace {

using RatMap = std::map<Partition, mpq_class>;
using Matrix = std::vector<std::vector<mpq_class>>;

std::mutex g_tables_mutex;

// p_lambda expanded in the monomial basis, per partition
std::map<Partition, RatMap> g_p2m;

// basis expansion in p, per (basis letter, partition)
std::map<std::pair<char, Partition>, RatMap> g_x2p;

// inverse matrices for extraction, per (basis letter, degree)
std::map<std::pair<char, int>, Matrix> g_extract_inv;

const std::vector<Partition>& degree_list(int n) {
    static std::mutex m;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, partitions_of(n)).first;
    return it->second;
}

int degree_index(int n, const Partition& lam) {
    const auto& list = degree_list(n);
    const auto it = std::lower_bound(list.begin(), list.end(), lam);
    assert(it != list.end() && *it == lam);
    return static_cast<int>(it - list.begin());
}

// multiply an m-basis expansion by p_k: add k to one part (a fresh zero
// part allowed); the coefficient of the outcome counts the positions of
// the grown part.
RatMap m_times_pk(const RatMap& f, int k) {
    RatMap out;
    for (const auto& [lam, c] : f) {
        std::vector<int> distinct{0};
        for (int v : lam.parts())
            if (distinct.back() != v) distinct.push_back(v);
        for (int v : distinct) {
            std::vector<int> parts = lam.parts();
            if (v == 0) {
                parts.push_back(k);
            } else {
                for (auto& pv : parts)
                    if (pv == v) {
                        pv += k;
                        break;
                    }
            }
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            Partition mu(parts);
            int mult = 0;
            for (int pv : mu.parts())
                if (pv == v + k) ++mult;
            out[mu] += c * mult;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

const RatMap& p_in_m(const Partition& lam) {
    {
        std::lock_guard<std::mutex> lock(g_tables_mutex);
        auto it = g_p2m.find(lam);
        if (it != g_p2m.end()) return it->second;
    }
    RatMap r;
    if (lam.empty()) {
        r[Partition()] = 1;
    } else {
        std::vector<int> rest(lam.parts().begin() + 1, lam.parts().end());
        const RatMap& sub = p_in_m(Partition(rest));
        r = m_times_pk(sub, lam.parts()[0]);
    }
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    return g_p2m.emplace(lam, std::move(r)).first->second;
}

RatMap pk_expansion(char which, int k) {
    // h_k or e_k in the power-sum basis
    RatMap r;
    for (const Partition& mu : degree_list(k)) {
        mpq_class c(1);
        c /= mpq_class(z_lambda(mu));
        if (which == 'e' && (k - mu.length()) % 2 == 1) c = -c;
        r[mu] = c;
    }
    return r;
}

RatMap p_product(const RatMap& a, const RatMap& b) {
    RatMap out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out[Partition(parts)] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

RatMap multiplicative_in_p(char which, const Partition& lam) {
    RatMap r;
    r[Partition()] = 1;
    for (int part : lam.parts()) r = p_product(r, pk_expansion(which, part));
    return r;
}

// Jacobi-Trudi determinant in h (or e via the conjugate, whichever side
// is smaller), expanded over permutations.
RatMap schur_in_p(const Partition& lam) {
    if (lam.empty()) {
        RatMap r;
        r[Partition()] = 1;
        return r;
    }
    Partition shape = lam;
    char gens = 'h';
    if (lam.length() > lam.parts()[0]) {
        shape = lam.conjugate();
        gens = 'e';
    }
    const int l = shape.length();
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    RatMap acc;
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> indices;
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            const int idx = shape.parts()[i] - (i + 1) + (perm[i] + 1);
            if (idx < 0) zero = true;
            else if (idx > 0) indices.push_back(idx);
        }
        if (zero) continue;
        std::sort(indices.begin(), indices.end(), std::greater<int>());
        RatMap term = multiplicative_in_p(gens, Partition(indices));
        const int sign = inversions % 2 == 0 ? 1 : -1;
        for (const auto& [mu, c] : term) acc[mu] += sign * c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

const RatMap& x_in_p(Basis b, const Partition& lam) {
    assert(b != Basis::p && b != Basis::m);
    const char letter = basis_letter(b);
    {
        std::lock_guard<std::mutex> lock(g_tables_mutex);
        auto it = g_x2p.find({letter, lam});
        if (it != g_x2p.end()) return it->second;
    }
    RatMap r = b == Basis::s ? schur_in_p(lam) : multiplicative_in_p(letter, lam);
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    return g_x2p.emplace(std::make_pair(letter, lam), std::move(r)).first->second;
}

Matrix invert_matrix(Matrix a) {
    const int n = static_cast<int>(a.size());
    Matrix inv(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        assert(piv >= 0 && "transition matrix is invertible");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const mpq_class d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Inverse of the transposed expansion matrix of basis b in its
// coordinate basis (m for p, p for e/h/s), per degree; maps coordinate
// vectors back to b-coefficients.
const Matrix& extraction_matrix(Basis b, int n) {
    const char letter = basis_letter(b);
    {
        std::lock_guard<std::mutex> lock(g_tables_mutex);
        auto it = g_extract_inv.find({letter, n});
        if (it != g_extract_inv.end()) return it->second;
    }
    const auto& list = degree_list(n);
    const int d = static_cast<int>(list.size());
    Matrix fwd(d, std::vector<mpq_class>(d, 0));
    for (int i = 0; i < d; ++i) {
        const RatMap& row = b == Basis::p ? p_in_m(list[i]) : x_in_p(b, list[i]);
        for (const auto& [mu, c] : row) fwd[i][degree_index(n, mu)] = c;
    }
    Matrix fwd_t(d, std::vector<mpq_class>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) fwd_t[i][j] = fwd[j][i];
    Matrix inv = invert_matrix(std::move(fwd_t));
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    return g_extract_inv.emplace(std::make_pair(letter, n), std::move(inv)).first->second;
}

SymFun apply_ratmap_rows(Basis out_basis, const SymFun& F,
                         const std::function<const RatMap&(const Partition&)>& row) {
    SymFun out(out_basis);
    for (const auto& [lam, c] : F.terms())
        for (const auto& [mu, r] : row(lam)) out.add_term(mu, c.mul_mpq(r));
    return out;
}

SymFun solve_to_basis(Basis target, const SymFun& coords) {
    // coords lives in m when target == p, in p when target is e/h/s
    SymFun out(target);
    for (int n : coords.degrees()) {
        const SymFun comp = coords.component(n);
        const auto& list = degree_list(n);
        const Matrix& inv = extraction_matrix(target, n);
        const int d = static_cast<int>(list.size());
        std::vector<QtScalar> vec(d, QtScalar(0));
        for (const auto& [lam, c] : comp.terms()) vec[degree_index(n, lam)] = c;
        for (int i = 0; i < d; ++i) {
            QtScalar acc(0);
            for (int j = 0; j < d; ++j) {
                if (inv[i][j] == 0 || vec[j].is_zero()) continue;
                acc += vec[j].mul_mpq(inv[i][j]);
            }
            out.add_term(list[i], acc);
        }
    }
    return out;
}

SymFun to_p(const SymFun& F) {
    switch (F.basis()) {
        case Basis::p: return F;
        case Basis::m: return solve_to_basis(Basis::p, F);
        default:
            return apply_ratmap_rows(Basis::p, F, [&](const Partition& lam) -> const RatMap& {
                return x_in_p(F.basis(), lam);
            });
    }
}

SymFun p_to_m(const SymFun& F) {
    assert(F.basis() == Basis::p);
    return apply_ratmap_rows(Basis::m, F, [](const Partition& lam) -> const RatMap& {
        return p_in_m(lam);
    });
}

} // namespace

SymFun convert(const SymFun& F, Basis target) {
    if (F.basis() == target) return F;
    if (F.basis() == Basis::p && target == Basis::m) return p_to_m(F);
    if (target == Basis::p) return to_p(F);
    const SymFun P = to_p(F);
    if (target == Basis::m) return p_to_m(P);
    return solve_to_basis(target, P);
}

QtScalar hall_product(const SymFun& F, const SymFun& G) {
    const SymFun fp = convert(F, Basis::p);
    const SymFun gp = convert(G, Basis::p);
    QtScalar acc(0);
    for (const auto& [lam, fc] : fp.terms()) {
        const QtScalar gc = gp.coeff(lam);
        if (gc.is_zero()) continue;
        acc += (fc * gc).mul_mpq(mpq_class(z_lambda(lam)));
    }
    return acc;
}

QtScalar star_product(const SymFun& F, const SymFun& G) {
    const SymFun fp = convert(F, Basis::p);
    const SymFun gp = convert(G, Basis::p);
    const QtScalar one(1);
    QtScalar acc(0);
    for (const auto& [lam, fc] : fp.terms()) {
        const QtScalar gc = gp.coeff(lam);
        if (gc.is_zero()) continue;
        QtScalar diag = QtScalar(z_lambda(lam));
        if ((lam.size() - lam.length()) % 2 == 1) diag = -diag;
        for (int part : lam.parts())
            diag *= (one - QtScalar::monomial(1, 0, part)) * (one - QtScalar::monomial(1, part, 0));
        acc += fc * gc * diag;
    }
    return acc;
}

SymFun omega(const SymFun& F) {
    const SymFun fp = convert(F, Basis::p);
    SymFun out(Basis::p);
    for (const auto& [lam, c] : fp.terms()) {
        const bool flip = (lam.size() - lam.length()) % 2 == 1;
        out.add_term(lam, flip ? -c : c);
    }
    return convert(out, F.basis());
}

SymFun down(const SymFun& F) {
    const SymFun fp = convert(F, Basis::p);
    SymFun out(Basis::p);
    for (const auto& [lam, c] : fp.terms()) {
        QtScalar v = c.invert_variables();
        if ((lam.size() - lam.length()) % 2 == 1) v = -v;
        out.add_term(lam, v);
    }
    return convert(out, F.basis());
}

SymFun mul(const SymFun& F, const SymFun& G) {
    const SymFun fp = convert(F, Basis::p);
    const SymFun gp = convert(G, Basis::p);
    SymFun out(Basis::p);
    for (const auto& [la, ca] : fp.terms())
        for (const auto& [lb, cb] : gp.terms()) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out.add_term(Partition(parts), ca * cb);
        }
    return convert(out, F.basis());
}

SymFun mul_e1(const SymFun& F) {
    const SymFun fp = convert(F, Basis::p);
    SymFun out(Basis::p);
    for (const auto& [lam, c] : fp.terms()) {
        std::vector<int> parts = lam.parts();
        parts.push_back(1);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.add_term(Partition(parts), c);
    }
    return convert(out, F.basis());
}

SymFun skew_e1(const SymFun& F) {
    const SymFun fp = convert(F, Basis::p);
    SymFun out(Basis::p);
    for (const auto& [lam, c] : fp.terms()) {
        int ones = 0;
        for (int part : lam.parts())
            if (part == 1) ++ones;
        if (ones == 0) continue;
        std::vector<int> parts = lam.parts();
        parts.pop_back(); // descending parts, so the trailing part is a 1
        out.add_term(Partition(parts), c * QtScalar(ones));
    }
    return convert(out, F.basis());
}

// ---------------------------------------------------------------------------
// plethysm
// ---------------------------------------------------------------------------

SymFun ZGraded::at(int k) const {
    auto it = comps_.find(k);
    return it == comps_.end() ? SymFun(Basis::p) : it->second;
}

void ZGraded::add(int zdeg, const Partition& lam, const QtScalar& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(zdeg);
    if (it == comps_.end()) it = comps_.emplace(zdeg, SymFun(Basis::p)).first;
    it->second.add_term(lam, c);
    if (it->second.is_zero()) comps_.erase(it);
}

ZGraded plethysm(const SymFun& F, const Alphabet& A) {
    const SymFun fp = convert(F, Basis::p);
    ZGraded out;
    for (const auto& [lam, c] : fp.terms()) {
        // expand prod_k ( scale_k p_k + shift_k + zcoef_k z^(k ze) )
        std::map<std::pair<int, Partition>, QtScalar> acc;
        acc[{0, Partition()}] = c;
        for (int part : lam.parts()) {
            const QtScalar sc = A.scale.is_zero() ? QtScalar(0) : A.scale.substitute_powers(part);
            const QtScalar sh = A.shift.is_zero() ? QtScalar(0) : A.shift.substitute_powers(part);
            const QtScalar zc = (A.has_z && !A.zcoef.is_zero()) ? A.zcoef.substitute_powers(part) : QtScalar(0);
            std::map<std::pair<int, Partition>, QtScalar> next;
            auto push = [&next](int zd, const Partition& mu, const QtScalar& v) {
                if (v.is_zero()) return;
                auto it = next.find({zd, mu});
                if (it == next.end()) {
                    next.emplace(std::make_pair(zd, mu), v);
                } else {
                    it->second += v;
                    if (it->second.is_zero()) next.erase(it);
                }
            };
            for (const auto& [key, v] : acc) {
                const auto& [zd, mu] = key;
                if (!sc.is_zero()) {
                    std::vector<int> parts = mu.parts();
                    parts.push_back(part);
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    push(zd, Partition(parts), v * sc);
                }
                if (!sh.is_zero()) push(zd, mu, v * sh);
                if (!zc.is_zero()) push(zd + part * A.zexp, mu, v * zc);
            }
            acc = std::move(next);
        }
        for (const auto& [key, v] : acc) out.add(key.first, key.second, v);
    }
    return out;
}

SymFun plethysm_plain(const SymFun& F, const Alphabet& A) {
    assert(!A.has_z);
    SymFun r = plethysm(F, A).at(0);
    return convert(r, F.basis());
}

QtScalar pleth_p(const QtScalar& c, int k) {
    assert(k >= 1);
    return c.substitute_powers(k);
}

QtScalar pleth_h(const QtScalar& c, int k) {
    assert(k >= 0);
    // Newton: n h_n = sum_{j=1..n} p_j h_{n-j}
    std::vector<QtScalar> h{QtScalar(1)};
    for (int n = 1; n <= k; ++n) {
        QtScalar acc(0);
        for (int j = 1; j <= n; ++j) acc += pleth_p(c, j) * h[n - j];
        h.push_back(acc.mul_mpq(mpq_class(1, n)));
    }
    return h[k];
}

QtScalar pleth_e(const QtScalar& c, int k) {
    assert(k >= 0);
    // Newton: n e_n = sum_{j=1..n} (-1)^(j-1) p_j e_{n-j}
    std::vector<QtScalar> e{QtScalar(1)};
    for (int n = 1; n <= k; ++n) {
        QtScalar acc(0);
        for (int j = 1; j <= n; ++j) {
            const QtScalar term = pleth_p(c, j) * e[n - j];
            acc += j % 2 == 1 ? term : -term;
        }
        e.push_back(acc.mul_mpq(mpq_class(1, n)));
    }
    return e[k];
}

SymFun hk_of_scaled_x(int k, const QtScalar& c) {
    if (k == 0) return SymFun::one(Basis::p);
    return plethysm(SymFun::single(Basis::h, Partition(std::vector<int>(1, k))), Alphabet::scaled(c)).at(0);
}

SymFun ek_of_scaled_x(int k, const QtScalar& c) {
    if (k == 0) return SymFun::one(Basis::p);
    return plethysm(SymFun::single(Basis::e, Partition(std::vector<int>(1, k))), Alphabet::scaled(c)).at(0);
}

// ---------------------------------------------------------------------------
// the D operators
// ---------------------------------------------------------------------------

namespace {

const SymFun& ei_in_p(int i) {
    static std::mutex m;
    static std::map<int, SymFun> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(i);
    if (it == cache.end()) {
        SymFun e = i == 0 ? SymFun::one(Basis::p)
                          : convert(SymFun::single(Basis::e, Partition(std::vector<int>(1, i))), Basis::p);
        it = cache.emplace(i, std::move(e)).first;
    }
    return it->second;
}

const SymFun& hi_in_p(int i) {
    static std::mutex m;
    static std::map<int, SymFun> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(i);
    if (it == cache.end()) {
        SymFun h = i == 0 ? SymFun::one(Basis::p)
                          : convert(SymFun::single(Basis::h, Partition(std::vector<int>(1, i))), Basis::p);
        it = cache.emplace(i, std::move(h)).first;
    }
    return it->second;
}

SymFun d_generic(const SymFun& F, int k, bool star) {
    SymFun out(Basis::p);
    const QtScalar zc = star ? -QtScalar::Mtilde() : QtScalar::M();
    for (int n : F.degrees()) {
        const SymFun comp = convert(F.component(n), Basis::p);
        const ZGraded G = plethysm(comp, Alphabet::x_plus_z(zc, -1));
        // coefficient of z^k in G(z) * sum_i (-z)^i e_i (resp. * sum_i z^i h_i)
        for (const auto& [zdeg, part] : G.components()) {
            const int i = k - zdeg;
            if (i < 0) continue;
            SymFun prod = mul(part, star ? hi_in_p(i) : ei_in_p(i));
            if (!star && i % 2 == 1) prod = -prod;
            out += prod;
        }
    }
    return convert(out, F.basis());
}

} // namespace

SymFun d_op(const SymFun& F, int k) { return d_generic(F, k, false); }

SymFun d_star_op(const SymFun& F, int k) { return d_generic(F, k, true); }

} // namespace macqt
