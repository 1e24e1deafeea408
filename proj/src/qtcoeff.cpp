#include "macqt/qtcoeff.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>

namespace macqt {

// ---------------------------------------------------------------------------
// QtPoly basics
// ---------------------------------------------------------------------------

namespace {

inline int term_cmp(const QtTerm& a, const QtTerm& b) {
    return grlex_cmp(a.qe, a.te, b.qe, b.te);
}

void sort_combine(std::vector<QtTerm>& v) {
    std::sort(v.begin(), v.end(), [](const QtTerm& a, const QtTerm& b) {
        return term_cmp(a, b) < 0;
    });
    std::vector<QtTerm> out;
    out.reserve(v.size());
    for (auto& t : v) {
        if (!out.empty() && term_cmp(out.back(), t) == 0) {
            out.back().c += t.c;
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    v = std::move(out);
}

} // namespace

QtPoly QtPoly::monomial(mpz_class c, int qe, int te) {
    QtPoly p;
    if (c != 0) p.terms_.push_back({qe, te, std::move(c)});
    return p;
}

QtPoly QtPoly::from_terms(std::vector<QtTerm> terms) {
    sort_combine(terms);
    QtPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool QtPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0 && terms_[0].c == 1;
}

int QtPoly::qdeg() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.qe);
    return d;
}

int QtPoly::tdeg() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.te);
    return d;
}

QtPoly QtPoly::operator-() const {
    QtPoly p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
    std::vector<QtTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = term_cmp(terms_[i], o.terms_[j]);
        if (c < 0) {
            out.push_back(terms_[i++]);
        } else if (c > 0) {
            out.push_back(o.terms_[j++]);
        } else {
            mpz_class s = terms_[i].c + o.terms_[j].c;
            if (s != 0) out.push_back({terms_[i].qe, terms_[i].te, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    QtPoly p;
    p.terms_ = std::move(out);
    return p;
}

QtPoly QtPoly::operator-(const QtPoly& o) const { return *this + (-o); }

QtPoly QtPoly::operator*(const QtPoly& o) const {
    if (is_zero() || o.is_zero()) return QtPoly();
    if (o.is_monomial()) return mul_monomial(o.terms_[0].c, o.terms_[0].qe, o.terms_[0].te);
    if (is_monomial()) return o.mul_monomial(terms_[0].c, terms_[0].qe, terms_[0].te);
    std::vector<QtTerm> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            out.push_back({a.qe + b.qe, a.te + b.te, a.c * b.c});
    return from_terms(std::move(out));
}

QtPoly QtPoly::mul_mpz(const mpz_class& c) const {
    if (c == 0) return QtPoly();
    QtPoly p(*this);
    for (auto& t : p.terms_) t.c *= c;
    return p;
}

QtPoly QtPoly::mul_monomial(const mpz_class& c, int qe, int te) const {
    if (c == 0) return QtPoly();
    QtPoly p(*this);
    for (auto& t : p.terms_) {
        t.c *= c;
        t.qe += qe;
        t.te += te;
    }
    return p;
}

QtPoly QtPoly::pow(unsigned e) const {
    QtPoly r(1);
    QtPoly base(*this);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool QtPoly::operator==(const QtPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].qe != o.terms_[i].qe || terms_[i].te != o.terms_[i].te || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

int QtPoly::cmp(const QtPoly& o) const {
    const size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        const int c = term_cmp(terms_[i], o.terms_[i]);
        if (c != 0) return c;
        const int s = ::cmp(terms_[i].c, o.terms_[i].c);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
}

mpz_class QtPoly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QtPoly QtPoly::divexact_mpz(const mpz_class& c) const {
    assert(c != 0);
    QtPoly p(*this);
    for (auto& t : p.terms_) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        t.c = std::move(q);
    }
    return p;
}

QtPoly QtPoly::substitute_powers(int k) const {
    assert(k >= 1);
    QtPoly p(*this);
    for (auto& t : p.terms_) {
        t.qe *= k;
        t.te *= k;
    }
    // uniform exponent scaling preserves the graded-lex order
    return p;
}

QtPoly QtPoly::swap_qt() const {
    std::vector<QtTerm> v = terms_;
    for (auto& t : v) std::swap(t.qe, t.te);
    return from_terms(std::move(v));
}

mpq_class QtPoly::evaluate(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class acc = 0;
    for (const auto& term : terms_) {
        mpq_class qp, tp;
        mpz_pow_ui(mpq_numref(qp.get_mpq_t()), q0.get_num_mpz_t(), term.qe);
        mpz_pow_ui(mpq_denref(qp.get_mpq_t()), q0.get_den_mpz_t(), term.qe);
        mpz_pow_ui(mpq_numref(tp.get_mpq_t()), t0.get_num_mpz_t(), term.te);
        mpz_pow_ui(mpq_denref(tp.get_mpq_t()), t0.get_den_mpz_t(), term.te);
        qp.canonicalize();
        tp.canonicalize();
        acc += term.c * qp * tp;
    }
    return acc;
}

bool QtPoly::try_divexact(const QtPoly& a, const QtPoly& d, QtPoly& quot) {
    assert(!d.is_zero());
    if (a.is_zero()) {
        quot = QtPoly();
        return true;
    }
    if (d.is_one()) {
        quot = a;
        return true;
    }
    const QtTerm& dl = d.leading();
    QtPoly rem = a;
    std::vector<QtTerm> qterms;
    while (!rem.is_zero()) {
        const QtTerm& rl = rem.leading();
        if (rl.qe < dl.qe || rl.te < dl.te) return false;
        if (!mpz_divisible_p(rl.c.get_mpz_t(), dl.c.get_mpz_t())) return false;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rl.c.get_mpz_t(), dl.c.get_mpz_t());
        QtTerm m{rl.qe - dl.qe, rl.te - dl.te, qc};
        qterms.push_back(m);
        rem = rem - d.mul_monomial(m.c, m.qe, m.te);
    }
    quot = from_terms(std::move(qterms));
    return true;
}

// ---------------------------------------------------------------------------
// gcd machinery
//
// Dense recursive views: ZT is a dense polynomial in t over Z, ZQT a dense
// polynomial in q with ZT coefficients. The bivariate gcd runs a modular
// evaluation/interpolation pass (t -> points mod a word-size prime) whose
// candidate is verified by exact division, with a primitive PRS fallback.
// ---------------------------------------------------------------------------

namespace {

using ZT = std::vector<mpz_class>;   // dense in t
using ZQT = std::vector<ZT>;         // index = q-exponent

void zt_trim(ZT& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool zt_is_zero(const ZT& a) { return a.empty(); }

int zt_deg(const ZT& a) { return static_cast<int>(a.size()) - 1; }

ZT zt_mul(const ZT& a, const ZT& b) {
    if (a.empty() || b.empty()) return {};
    ZT r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    zt_trim(r);
    return r;
}

ZT zt_sub(const ZT& a, const ZT& b) {
    ZT r = a;
    if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zt_trim(r);
    return r;
}

ZT zt_mul_mpz(const ZT& a, const mpz_class& c) {
    if (c == 0) return {};
    ZT r = a;
    for (auto& x : r) x *= c;
    return r;
}

mpz_class zt_content(const ZT& a) {
    mpz_class g = 0;
    for (const auto& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZT zt_divexact_mpz(const ZT& a, const mpz_class& c) {
    ZT r = a;
    for (auto& x : r) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        x = std::move(q);
    }
    return r;
}

// exact division over Z[t]; requires d | a (true for gcd-by-content uses)
ZT zt_divexact(const ZT& a, const ZT& d) {
    if (a.empty()) return {};
    assert(!d.empty());
    ZT rem = a;
    ZT quot(a.size() - d.size() + 1, mpz_class(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        const int top = k + zt_deg(d);
        if (top >= static_cast<int>(rem.size()) || rem[top] == 0) continue;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rem[top].get_mpz_t(), d.back().get_mpz_t());
        quot[k] = qc;
        for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= qc * d[j];
    }
    return quot;
}

// primitive part with positive leading coefficient; content returned separately
ZT zt_primitive(const ZT& a, mpz_class* content_out = nullptr) {
    if (a.empty()) {
        if (content_out) *content_out = 0;
        return {};
    }
    mpz_class c = zt_content(a);
    if (sgn(a.back()) < 0) c = -c;
    if (content_out) *content_out = c;
    return zt_divexact_mpz(a, c);
}

// pseudo-remainder of u by v over Z (dense in t)
ZT zt_prem(ZT u, const ZT& v) {
    const int dv = zt_deg(v);
    const mpz_class& lv = v.back();
    while (zt_deg(u) >= dv && !u.empty()) {
        const int k = zt_deg(u) - dv;
        mpz_class lu = u.back();
        for (auto& x : u) x *= lv;
        for (int j = 0; j <= dv; ++j) u[k + j] -= lu * v[j];
        zt_trim(u);
    }
    return u;
}

// gcd in Z[t] via primitive PRS; positive leading coefficient
ZT zt_gcd(ZT a, ZT b) {
    zt_trim(a);
    zt_trim(b);
    if (a.empty()) return zt_primitive(b).empty() ? ZT{} : zt_mul_mpz(zt_primitive(b), zt_content(b));
    if (b.empty()) return zt_mul_mpz(zt_primitive(a), zt_content(a));
    mpz_class ca = zt_content(a), cb = zt_content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZT u = zt_divexact_mpz(a, sgn(a.back()) < 0 ? mpz_class(-ca) : ca);
    ZT v = zt_divexact_mpz(b, sgn(b.back()) < 0 ? mpz_class(-cb) : cb);
    if (zt_deg(u) < zt_deg(v)) std::swap(u, v);
    while (!v.empty()) {
        ZT r = zt_prem(u, v);
        u = std::move(v);
        v = zt_primitive(r);
    }
    u = zt_primitive(u);
    return zt_mul_mpz(u, cg);
}

ZQT to_zqt(const QtPoly& p) {
    ZQT r(static_cast<size_t>(std::max(0, p.qdeg() + 1)));
    const int td = std::max(0, p.tdeg());
    for (auto& row : r) row.assign(td + 1, mpz_class(0));
    for (const auto& t : p.terms()) r[t.qe][t.te] = t.c;
    for (auto& row : r) zt_trim(row);
    while (!r.empty() && r.back().empty()) r.pop_back();
    return r;
}

QtPoly from_zqt(const ZQT& p) {
    std::vector<QtTerm> terms;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), p[i][j]});
    return QtPoly::from_terms(std::move(terms));
}

int zqt_qdeg(const ZQT& a) { return static_cast<int>(a.size()) - 1; }

int zqt_tdeg(const ZQT& a) {
    int d = -1;
    for (const auto& row : a) d = std::max(d, zt_deg(row));
    return d;
}

// content of a as a polynomial in q (gcd over Z[t] of the coefficients)
ZT zqt_qcontent(const ZQT& a) {
    ZT g;
    for (const auto& row : a) {
        if (row.empty()) continue;
        g = zt_gcd(g, row);
        if (zt_deg(g) == 0 && !g.empty() && g[0] == 1) break;
    }
    return g;
}

ZQT zqt_div_zt(const ZQT& a, const ZT& d) {
    ZQT r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].empty() ? ZT{} : zt_divexact(a[i], d);
    return r;
}

ZQT zqt_mul_zt(const ZQT& a, const ZT& c) {
    ZQT r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zt_mul(a[i], c);
    return r;
}

ZQT zqt_sub(const ZQT& a, const ZQT& b) {
    ZQT r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = zt_sub(r[i], b[i]);
    while (!r.empty() && r.back().empty()) r.pop_back();
    return r;
}

// pseudo-remainder in q with Z[t] coefficients
ZQT zqt_prem(ZQT u, const ZQT& v) {
    const int dv = zqt_qdeg(v);
    const ZT& lv = v.back();
    while (zqt_qdeg(u) >= dv && !u.empty()) {
        const int k = zqt_qdeg(u) - dv;
        ZT lu = u.back();
        u = zqt_mul_zt(u, lv);
        ZQT shift(v.size() + k);
        for (int j = 0; j <= dv; ++j) shift[j + k] = zt_mul(v[j], lu);
        u = zqt_sub(u, shift);
        while (!u.empty() && u.back().empty()) u.pop_back();
    }
    return u;
}

ZQT zqt_primitive(const ZQT& a) {
    ZT c = zqt_qcontent(a);
    if (c.empty()) return {};
    return zqt_div_zt(a, c);
}

// fallback gcd of q-primitive inputs: primitive PRS in q over Z[t]
ZQT zqt_gcd_prs(ZQT u, ZQT v) {
    if (zqt_qdeg(u) < zqt_qdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        ZQT r = zqt_prem(u, v);
        u = std::move(v);
        v = zqt_primitive(r);
    }
    return zqt_primitive(u);
}

// ---- word-size modular arithmetic --------------------------------------

constexpr uint64_t kPrime = 2305843009213693951ULL; // 2^61 - 1

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    const uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
inline uint64_t invm(uint64_t a, uint64_t p) { return powm(a, p - 2, p); }

using UPoly = std::vector<uint64_t>; // dense univariate over F_p

void up_trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly up_monic(UPoly a, uint64_t p) {
    up_trim(a);
    if (a.empty()) return a;
    const uint64_t inv = invm(a.back(), p);
    for (auto& x : a) x = mulm(x, inv, p);
    return a;
}

UPoly up_rem(UPoly a, const UPoly& b, uint64_t p) {
    const int db = static_cast<int>(b.size()) - 1;
    const uint64_t invl = invm(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db) {
        const uint64_t c = mulm(a.back(), invl, p);
        const size_t k = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[k + j] = subm(a[k + j], mulm(c, b[j], p), p);
        up_trim(a);
        if (a.empty()) break;
    }
    return a;
}

UPoly up_gcd(UPoly a, UPoly b, uint64_t p) {
    up_trim(a);
    up_trim(b);
    while (!b.empty()) {
        UPoly r = up_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(std::move(a), p);
}

uint64_t mpz_mod_u64(const mpz_class& z, uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

uint64_t zt_eval_mod(const ZT& a, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = addm(mulm(acc, x, p), mpz_mod_u64(a[i], p), p);
    return acc;
}

mpz_class lift_symmetric(uint64_t v, uint64_t p) {
    if (v > p / 2) return mpz_class(-static_cast<long>(p - v));
    // values fit in long for p < 2^62
    return mpz_class(static_cast<unsigned long>(v));
}

// Brown-style modular gcd of q-primitive A, B (both with positive q-degree).
// Returns false when the single-prime pass cannot produce a verified answer.
bool zqt_gcd_modular(const ZQT& A, const ZQT& B, ZQT& out) {
    const uint64_t p = kPrime;
    const ZT& lcA = A.back();
    const ZT& lcB = B.back();
    const ZT gamma = zt_gcd(lcA, lcB);
    const int dtbound = std::min(zqt_tdeg(A), zqt_tdeg(B)) + zt_deg(gamma);
    const int npts = dtbound + 1;

    std::vector<uint64_t> xs;
    std::vector<std::vector<uint64_t>> images; // per point: scaled gcd image coeffs
    int dmin = -1;

    uint64_t x = 0;
    int guard = 0;
    while (static_cast<int>(xs.size()) < npts) {
        if (++guard > npts + 512) return false;
        const uint64_t x0 = x++;
        if (zt_eval_mod(lcA, x0, p) == 0 || zt_eval_mod(lcB, x0, p) == 0) continue;
        UPoly Au(A.size()), Bu(B.size());
        for (size_t i = 0; i < A.size(); ++i) Au[i] = zt_eval_mod(A[i], x0, p);
        for (size_t i = 0; i < B.size(); ++i) Bu[i] = zt_eval_mod(B[i], x0, p);
        UPoly g = up_gcd(std::move(Au), std::move(Bu), p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) { // co-prime images force a trivial primitive gcd
            out = ZQT{ZT{mpz_class(1)}};
            return true;
        }
        if (dmin == -1 || dg < dmin) {
            dmin = dg;
            xs.clear();
            images.clear();
        } else if (dg > dmin) {
            continue; // unlucky point
        }
        const uint64_t scale = zt_eval_mod(gamma, x0, p);
        for (auto& c : g) c = mulm(c, scale, p);
        xs.push_back(x0);
        images.push_back(std::move(g));
    }

    // Newton interpolation per q-coefficient
    const int nq = dmin + 1;
    std::vector<std::vector<uint64_t>> newton(nq); // divided differences
    for (int c = 0; c < nq; ++c) {
        std::vector<uint64_t> dd(xs.size());
        for (size_t k = 0; k < xs.size(); ++k) {
            uint64_t v = c < static_cast<int>(images[k].size()) ? images[k][c] : 0;
            for (size_t j = 0; j < k; ++j) {
                const uint64_t denom = subm(xs[k], xs[j], p);
                v = mulm(subm(v, dd[j], p), invm(denom, p), p);
            }
            dd[k] = v;
        }
        newton[c] = std::move(dd);
    }
    // expand Newton form to dense t-coefficients mod p
    ZQT cand(nq);
    for (int c = 0; c < nq; ++c) {
        std::vector<uint64_t> acc{0};
        std::vector<uint64_t> basis{1};
        for (size_t k = 0; k < xs.size(); ++k) {
            if (acc.size() < basis.size()) acc.resize(basis.size(), 0);
            for (size_t j = 0; j < basis.size(); ++j)
                acc[j] = addm(acc[j], mulm(newton[c][k], basis[j], p), p);
            // basis *= (x - xs[k])
            std::vector<uint64_t> nb(basis.size() + 1, 0);
            for (size_t j = 0; j < basis.size(); ++j) {
                nb[j + 1] = addm(nb[j + 1], basis[j], p);
                nb[j] = subm(nb[j], mulm(basis[j], xs[k], p), p);
            }
            basis = std::move(nb);
        }
        ZT row(acc.size());
        for (size_t j = 0; j < acc.size(); ++j) row[j] = lift_symmetric(acc[j], p);
        zt_trim(row);
        cand[c] = std::move(row);
    }
    while (!cand.empty() && cand.back().empty()) cand.pop_back();
    if (cand.empty()) return false;
    out = zqt_primitive(cand);
    return !out.empty();
}

// sign convention: positive graded-lex leading coefficient
QtPoly positive_lead(QtPoly p) {
    if (!p.is_zero() && sgn(p.leading().c) < 0) return -p;
    return p;
}

} // namespace

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);

    mpz_class ca = a.content(), cb = b.content(), ic;
    mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    QtPoly A = a.divexact_mpz(ca);
    QtPoly B = b.divexact_mpz(cb);

    if (A == B || A == -B) return positive_lead(A).mul_mpz(ic);
    if (A.is_constant() || B.is_constant()) return QtPoly(ic);

    // monomial against anything: min exponents
    if (A.is_monomial() || B.is_monomial()) {
        const QtPoly& m = A.is_monomial() ? A : B;
        const QtPoly& o = A.is_monomial() ? B : A;
        int mq = m.terms()[0].qe, mt = m.terms()[0].te;
        for (const auto& t : o.terms()) {
            mq = std::min(mq, t.qe);
            mt = std::min(mt, t.te);
        }
        return monomial(ic, mq, mt);
    }

    // univariate cases
    if (A.qdeg() == 0 && B.qdeg() == 0) {
        ZT u(A.tdeg() + 1, mpz_class(0)), v(B.tdeg() + 1, mpz_class(0));
        for (const auto& t : A.terms()) u[t.te] = t.c;
        for (const auto& t : B.terms()) v[t.te] = t.c;
        ZT g = zt_gcd(u, v);
        std::vector<QtTerm> terms;
        for (size_t j = 0; j < g.size(); ++j)
            if (g[j] != 0) terms.push_back({0, static_cast<int>(j), g[j] * ic});
        return from_terms(std::move(terms));
    }
    if (A.tdeg() == 0 && B.tdeg() == 0) {
        ZT u(A.qdeg() + 1, mpz_class(0)), v(B.qdeg() + 1, mpz_class(0));
        for (const auto& t : A.terms()) u[t.qe] = t.c;
        for (const auto& t : B.terms()) v[t.qe] = t.c;
        ZT g = zt_gcd(u, v);
        std::vector<QtTerm> terms;
        for (size_t j = 0; j < g.size(); ++j)
            if (g[j] != 0) terms.push_back({static_cast<int>(j), 0, g[j] * ic});
        return from_terms(std::move(terms));
    }

    ZQT Az = to_zqt(A), Bz = to_zqt(B);
    ZT cA = zqt_qcontent(Az), cB = zqt_qcontent(Bz);
    ZQT Ap = zqt_div_zt(Az, cA), Bp = zqt_div_zt(Bz, cB);
    ZT gcont = zt_gcd(cA, cB);

    ZQT gp;
    if (zqt_qdeg(Ap) == 0 || zqt_qdeg(Bp) == 0) {
        gp = ZQT{ZT{mpz_class(1)}}; // a q-primitive constant-in-q poly is a unit
    } else {
        bool ok = false;
        ZQT cand;
        if (zqt_gcd_modular(Ap, Bp, cand)) {
            QtPoly gq = from_zqt(cand);
            QtPoly tmp;
            ok = try_divexact(from_zqt(Ap), gq, tmp) && try_divexact(from_zqt(Bp), gq, tmp);
            if (ok) gp = std::move(cand);
        }
        if (!ok) gp = zqt_gcd_prs(Ap, Bp);
    }

    QtPoly g = from_zqt(zqt_mul_zt(gp, gcont)).mul_mpz(ic);
    return positive_lead(std::move(g));
}

std::string QtPoly::text() const {
    if (is_zero()) return "0";
    // readable order: total degree ascending, then q-exponent descending
    std::vector<QtTerm> v = terms_;
    std::sort(v.begin(), v.end(), [](const QtTerm& a, const QtTerm& b) {
        const int da = a.qe + a.te, db = b.qe + b.te;
        if (da != db) return da < db;
        return a.qe > b.qe;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : v) {
        mpz_class c = t.c;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono;
        if (t.qe > 0) mono += t.qe == 1 ? "q" : "q^" + std::to_string(t.qe);
        if (t.te > 0) {
            if (!mono.empty()) mono += "*";
            mono += t.te == 1 ? "t" : "t^" + std::to_string(t.te);
        }
        if (mono.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << mono;
        } else {
            os << c.get_str() << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QtScalar
// ---------------------------------------------------------------------------

QtScalar::QtScalar(const mpq_class& v) {
    num_ = QtPoly(mpz_class(v.get_num()));
    den_ = QtPoly(mpz_class(v.get_den()));
}

QtScalar QtScalar::normalize(QtPoly num, QtPoly den) {
    if (den.is_zero()) throw ZeroDenominator();
    QtScalar s;
    if (num.is_zero()) return s; // 0/1
    QtPoly g = QtPoly::gcd(num, den);
    if (!g.is_one()) {
        QtPoly qn, qd;
        const bool okn = QtPoly::try_divexact(num, g, qn);
        const bool okd = QtPoly::try_divexact(den, g, qd);
        assert(okn && okd);
        (void)okn; (void)okd;
        num = std::move(qn);
        den = std::move(qd);
    }
    if (sgn(den.leading().c) < 0) {
        num = -num;
        den = -den;
    }
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

QtScalar QtScalar::monomial(const mpz_class& c, int qe, int te) {
    QtPoly num = QtPoly::monomial(c, std::max(qe, 0), std::max(te, 0));
    QtPoly den = QtPoly::monomial(1, std::max(-qe, 0), std::max(-te, 0));
    QtScalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

QtScalar QtScalar::M() {
    // (1-t)(1-q) = 1 - q - t + q*t
    return from_poly(QtPoly::from_terms({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}));
}

QtScalar QtScalar::Mtilde() {
    return M().invert_variables();
}

QtScalar QtScalar::operator-() const {
    QtScalar s(*this);
    s.num_ = -s.num_;
    return s;
}

QtScalar QtScalar::operator+(const QtScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return normalize(num_ + o.num_, den_);
    QtPoly g = QtPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        QtScalar s;
        s.num_ = num_ * o.den_ + o.num_ * den_;
        s.den_ = den_ * o.den_;
        if (s.num_.is_zero()) return QtScalar();
        return s; // already reduced: denominators co-prime to own and cross numerators
    }
    QtPoly bg, dg;
    QtPoly::try_divexact(den_, g, bg);
    QtPoly::try_divexact(o.den_, g, dg);
    QtPoly num = num_ * dg + o.num_ * bg;
    if (num.is_zero()) return QtScalar();
    QtPoly h = QtPoly::gcd(num, g);
    QtScalar s;
    if (h.is_one()) {
        s.num_ = std::move(num);
        s.den_ = den_ * dg;
    } else {
        QtPoly::try_divexact(num, h, s.num_);
        QtPoly gh;
        QtPoly::try_divexact(g, h, gh);
        s.den_ = bg * dg * gh;
    }
    if (sgn(s.den_.leading().c) < 0) {
        s.num_ = -s.num_;
        s.den_ = -s.den_;
    }
    return s;
}

QtScalar QtScalar::operator-(const QtScalar& o) const { return *this + (-o); }

QtScalar QtScalar::operator*(const QtScalar& o) const {
    if (is_zero() || o.is_zero()) return QtScalar();
    QtPoly g1 = QtPoly::gcd(num_, o.den_);
    QtPoly g2 = QtPoly::gcd(o.num_, den_);
    QtPoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!g1.is_one()) {
        QtPoly tmp;
        QtPoly::try_divexact(a, g1, tmp);
        a = tmp;
        QtPoly::try_divexact(d, g1, tmp);
        d = tmp;
    }
    if (!g2.is_one()) {
        QtPoly tmp;
        QtPoly::try_divexact(c, g2, tmp);
        c = tmp;
        QtPoly::try_divexact(b, g2, tmp);
        b = tmp;
    }
    QtScalar s;
    s.num_ = a * c;
    s.den_ = b * d;
    if (sgn(s.den_.leading().c) < 0) {
        s.num_ = -s.num_;
        s.den_ = -s.den_;
    }
    return s;
}

QtScalar QtScalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    QtScalar s;
    s.num_ = den_;
    s.den_ = num_;
    if (sgn(s.den_.leading().c) < 0) {
        s.num_ = -s.num_;
        s.den_ = -s.den_;
    }
    return s;
}

QtScalar QtScalar::operator/(const QtScalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inv();
}

QtScalar QtScalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    QtScalar r(1);
    QtScalar base(*this);
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1) r = r * base;
        base = base * base;
        u >>= 1;
    }
    return r;
}

QtScalar QtScalar::mul_mpq(const mpq_class& c) const {
    if (c == 0) return QtScalar();
    return *this * QtScalar(c);
}

int QtScalar::cmp(const QtScalar& o) const {
    const int c = num_.cmp(o.num_);
    if (c != 0) return c;
    return den_.cmp(o.den_);
}

QtScalar QtScalar::substitute_powers(int k) const {
    QtScalar s;
    s.num_ = num_.substitute_powers(k);
    s.den_ = den_.substitute_powers(k);
    return s; // canonical form is preserved by q,t -> q^k,t^k
}

QtScalar QtScalar::invert_variables() const {
    const int A = std::max(num_.qdeg(), den_.qdeg());
    const int B = std::max(num_.tdeg(), den_.tdeg());
    auto flip = [&](const QtPoly& p) {
        std::vector<QtTerm> v;
        v.reserve(p.terms().size());
        for (const auto& t : p.terms()) v.push_back({A - t.qe, B - t.te, t.c});
        return QtPoly::from_terms(std::move(v));
    };
    return normalize(flip(num_), flip(den_));
}

QtScalar QtScalar::swap_qt() const {
    return normalize(num_.swap_qt(), den_.swap_qt());
}

QtPoly QtScalar::as_polynomial() const {
    if (!den_.is_one()) throw NotPolynomial();
    return num_;
}

mpq_class QtScalar::evaluate(const mpq_class& q0, const mpq_class& t0) const {
    const mpq_class d = den_.evaluate(q0, t0);
    if (d == 0) throw PoleAtPoint();
    return num_.evaluate(q0, t0) / d;
}

std::string QtScalar::text() const {
    if (den_.is_one()) return num_.text();
    // canonical storage fixes the sign of den's graded-lex leading term;
    // for display prefer a positive first term in reading order
    QtPoly n = num_, d = den_;
    const QtTerm* first = &d.terms().front();
    for (const QtTerm& t : d.terms()) {
        const int da = t.qe + t.te, db = first->qe + first->te;
        if (da < db || (da == db && t.qe > first->qe)) first = &t;
    }
    if (sgn(first->c) < 0) {
        n = -n;
        d = -d;
    }
    const std::string ns = n.text();
    const std::string nw = n.terms().size() > 1 ? "(" + ns + ")" : ns;
    return nw + "/(" + d.text() + ")";
}

} // namespace macqt
