#include "macqt/hspace.hpp"

#include <cassert>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "macqt/io.hpp"

namespace macqt {

HExp HExp::unit(Partition mu, QtScalar c) {
    HExp f;
    if (!c.is_zero()) f.terms_.emplace(std::move(mu), std::move(c));
    return f;
}

QtScalar HExp::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? QtScalar(0) : it->second;
}

void HExp::add_term(const Partition& mu, const QtScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HExp HExp::operator+(const HExp& o) const {
    HExp r(*this);
    for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
    return r;
}

HExp HExp::operator-(const HExp& o) const { return *this + (o * QtScalar(-1)); }

HExp HExp::operator*(const QtScalar& c) const {
    HExp r;
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v * c);
    return r;
}

std::vector<int> HExp::degrees() const {
    std::vector<int> out;
    for (const auto& [mu, c] : terms_)
        if (out.empty() || out.back() != mu.size()) out.push_back(mu.size());
    return out;
}

HExp HExp::component(int n) const {
    HExp r;
    for (const auto& [mu, c] : terms_)
        if (mu.size() == n) r.terms_.emplace(mu, c);
    return r;
}

std::string HExp::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
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
        const bool parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        const std::string mono = "H" + mu.text();
        if (cs == "1") os << mono;
        else if (parens) os << "(" << cs << ")*" << mono;
        else os << cs << "*" << mono;
    }
    return os.str();
}

QtScalar star_product(const HExp& F, const HExp& G) {
    QtScalar acc(0);
    for (const auto& [mu, f] : F.terms()) {
        const QtScalar g = G.coeff(mu);
        if (g.is_zero()) continue;
        acc += f * g * stats(mu).w;
    }
    return acc;
}

HExp mul_e1(const HExp& F) {
    HExp out;
    for (const auto& [nu, c] : F.terms())
        for (const Partition& mu : covers(nu, CoverDirection::up))
            out.add_term(mu, c * d1(mu, nu));
    return out;
}

HExp skew_e1(const HExp& F) {
    HExp out;
    for (const auto& [mu, c] : F.terms())
        for (const Partition& nu : covers(mu, CoverDirection::down))
            out.add_term(nu, c * c1(mu, nu));
    return out;
}

HExp nabla(const HExp& F, int p) {
    HExp out;
    for (const auto& [mu, c] : F.terms()) out.add_term(mu, c * stats(mu).T.pow(p));
    return out;
}

HExp delta_eigen(const HExp& F, const std::function<QtScalar(const Partition&)>& eigen) {
    HExp out;
    for (const auto& [mu, c] : F.terms()) out.add_term(mu, c * eigen(mu));
    return out;
}

HExp q_m1(const HExp& F, int m) {
    return -nabla(mul_e1(nabla(F, -m)), m);
}

HExp q_m_neg1(const HExp& F, int m) {
    return nabla(skew_e1(nabla(F, m)), -m) * (-QtScalar::M());
}

HExp skew_hk(const HExp& F, int k) {
    if (k == 0) return F;
    HExp out;
    for (const auto& [mu, c] : F.terms()) {
        if (mu.size() < k) continue;
        for (const Partition& nu : partitions_of(mu.size() - k)) {
            if (!mu.contains(nu)) continue;
            out.add_term(nu, c * ck(mu, nu, k));
        }
    }
    return out;
}

HExp mul_ek_over_M(const HExp& F, int k) {
    if (k == 0) return F;
    HExp out;
    for (const auto& [nu, c] : F.terms())
        for (const Partition& mu : partitions_of(nu.size() + k)) {
            if (!mu.contains(nu)) continue;
            out.add_term(mu, c * dk(mu, nu, k));
        }
    return out;
}

// ---------------------------------------------------------------------------
// monomial-expansion table with optional persistence
// ---------------------------------------------------------------------------

namespace {

constexpr int kMTableFormat = 1;

std::mutex g_cache_mutex;
std::map<int, MTable> g_mtables;
std::optional<std::string> g_cache_dir_override;

std::optional<std::string> effective_cache_dir() {
    if (g_cache_dir_override) return g_cache_dir_override;
    if (const char* env = std::getenv("MACQT_CACHE_DIR")) {
        if (*env) return std::string(env);
    }
    return std::nullopt;
}

std::string mtable_path(const std::string& dir, int n) {
    return dir + "/mtable_" + std::to_string(n) + ".json";
}

bool load_mtable(const std::string& dir, int n, MTable& out) {
    std::ifstream in(mtable_path(dir, n));
    if (!in) return false;
    Json j;
    try {
        in >> j;
        if (j.at("format_version").get<int>() != kMTableFormat) return false;
        if (j.at("n").get<int>() != n) return false;
        MTable mt;
        mt.n = n;
        for (const Json& e : j.at("entries")) {
            Partition lam = partition_from_json(e.at("lambda"));
            Partition mu = partition_from_json(e.at("mu"));
            mt.entries.emplace(std::make_pair(std::move(lam), std::move(mu)),
                               poly_from_json(e.at("poly")));
        }
        out = std::move(mt);
        return true;
    } catch (...) {
        return false; // unreadable cache entries are recomputed
    }
}

void save_mtable(const std::string& dir, const MTable& mt) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    Json j;
    j["format_version"] = kMTableFormat;
    j["n"] = mt.n;
    Json entries = Json::array();
    for (const auto& [key, poly] : mt.entries) {
        Json e;
        e["lambda"] = to_json(key.first);
        e["mu"] = to_json(key.second);
        e["poly"] = poly_terms_json(poly);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    std::ofstream out(mtable_path(dir, mt.n));
    if (out) out << j.dump() << "\n";
}

MTable compute_mtable(int n) {
    MTable mt;
    mt.n = n;
    for (const Partition& mu : partitions_of(n)) {
        // descend over the parts of lambda in decreasing order, sharing
        // skew prefixes across all lambda with the same leading parts
        std::vector<int> prefix;
        auto rec = [&](auto&& self, const HExp& cur, int rest, int maxpart) -> void {
            if (rest == 0) {
                mt.entries.emplace(std::make_pair(Partition(prefix), mu),
                                   cur.coeff(Partition()).as_polynomial());
                return;
            }
            for (int s = std::min(rest, maxpart); s >= 1; --s) {
                prefix.push_back(s);
                self(self, skew_hk(cur, s), rest - s, s);
                prefix.pop_back();
            }
        };
        rec(rec, HExp::unit(mu), n, n == 0 ? 1 : n);
    }
    return mt;
}

} // namespace

const QtPoly& MTable::at(const Partition& lambda, const Partition& mu) const {
    auto it = entries.find({lambda, mu});
    if (it == entries.end()) throw Error("no table entry for the requested pair");
    return it->second;
}

const MTable& m_table(int n) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_mtables.find(n);
        if (it != g_mtables.end()) return it->second;
    }
    MTable mt;
    const auto dir = [] {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        return effective_cache_dir();
    }();
    bool loaded = dir && load_mtable(*dir, n, mt);
    if (!loaded) {
        mt = compute_mtable(n);
        if (dir) save_mtable(*dir, mt);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_mtables.emplace(n, std::move(mt)).first->second;
}

SymFun hmu_monomial(const Partition& mu) {
    const MTable& mt = m_table(mu.size());
    SymFun out(Basis::m);
    for (const Partition& lam : partitions_of(mu.size()))
        out.add_term(lam, QtScalar::from_poly(mt.at(lam, mu)));
    return out;
}

SymFun from_hbasis(const HExp& F) {
    SymFun out(Basis::m);
    for (const auto& [mu, c] : F.terms()) out += hmu_monomial(mu) * c;
    return out;
}

HExp to_hbasis(const SymFun& F) {
    HExp out;
    for (int n : F.degrees()) {
        const SymFun comp = F.component(n);
        // star pairings with the monomial basis, read off as the
        // h-expansion of omega F[MX]
        const SymFun g = convert(omega(plethysm_plain(convert(comp, Basis::p),
                                                      Alphabet::scaled(QtScalar::M()))),
                                 Basis::h);
        const MTable& mt = m_table(n);
        for (const Partition& mu : partitions_of(n)) {
            QtScalar acc(0);
            for (const auto& [lam, sc] : g.terms()) acc += sc * QtScalar::from_poly(mt.at(lam, mu));
            out.add_term(mu, acc / stats(mu).w);
        }
    }
    return out;
}

std::map<Partition, SymFun> hmu_oracle(int n) {
    const std::vector<Partition> mus = partitions_of(n);
    std::vector<QtScalar> eigen;
    eigen.reserve(mus.size());
    const QtScalar one(1);
    for (const Partition& mu : mus) eigen.push_back(one - QtScalar::M() * stats(mu).B);
    for (size_t i = 0; i < eigen.size(); ++i)
        for (size_t j = i + 1; j < eigen.size(); ++j)
            if (eigen[i] == eigen[j]) throw DegenerateSpectrum();

    const SymFun en_xm = plethysm_plain(
        convert(SymFun::single(Basis::e, Partition(std::vector<int>(1, n))), Basis::p),
        Alphabet::scaled(QtScalar::M().inv()));

    std::map<Partition, SymFun> out;
    for (size_t i = 0; i < mus.size(); ++i) {
        SymFun v = n == 0 ? SymFun::one(Basis::p) : en_xm;
        for (size_t j = 0; j < mus.size(); ++j) {
            if (j == i) continue;
            v = (d_op(v, 0) - v * eigen[j]) * (eigen[i] - eigen[j]).inv();
        }
        out.emplace(mus[i], convert(v * stats(mus[i]).w, Basis::m));
    }
    return out;
}

HExp mul_sym(const HExp& F, const SymFun& G) {
    return to_hbasis(mul(from_hbasis(F), G));
}

PiWordResult pi_word_adjoint(const Partition& mu, const std::vector<int>& a) {
    const int n = mu.size();
    if (static_cast<int>(a.size()) != n) throw LengthMismatch();
    PiWordResult res;
    res.total = QtScalar(0);
    for (const StandardTableau& T : standard_tableaux(mu)) {
        QtScalar term(1);
        for (int k = n; k >= 1; --k) {
            const Partition hi = T.shape_of_restriction(k);
            const Partition lo = T.shape_of_restriction(k - 1);
            term *= d1(hi, lo);
            if (k >= 2 && a[k - 1] != 0) term *= T.weight_of(k).pow(a[k - 1]);
        }
        res.total += term;
        res.terms.emplace_back(T, std::move(term));
    }
    return res;
}

QtScalar pi_word_operator(const Partition& mu, const std::vector<int>& a) {
    const int n = mu.size();
    if (static_cast<int>(a.size()) != n) throw LengthMismatch();
    HExp cur = HExp::unit(mu);
    for (int k = n; k >= 1; --k) cur = nabla(skew_e1(nabla(cur, a[k - 1])), -a[k - 1]);
    return cur.coeff(Partition()) * QtScalar::M().pow(n) / stats(mu).w;
}

namespace {

// one segment of the tableau product: m steps down from the top of the
// restricted tableau, each step weighted by the one-cell coefficient,
// the removed-cell weight, and the partial skew sum from the segment top
QtScalar segment_product(const StandardTableau& T, int top, int m) {
    QtScalar prod(1);
    const QtScalar btop = stats(T.shape_of_restriction(top)).B;
    for (int j = 0; j < m; ++j) {
        const Partition hi = T.shape_of_restriction(top - j);
        const Partition lo = T.shape_of_restriction(top - j - 1);
        prod *= c1(hi, lo) * T.weight_of(top - j) / (btop - stats(lo).B);
    }
    return prod;
}

} // namespace

QtScalar tableau_m(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw SizeMismatch();
    const int n = mu.size();
    QtScalar acc(0);
    for (const StandardTableau& T : standard_tableaux(mu)) {
        QtScalar term(1);
        int top = n;
        for (int part : lambda.parts()) {
            term *= segment_product(T, top, part);
            top -= part;
        }
        acc += term;
    }
    return acc;
}

HExp tableau_skew_hm(const Partition& mu, int m) {
    HExp out;
    const QtScalar bmu = stats(mu).B;
    for (const RemovalChain& ch : removal_chains(mu, m)) {
        QtScalar term(1);
        for (int j = 0; j < m; ++j)
            term *= c1(ch.shapes[j], ch.shapes[j + 1]) * ch.weights[j] /
                    (bmu - stats(ch.shapes[j + 1]).B);
        out.add_term(ch.shapes[m], term);
    }
    return out;
}

void set_cache_dir(std::optional<std::string> dir) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache_dir_override = std::move(dir);
}

std::optional<std::string> cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return effective_cache_dir();
}

void clear_hspace_caches() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_mtables.clear();
}

} // namespace macqt
