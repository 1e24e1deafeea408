#include "macqt/shapes.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

namespace macqt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw Error("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw Error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

bool Partition::contains(const Partition& nu) const {
    if (nu.length() > length()) return false;
    for (int i = 0; i < nu.length(); ++i)
        if (nu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

std::string Partition::text() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

QtScalar cell_weight(const Cell& c) {
    return QtScalar::monomial(1, c.col, c.row);
}

ArmLeg arm_leg(const Partition& mu, const Cell& c) {
    if (!mu.contains_cell(c)) throw CellOutsideShape();
    ArmLeg r;
    r.arm = mu.parts()[c.row] - c.col - 1;
    r.coarm = c.col;
    r.coleg = c.row;
    int leg = 0;
    for (int i = c.row + 1; i < mu.length() && mu.parts()[i] > c.col; ++i) ++leg;
    r.leg = leg;
    return r;
}

namespace {

std::mutex g_stats_mutex;
std::map<Partition, PartitionStats> g_stats_cache;

} // namespace

PartitionStats stats(const Partition& mu) {
    {
        std::lock_guard<std::mutex> lock(g_stats_mutex);
        auto it = g_stats_cache.find(mu);
        if (it != g_stats_cache.end()) return it->second;
    }
    PartitionStats s{QtScalar(1), QtScalar(0), QtScalar(1), QtScalar(1), QtScalar(0)};
    const QtScalar one(1);
    for (int r = 0; r < mu.length(); ++r) {
        for (int c = 0; c < mu.parts()[r]; ++c) {
            const Cell cell{r, c};
            const QtScalar w = cell_weight(cell);
            s.T = s.T * w;
            s.B = s.B + w;
            if (!(r == 0 && c == 0)) s.Pi = s.Pi * (one - w);
            const ArmLeg al = arm_leg(mu, cell);
            const QtScalar f1 = QtScalar::monomial(1, al.arm, 0) - QtScalar::monomial(1, 0, al.leg + 1);
            const QtScalar f2 = QtScalar::monomial(1, 0, al.leg) - QtScalar::monomial(1, al.arm + 1, 0);
            s.w = s.w * f1 * f2;
        }
    }
    s.D = QtScalar::M() * s.B - one;
    std::lock_guard<std::mutex> lock(g_stats_mutex);
    return g_stats_cache.emplace(mu, std::move(s)).first->second;
}

namespace {

// removable corners, strictly decreasing row
std::vector<Cell> removable_corners(const Partition& mu) {
    std::vector<Cell> out;
    for (int r = mu.length() - 1; r >= 0; --r) {
        const int above = r + 1 < mu.length() ? mu.parts()[r + 1] : 0;
        if (mu.parts()[r] > above) out.push_back({r, mu.parts()[r] - 1});
    }
    return out;
}

// addable corners, strictly decreasing row (the new top row comes first)
std::vector<Cell> addable_corners(const Partition& mu) {
    std::vector<Cell> out;
    out.push_back({mu.length(), 0});
    for (int r = mu.length() - 1; r >= 0; --r) {
        const bool ok = r == 0 || mu.parts()[r - 1] > mu.parts()[r];
        if (ok) out.push_back({r, mu.parts()[r]});
    }
    return out;
}

Partition remove_cell(const Partition& mu, const Cell& c) {
    std::vector<int> p = mu.parts();
    p[c.row] -= 1;
    if (p[c.row] == 0) p.erase(p.begin() + c.row);
    return Partition(std::move(p));
}

Partition add_cell(const Partition& mu, const Cell& c) {
    std::vector<int> p = mu.parts();
    if (c.row == static_cast<int>(p.size()))
        p.push_back(1);
    else
        p[c.row] += 1;
    return Partition(std::move(p));
}

} // namespace

std::vector<Partition> covers(const Partition& mu, CoverDirection dir) {
    std::vector<Partition> out;
    if (dir == CoverDirection::up) {
        for (const Cell& c : addable_corners(mu)) out.push_back(add_cell(mu, c));
    } else {
        for (const Cell& c : removable_corners(mu)) out.push_back(remove_cell(mu, c));
    }
    return out;
}

QtScalar CornerData::xbar(int k) const {
    return x(k) * QtScalar::monomial(1, 1, 1);
}

QtScalar CornerData::u(int i) const {
    return ubar(i) * QtScalar::monomial(1, -1, -1);
}

CornerData corner_data(const Partition& mu) {
    CornerData cd;
    cd.x0 = QtScalar::monomial(1, -1, -1);
    for (const Cell& c : removable_corners(mu)) cd.removable.push_back({c, cell_weight(c)});
    for (const Cell& c : addable_corners(mu)) cd.addable.push_back({c, cell_weight(c)});
    assert(cd.addable.size() == cd.removable.size() + 1);
    return cd;
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    label_cells_.assign(shape_.size(), Cell{});
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c) {
            const int k = rows_[r][c];
            assert(k >= 1 && k <= shape_.size());
            label_cells_[k - 1] = Cell{r, c};
        }
}

Cell StandardTableau::cell_of(int k) const {
    if (k < 1 || k > size()) throw LabelOutOfRange();
    return label_cells_[k - 1];
}

StandardTableau StandardTableau::restrict(int k) const {
    std::vector<std::vector<int>> rows;
    for (const auto& row : rows_) {
        std::vector<int> r;
        for (int v : row)
            if (v <= k) r.push_back(v);
        if (!r.empty()) rows.push_back(std::move(r));
    }
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return StandardTableau(Partition(std::move(parts)), std::move(rows));
}

Partition StandardTableau::shape_of_restriction(int k) const {
    std::vector<int> parts;
    for (const auto& row : rows_) {
        int n = 0;
        for (int v : row)
            if (v <= k) ++n;
        if (n > 0) parts.push_back(n);
    }
    return Partition(std::move(parts));
}

std::string StandardTableau::text() const {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ",";
            os << rows_[r][c];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

std::mutex g_tableaux_mutex;
std::map<Partition, std::vector<StandardTableau>> g_tableaux_cache;

std::vector<StandardTableau> enumerate_tableaux(const Partition& mu) {
    std::vector<StandardTableau> out;
    if (mu.empty()) {
        out.emplace_back(Partition(), std::vector<std::vector<int>>{});
        return out;
    }
    const int n = mu.size();
    for (const Partition& nu : covers(mu, CoverDirection::down)) {
        Cell corner{-1, -1};
        for (int r = 0; r < mu.length(); ++r) {
            if (nu.row_length(r) != mu.parts()[r]) {
                corner = {r, mu.parts()[r] - 1};
                break;
            }
        }
        for (const StandardTableau& sub : standard_tableaux(nu)) {
            std::vector<std::vector<int>> rows = sub.rows();
            if (corner.row == static_cast<int>(rows.size()))
                rows.push_back({n});
            else
                rows[corner.row].push_back(n);
            out.emplace_back(mu, std::move(rows));
        }
    }
    return out;
}

} // namespace

const std::vector<StandardTableau>& standard_tableaux(const Partition& mu) {
    {
        std::lock_guard<std::mutex> lock(g_tableaux_mutex);
        auto it = g_tableaux_cache.find(mu);
        if (it != g_tableaux_cache.end()) return it->second;
    }
    std::vector<StandardTableau> v = enumerate_tableaux(mu);
    std::lock_guard<std::mutex> lock(g_tableaux_mutex);
    return g_tableaux_cache.emplace(mu, std::move(v)).first->second;
}

QtScalar tableau_weight(const StandardTableau& T, int k) {
    return T.weight_of(k);
}

mpz_class hook_length_count(const Partition& mu) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), mu.size());
    mpz_class hooks(1);
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.parts()[r]; ++c) {
            const ArmLeg al = arm_leg(mu, {r, c});
            hooks *= al.arm + al.leg + 1;
        }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

std::vector<RemovalChain> removal_chains(const Partition& mu, int m) {
    std::vector<RemovalChain> out;
    RemovalChain cur;
    cur.shapes.push_back(mu);
    auto rec = [&](auto&& self, const Partition& shape, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (const Partition& nu : covers(shape, CoverDirection::down)) {
            const QtScalar w = stats(shape).T / stats(nu).T;
            cur.shapes.push_back(nu);
            cur.weights.push_back(w);
            self(self, nu, left - 1);
            cur.shapes.pop_back();
            cur.weights.pop_back();
        }
    };
    rec(rec, mu, m);
    return out;
}

} // namespace macqt
