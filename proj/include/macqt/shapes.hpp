// Partitions in French convention (row 0 is the bottom row), diagram
// statistics, corner weight ladders, Young-lattice covers and standard
// tableaux. All values are immutable; enumeration results are cached
// behind a synchronized cache.
#pragma once

#include <vector>

#include "macqt/qtcoeff.hpp"

namespace macqt {

struct Cell {
    int row = 0; // 0-based from the bottom
    int col = 0; // 0-based from the left
    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

struct ArmLeg {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                                  // |mu|
    int length() const { return static_cast<int>(parts_.size()); }     // number of rows
    bool empty() const { return parts_.empty(); }
    int row_length(int row) const { return row < length() ? parts_[row] : 0; }
    bool contains_cell(const Cell& c) const {
        return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[c.row];
    }
    bool contains(const Partition& nu) const; // nu subset of this as diagrams
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    /// Total order: size ascending, then parts lexicographically descending,
    /// so (n) precedes (1^n) within a degree. Used everywhere determinism
    /// of iteration or output matters.
    bool operator<(const Partition& o) const;

    std::string text() const; // "[3,2,1]", "[]" for empty

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in the canonical order.
std::vector<Partition> partitions_of(int n);

/// Cell weight t^coleg * q^coarm.
QtScalar cell_weight(const Cell& c);

/// arm/leg/coarm/coleg of a cell; throws CellOutsideShape.
ArmLeg arm_leg(const Partition& mu, const Cell& c);

struct PartitionStats {
    QtScalar T;  // product of cell weights
    QtScalar B;  // sum of cell weights
    QtScalar Pi; // product of (1 - weight) over cells other than the origin
    QtScalar w;  // product of (q^a - t^(l+1)) (t^l - q^(a+1))
    QtScalar D;  // M*B - 1
};

PartitionStats stats(const Partition& mu);

enum class CoverDirection { up, down };

/// Young-lattice covers, ordered by strictly decreasing row of the
/// changed cell.
std::vector<Partition> covers(const Partition& mu, CoverDirection dir);

struct Corner {
    Cell cell;
    QtScalar weight; // t^coleg * q^coarm of the corner cell
};

/// Corner weight ladders. Removable corners carry weights x_1..x_l and
/// addable corners carry the barred weights ubar_0..ubar_l, both ordered
/// by strictly decreasing row. The phantom cell (-1,-1) contributes
/// x_0 = 1/(qt); shifted ladders are u_i = ubar_i/(qt) and
/// xbar_k = qt*x_k (so xbar_0 = 1).
struct CornerData {
    std::vector<Corner> removable; // x_k for k = 1..l
    std::vector<Corner> addable;   // ubar_i for i = 0..l
    QtScalar x0;                   // 1/(qt)

    QtScalar x(int k) const { return k == 0 ? x0 : removable.at(k - 1).weight; }
    QtScalar xbar(int k) const;
    QtScalar ubar(int i) const { return addable.at(i).weight; }
    QtScalar u(int i) const;
    int ell() const { return static_cast<int>(removable.size()); }
};

CornerData corner_data(const Partition& mu);

class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int label_at(const Cell& c) const { return rows_[c.row][c.col]; }
    /// Cell holding label k (1-based); throws LabelOutOfRange.
    Cell cell_of(int k) const;
    /// Weight of the cell holding label k.
    QtScalar weight_of(int k) const { return cell_weight(cell_of(k)); }
    /// Drop all labels > k.
    StandardTableau restrict(int k) const;
    /// Shape of the restriction to labels 1..k.
    Partition shape_of_restriction(int k) const;

    bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
    std::string text() const; // "[[1,2],[3]]" rows bottom-up

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> label_cells_; // index k-1 -> cell of label k
};

/// All standard tableaux of the shape, enumerated by recursive corner
/// removal in the deterministic covers order; cached per shape.
const std::vector<StandardTableau>& standard_tableaux(const Partition& mu);

/// w_T(k), the weight of the cell holding label k.
QtScalar tableau_weight(const StandardTableau& T, int k);

/// Number of standard tableaux by the hook-length formula (exact).
mpz_class hook_length_count(const Partition& mu);

/// Removal chains of m cells from mu: each chain lists the successive
/// shapes mu = c_0 > c_1 > ... > c_m together with the removed-cell
/// weights. Used by the tableau-formula evaluators.
struct RemovalChain {
    std::vector<Partition> shapes;  // size m+1, shapes[0] = mu
    std::vector<QtScalar> weights;  // size m, weight of cell removed at step j
};
std::vector<RemovalChain> removal_chains(const Partition& mu, int m);

} // namespace macqt
