#pragma once

#include "lieder/matrix.hpp"

namespace lieder {

// Canonical subspace of Q^ambient: basis rows in RREF, pivots strictly
// increasing. Equality of subspaces is representation equality.
struct Subspace {
    int ambient = 0;
    Matrix basis; // dim x ambient, RREF

    int dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const = default;
};

// Incremental exact elimination. Holds at most `ambient` fully reduced pivot
// rows; every inserted row is reduced against them and they are back-reduced
// in turn, so the stored rows are the RREF of everything seen so far.
class RrefBuilder {
public:
    explicit RrefBuilder(int ambient);

    // Returns true when the row increased the rank.
    bool add(Vec row);
    void add_rows(const Matrix& m);

    int ambient() const { return ambient_; }
    int rank() const { return int(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // v minus its projection onto the row space; zero iff v is a member.
    Vec residual(Vec v) const;
    bool contains(const Vec& v) const;

    Subspace to_subspace() const;

private:
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

Subspace zero_subspace(int ambient);
Subspace full_space(int ambient);
Subspace subspace_from_rows(int ambient, const std::vector<Vec>& rows);

// Canonical RREF basis of {v : M v = 0}.
Subspace nullspace(const Matrix& m);

// Kernel read off a finished elimination (free-column construction, re-RREF'd).
Subspace kernel_of_rref(const RrefBuilder& rref);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vec& v);
bool contains(const Subspace& a, const Subspace& b);

enum class SubspaceOp { Sum, Intersect, Contains, Equals };

struct SubspaceResult {
    Subspace space;  // Sum / Intersect
    bool flag = false; // Contains / Equals
};

// Dispatcher form of the subspace calculus; throws on ambient mismatch.
SubspaceResult subspace_algebra(const Subspace& a, const Subspace& b, SubspaceOp which);

} // namespace lieder
