#include "lieder/subspace.hpp"

#include "lieder/error.hpp"

#include <algorithm>

namespace lieder {

namespace {

// Rescale so entries are integers with content 1. Bounds growth during long
// elimination runs; the pivot is re-normalized to 1 on insertion.
void gcd_normalize(Vec& row) {
    Int den_lcm(1), num_gcd(0);
    for (const Rat& x : row) {
        if (x == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (den_lcm != 1)
        for (Rat& x : row) x *= den_lcm;
    for (const Rat& x : row) {
        if (x == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (num_gcd > 1)
        for (Rat& x : row) x /= num_gcd;
}

} // namespace

RrefBuilder::RrefBuilder(int ambient) : ambient_(ambient) {}

bool RrefBuilder::add(Vec row) {
    if (int(row.size()) != ambient_)
        fail(ErrorKind::PreconditionViolated, "row length does not match ambient dimension");
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = row[size_t(pivots_[i])];
        if (f == 0) continue;
        Rat fv = f;
        const Vec& pr = rows_[i];
        for (int c = pivots_[i]; c < ambient_; ++c)
            if (pr[size_t(c)] != 0) row[size_t(c)] -= fv * pr[size_t(c)];
    }
    gcd_normalize(row);
    int piv = -1;
    for (int c = 0; c < ambient_; ++c)
        if (row[size_t(c)] != 0) { piv = c; break; }
    if (piv < 0) return false;
    if (row[size_t(piv)] != 1) {
        Rat inv = 1 / row[size_t(piv)];
        for (int c = piv; c < ambient_; ++c)
            if (row[size_t(c)] != 0) row[size_t(c)] *= inv;
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rows_[i][size_t(piv)];
        if (f == 0) continue;
        for (int c = piv; c < ambient_; ++c)
            if (row[size_t(c)] != 0) rows_[i][size_t(c)] -= f * row[size_t(c)];
    }
    size_t pos = size_t(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
    pivots_.insert(pivots_.begin() + long(pos), piv);
    rows_.insert(rows_.begin() + long(pos), std::move(row));
    return true;
}

void RrefBuilder::add_rows(const Matrix& m) {
    for (int r = 0; r < m.rows; ++r) {
        Vec row(size_t(m.cols), Rat(0));
        for (int c = 0; c < m.cols; ++c) row[size_t(c)] = m.at(r, c);
        add(std::move(row));
    }
}

Vec RrefBuilder::residual(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat f = v[size_t(pivots_[i])];
        if (f == 0) continue;
        const Vec& pr = rows_[i];
        for (int c = pivots_[i]; c < ambient_; ++c)
            if (pr[size_t(c)] != 0) v[size_t(c)] -= f * pr[size_t(c)];
    }
    return v;
}

bool RrefBuilder::contains(const Vec& v) const { return is_zero_vec(residual(v)); }

Subspace RrefBuilder::to_subspace() const {
    Subspace s;
    s.ambient = ambient_;
    s.basis = Matrix(rank(), ambient_);
    for (int r = 0; r < rank(); ++r)
        for (int c = 0; c < ambient_; ++c) s.basis.at(r, c) = rows_[size_t(r)][size_t(c)];
    return s;
}

Subspace zero_subspace(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient);
    return s;
}

Subspace full_space(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient);
    return s;
}

Subspace subspace_from_rows(int ambient, const std::vector<Vec>& rows) {
    RrefBuilder b(ambient);
    for (const Vec& r : rows) b.add(r);
    return b.to_subspace();
}

Subspace kernel_of_rref(const RrefBuilder& rref) {
    int cols = rref.ambient();
    const auto& piv = rref.pivots();
    std::vector<bool> is_pivot(size_t(cols), false);
    for (int p : piv) is_pivot[size_t(p)] = true;
    RrefBuilder kernel(cols);
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[size_t(f)]) continue;
        Vec v(size_t(cols), Rat(0));
        v[size_t(f)] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[size_t(piv[i])] = -rref.rows()[i][size_t(f)];
        kernel.add(std::move(v));
    }
    return kernel.to_subspace();
}

Subspace nullspace(const Matrix& m) {
    RrefBuilder rref(m.cols);
    rref.add_rows(m);
    return kernel_of_rref(rref);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        fail(ErrorKind::PreconditionViolated, "subspace ambient dimension mismatch");
    RrefBuilder builder(a.ambient);
    builder.add_rows(a.basis);
    builder.add_rows(b.basis);
    return builder.to_subspace();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        fail(ErrorKind::PreconditionViolated, "subspace ambient dimension mismatch");
    // v = alpha*A = beta*B; kernel of [A^T | -B^T] yields the coefficients.
    int p = a.dim(), q = b.dim();
    Matrix sys(a.ambient, p + q);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < a.ambient; ++c) sys.at(c, r) = a.basis.at(r, c);
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < b.ambient; ++c) sys.at(c, p + r) = -b.basis.at(r, c);
    Subspace coeffs = nullspace(sys);
    RrefBuilder builder(a.ambient);
    for (int r = 0; r < coeffs.dim(); ++r) {
        Vec v(size_t(a.ambient), Rat(0));
        for (int i = 0; i < p; ++i) {
            const Rat& alpha = coeffs.basis.at(r, i);
            if (alpha == 0) continue;
            for (int c = 0; c < a.ambient; ++c)
                if (a.basis.at(i, c) != 0) v[size_t(c)] += alpha * a.basis.at(i, c);
        }
        builder.add(std::move(v));
    }
    return builder.to_subspace();
}

bool contains(const Subspace& a, const Vec& v) {
    RrefBuilder b(a.ambient);
    b.add_rows(a.basis);
    return b.contains(v);
}

bool contains(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        fail(ErrorKind::PreconditionViolated, "subspace ambient dimension mismatch");
    RrefBuilder builder(a.ambient);
    builder.add_rows(a.basis);
    for (int r = 0; r < b.dim(); ++r) {
        Vec v(size_t(b.ambient), Rat(0));
        for (int c = 0; c < b.ambient; ++c) v[size_t(c)] = b.basis.at(r, c);
        if (!builder.contains(v)) return false;
    }
    return true;
}

SubspaceResult subspace_algebra(const Subspace& a, const Subspace& b, SubspaceOp which) {
    SubspaceResult res;
    switch (which) {
    case SubspaceOp::Sum: res.space = sum(a, b); break;
    case SubspaceOp::Intersect: res.space = intersect(a, b); break;
    case SubspaceOp::Contains: res.flag = contains(a, b); break;
    case SubspaceOp::Equals:
        if (a.ambient != b.ambient)
            fail(ErrorKind::PreconditionViolated, "subspace ambient dimension mismatch");
        res.flag = (a == b);
        break;
    }
    return res;
}

} // namespace lieder
