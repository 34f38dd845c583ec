#pragma once

#include "lieder/subspace.hpp"

#include <array>
#include <optional>

namespace lieder {

// Finite-dimensional Lie algebra over Q given by structure constants:
// [e_i, e_j] = sum_k c[i][j][k] e_k, all indices 0-based internally.
struct LieAlgebra {
    int n = 0;
    std::string name;
    std::vector<Rat> c; // (i*n + j)*n + k

    // Catalog-only marking for reductive direct sums: first `first` basis
    // vectors span a semisimple ideal, the remaining `second` an abelian one.
    std::optional<std::pair<int, int>> reductive_split;

    LieAlgebra() = default;
    LieAlgebra(int dim, std::string label)
        : n(dim), name(std::move(label)), c(size_t(dim) * dim * dim) {}

    Rat& c_at(int i, int j, int k) { return c[(size_t(i) * n + j) * n + k]; }
    const Rat& c_at(int i, int j, int k) const { return c[(size_t(i) * n + j) * n + k]; }

    // Sets [e_i, e_j] = sum v_k e_k and the antisymmetric counterpart.
    void set_bracket(int i, int j, const Vec& v);
};

struct ValidationReport {
    bool antisymmetry_ok = true;
    bool jacobi_ok = true;
    std::vector<std::array<int, 2>> failing_pairs;   // antisymmetry failures (0-based)
    std::vector<std::array<int, 3>> failing_triples; // Jacobi failures (0-based)

    bool ok() const { return antisymmetry_ok && jacobi_ok; }
};

ValidationReport validate(const LieAlgebra& g);

// Throws ValidationFailed naming the first failure.
void require_valid(const LieAlgebra& g);

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);

// Right-nested [x1,[x2,[...,[xk,xk+1]...]]]; needs at least two entries.
Vec nested_bracket(const LieAlgebra& g, const std::vector<Vec>& xs);

Matrix ad(const LieAlgebra& g, const Vec& x);
Matrix ad_basis(const LieAlgebra& g, int i);

enum class SeriesKind { LowerCentral, Derived, UpperCentral, KDerived };

struct SeriesChain {
    SeriesKind kind;
    std::vector<Subspace> terms;
};

// Span of [A,B] from basis pairs (bilinearity makes this exact).
Subspace subspace_bracket(const LieAlgebra& g, const Subspace& a, const Subspace& b);

SeriesChain lower_central_series(const LieAlgebra& g);
SeriesChain derived_series(const LieAlgebra& g);
SeriesChain upper_central_series(const LieAlgebra& g);

// Derived sequence of S inside the k-Leibniz algebra L_k(g): each term the
// span of nested (k+1)-fold brackets of the previous one.
SeriesChain k_derived_series(const LieAlgebra& g, const Subspace& s, int k);

Subspace center(const LieAlgebra& g);

std::optional<int> nilpotency_class_opt(const LieAlgebra& g);
int nilpotency_class(const LieAlgebra& g); // throws NotNilpotent

Matrix killing_form(const LieAlgebra& g);

// Solvable radical via the characteristic-zero criterion
// rad(g) = {x : K(x, [g,g]) = 0}; re-checked solvable.
Subspace radical(const LieAlgebra& g);

struct StructuralPredicates {
    bool is_abelian = false;
    bool is_nilpotent = false;
    bool is_solvable = false;
    bool is_perfect = false;
    bool is_semisimple = false;
    bool is_reductive = false;
    bool is_centerless = false;

    bool operator==(const StructuralPredicates&) const = default;
};

StructuralPredicates structural_predicates(const LieAlgebra& g);

} // namespace lieder
