#pragma once

#include "lieder/leibniz.hpp"
#include "lieder/poly.hpp"

namespace lieder {

// Family of structure tensors polynomial in one parameter t; every fiber is
// required to be a Lie algebra, which holds iff the Jacobi identity holds as
// a polynomial identity in t.
struct ParamLieAlgebra {
    int n = 0;
    std::string name;
    std::vector<UniPoly> c; // (i*n + j)*n + k, same layout as LieAlgebra

    ParamLieAlgebra() = default;
    ParamLieAlgebra(int dim, std::string label)
        : n(dim), name(std::move(label)), c(size_t(dim) * dim * dim) {}

    UniPoly& c_at(int i, int j, int k) { return c[(size_t(i) * n + j) * n + k]; }
    const UniPoly& c_at(int i, int j, int k) const { return c[(size_t(i) * n + j) * n + k]; }
};

// Antisymmetry and Jacobi as polynomial identities; ValidationFailed with the
// offending pair or triple otherwise.
void require_valid_family(const ParamLieAlgebra& f);

LieAlgebra evaluate_family(const ParamLieAlgebra& f, const Rat& eps);

struct MonotonicityReport {
    int order = 1;
    std::vector<Rat> samples;
    int generic_dim = 0;
    int limit_dim = 0;
    bool monotone = false;
    bool strict = false;
};

// dim LDer_k at nonzero samples (all must agree, else GenericDimUnstable)
// against the fiber at t = 0.
MonotonicityReport dimension_monotonicity_check(const ParamLieAlgebra& f, int k,
                                                const std::vector<Rat>& samples,
                                                const SolverOptions& opt = {});

std::vector<Rat> default_samples();

} // namespace lieder
