#pragma once

#include "lieder/leibniz.hpp"
#include "lieder/poly.hpp"

#include <optional>
#include <variant>

namespace lieder {

// Exact evidence backing an "invertible element of LDer_k found" verdict.
struct InvertibleLDer {
    int order = 1;
    Matrix p;
    Rat det_value;
};

struct NoInvertibleFound {
    int max_order = 0; // orders 1..max_order were searched
    int trials = 0;    // random trials per order
    unsigned long long seed = 0;
};

struct LcsVanishing {
    int cls = 1;
    SeriesChain series;
};

struct LcsStabilizedNonzero {
    Subspace stable;
};

struct NilpotencyCertificate {
    std::string algebra;
    bool nilpotent = false;
    std::variant<InvertibleLDer, NoInvertibleFound, LcsVanishing, LcsStabilizedNonzero> evidence;
};

// Projection construction: q = ceil(c/2), P = 1 on the coordinate complement
// of the (q+1)-th lower central term and (q+1) on the term itself.
struct SemisimpleLDer {
    int q = 1;
    Matrix p;
};

SemisimpleLDer construct_semisimple_lder(const LieAlgebra& g);

// Rank-one map sending a witness bracket u of depth exactly k to a central
// vector; lands in LDer_k but not LDer_l. Requires k <= class, k = 1 (mod l).
Matrix construct_strict_witness(const LieAlgebra& g, int k, int l,
                                const SolverOptions& opt = {});

// Deterministic pre-pass (identity membership, then basis elements, then
// `extra` candidates), then seeded random combinations with integer
// coefficients in [-2^16, 2^16]. One-sided: a hit is an exact certificate.
std::optional<InvertibleLDer> find_invertible_element(const DerivationSpace& space, int trials,
                                                      unsigned long long seed,
                                                      const std::vector<Matrix>& extra = {});

NilpotencyCertificate nilpotency_by_main_theorem(const LieAlgebra& g, int trials = 20,
                                                 unsigned long long seed = 0,
                                                 const SolverOptions& opt = {});

// Independent oracle: lower central series either vanishes or stabilizes.
NilpotencyCertificate nilpotency_by_series(const LieAlgebra& g);

struct MinimalOrderResult {
    int order = 1;
    InvertibleLDer evidence;
};

// Smallest k <= class carrying an invertible Leibniz-derivation; the
// projection element enters the candidate list at k = ceil(c/2), which also
// bounds the scan. Throws NotNilpotent.
MinimalOrderResult minimal_invertible_order(const LieAlgebra& g, int trials = 20,
                                            unsigned long long seed = 0,
                                            const SolverOptions& opt = {});

struct GradingDecomposition {
    Matrix op;
    int order = 1;
    std::vector<EigenPart> parts;
};

struct GradingReport {
    GradingDecomposition decomposition;
    struct TupleResult {
        std::vector<Rat> alphas;
        Rat sum;
        bool target_exists = false;
        bool contained = false;
    };
    std::vector<TupleResult> tuples;
    bool ok = false;
};

// [g_a1,...,g_ak+1] <= g_(a1+...+ak+1) for the generalized eigenspaces of P.
// NotADerivation unless P is in LDer_k; SpectrumNotRational if the
// characteristic polynomial does not split.
GradingReport grading_check(const LieAlgebra& g, const Matrix& p, int k,
                            const SolverOptions& opt = {});

// Minimal k <= n with dim LDer_k = n^2; throws NotNilpotent when absent.
int class_via_lder(const LieAlgebra& g, const SolverOptions& opt = {});

std::string certificate_to_json(const NilpotencyCertificate& cert, int indent = 2);
NilpotencyCertificate certificate_from_json(const std::string& text);

// Re-checks a certificate from scratch against g through independent paths:
// membership + determinant for invertible evidence, series recomputation for
// the rest (including NoInvertibleFound, cross-checked against the lcs).
bool verify_certificate(const LieAlgebra& g, const NilpotencyCertificate& cert,
                        const SolverOptions& opt = {});

} // namespace lieder
