#pragma once

#include "lieder/lie_algebra.hpp"

namespace lieder {

// LDer_k(g) as a subspace of gl(n) = Q^(n*n), endomorphisms vectorized
// row-major (interchange contract for exported basis files).
struct DerivationSpace {
    int order = 1;
    Subspace space;
    std::string algebra;
};

struct StarSystem {
    Rat m;
    int k = 2;
    Subspace space;
    std::string algebra;
};

struct SolverOptions {
    enum class Mode { Auto, Exact, Modular };
    Mode mode = Mode::Auto;
    unsigned long long tuple_cap = 0; // 0: LIEDER_TUPLE_CAP env or 2^21
};

unsigned long long tuple_cap_default();
unsigned long long effective_tuple_cap(const SolverOptions& opt);

// Throws CapExceeded when n^(k+1) exceeds the cap.
void check_tuple_cap(int n, int k, unsigned long long cap);

// Nullspace of the order-k Leibniz identity over all basis (k+1)-tuples.
DerivationSpace leibniz_derivation_space(const LieAlgebra& g, int k, const SolverOptions& opt = {});

// Span of {ad(e_i)}; dim = n - dim(center).
Subspace inner_derivations(const LieAlgebra& g);

struct ChainReport {
    int k_max = 1;
    int dim_inn = 0;
    std::vector<int> dims_lder; // dim LDer_1 .. LDer_k_max
    struct Inclusion {
        std::string label;
        bool holds = false;
    };
    std::vector<Inclusion> inclusions;
    bool all_ok = false;
};

// Inn ⊆ Der ⊆ LDer_k ⊆ gl with every containment checked exactly.
ChainReport verify_chain(const LieAlgebra& g, int k_max, const SolverOptions& opt = {});

// LDer_s ⊆ LDer_t; DivisibilityViolated unless s | t.
bool verify_divisibility_inclusion(const LieAlgebra& g, int s, int t, const SolverOptions& opt = {});

// LDer_k ∩ LDer_l ⊆ LDer_{k+l}.
bool verify_sum_inclusion(const LieAlgebra& g, int k, int l, const SolverOptions& opt = {});

// Commutators of basis pairs stay inside the space.
bool verify_bracket_closure(const DerivationSpace& space);

// Direct membership check of the order-k identity on all basis tuples.
bool is_leibniz_derivation(const LieAlgebra& g, const Matrix& p, int k,
                           unsigned long long tuple_cap = 0);

// Several candidates in one pass over the shared tuple tree.
std::vector<bool> are_leibniz_derivations(const LieAlgebra& g, const std::vector<Matrix>& ps,
                                          int k, unsigned long long tuple_cap = 0);

// det(A) != 0 and A preserves all nested (k+1)-brackets of basis tuples.
bool is_leibniz_automorphism(const LieAlgebra& g, const Matrix& a, int k,
                             unsigned long long tuple_cap = 0);

// Solution space of the star identity over all basis k-tuples.
// InvalidM when m is zero or a negative integer; k >= 2.
StarSystem star_identity_space(const LieAlgebra& g, const Rat& m, int k,
                               const SolverOptions& opt = {});

// D rad(g) ⊆ rad(g) for every basis element D of LDer_k(g).
bool radical_invariance_check(const LieAlgebra& g, int k, const SolverOptions& opt = {});

// For g = s ⊕ a marked in the catalog (s semisimple, a abelian):
// dim LDer_k = dim Inn(s) + (dim a)^2 and LDer_k = Der as subspaces.
bool dimension_decomposition_check(const LieAlgebra& g, int k, const SolverOptions& opt = {});

} // namespace lieder
