#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieder/catalog.hpp"
#include "lieder/error.hpp"
#include "lieder/leibniz.hpp"

#include <cstdlib>

using namespace lieder;

namespace {

// Brute-force assembly of the order-k system, written independently of the
// library's streaming walker: for every (k+1)-tuple of basis indices the
// identity P[x1,...,xk+1] = sum_j [x1,...,P xj,...,xk+1] becomes n rows in
// the n^2 unknowns P[r][c] (row-major). No pruning, no reuse.
Matrix naive_system(const LieAlgebra& g, int k) {
    const int n = g.n;
    size_t tuples = 1;
    for (int i = 0; i <= k; ++i) tuples *= size_t(n);
    Matrix sys(int(tuples) * n, n * n);
    std::vector<int> t(size_t(k) + 1, 0);
    int row = 0;
    for (;;) {
        std::vector<Vec> xs;
        for (int v : t) xs.push_back(unit_vec(n, v));
        Vec bt = nested_bracket(g, xs);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) sys.at(row + r, r * n + c) += bt[size_t(c)];
        for (int j = 0; j <= k; ++j)
            for (int s = 0; s < n; ++s) {
                std::vector<Vec> ys = xs;
                ys[size_t(j)] = unit_vec(n, s);
                Vec v = nested_bracket(g, ys);
                for (int r = 0; r < n; ++r) sys.at(row + r, s * n + t[size_t(j)]) -= v[size_t(r)];
            }
        row += n;
        int pos = k;
        while (pos >= 0 && ++t[size_t(pos)] == n) t[size_t(pos--)] = 0;
        if (pos < 0) break;
    }
    return sys;
}

Subspace naive_lder(const LieAlgebra& g, int k) { return nullspace(naive_system(g, k)); }

SolverOptions mode(SolverOptions::Mode m) {
    SolverOptions opt;
    opt.mode = m;
    return opt;
}

Matrix diag(int n, std::initializer_list<long> vals) {
    Matrix m(n, n);
    int i = 0;
    for (long v : vals) m.at(i, i) = Rat(v), ++i;
    return m;
}

} // namespace

TEST_CASE("solver agrees with the brute-force assembler, both modes") {
    struct Probe {
        const char* name;
        int k;
    };
    for (const Probe& p : std::initializer_list<Probe>{{"heisenberg_3", 1},
                                                       {"heisenberg_3", 2},
                                                       {"heisenberg_3", 3},
                                                       {"filiform_n4", 1},
                                                       {"filiform_n4", 2},
                                                       {"filiform_n4", 3},
                                                       {"sl2", 1},
                                                       {"sl2", 2},
                                                       {"aff1", 1},
                                                       {"aff1", 4},
                                                       {"abelian_3", 2}}) {
        LieAlgebra g = builtin(p.name).algebra;
        Subspace expect = naive_lder(g, p.k);
        CAPTURE(p.name);
        CAPTURE(p.k);
        CHECK(leibniz_derivation_space(g, p.k, mode(SolverOptions::Mode::Exact)).space == expect);
        CHECK(leibniz_derivation_space(g, p.k, mode(SolverOptions::Mode::Modular)).space == expect);
    }
}

TEST_CASE("derivation space dims on the catalog") {
    auto dim = [](const char* name, int k) {
        return leibniz_derivation_space(builtin(name).algebra, k).space.dim();
    };
    CHECK(dim("heisenberg_3", 1) == 6);
    CHECK(dim("heisenberg_3", 2) == 9);
    CHECK(dim("heisenberg_5", 1) == 15);
    CHECK(dim("heisenberg_5", 2) == 25);
    CHECK(dim("filiform_n4", 1) == 7);
    CHECK(dim("filiform_n4", 2) == 9);
    CHECK(dim("filiform_n4", 3) == 16);
    CHECK(dim("sl2", 1) == 3);
    CHECK(dim("sl2", 2) == 3);
    CHECK(dim("sl2", 3) == 3);
    CHECK(dim("gl2", 1) == 4);
    CHECK(dim("gl2", 2) == 4);
    CHECK(dim("aff1", 1) == 2);
    CHECK(dim("aff1", 2) == 2);
    CHECK(dim("sl2_plus_abelian_2", 1) == 7);
    CHECK(dim("sl2_plus_abelian_2", 2) == 7);
    CHECK(dim("sl2_sl2", 1) == 6);
    CHECK(dim("abelian_3", 2) == 9);
    CHECK(dim("dixmier_lister_8", 1) == 12);
}

TEST_CASE("dixmier_lister_8 second-order space, exact vs modular") {
    LieAlgebra g = builtin("dixmier_lister_8").algebra;
    DerivationSpace ex = leibniz_derivation_space(g, 2, mode(SolverOptions::Mode::Exact));
    DerivationSpace md = leibniz_derivation_space(g, 2, mode(SolverOptions::Mode::Modular));
    CHECK(ex.space.dim() == 28);
    CHECK(ex.space == md.space);
    // orders at and above the class solve to the whole of gl
    CHECK(leibniz_derivation_space(g, 3).space.dim() == 64);
}

TEST_CASE("inner derivations") {
    LieAlgebra h3 = builtin("heisenberg_3").algebra;
    Subspace inn = inner_derivations(h3);
    CHECK(inn.dim() == 2); // n - dim center
    CHECK(contains(leibniz_derivation_space(h3, 1).space, inn));
    CHECK(inner_derivations(builtin("abelian_4").algebra).dim() == 0);
    CHECK(inner_derivations(builtin("sl2").algebra).dim() == 3);
}

TEST_CASE("chain report") {
    ChainReport rep = verify_chain(builtin("heisenberg_3").algebra, 3);
    CHECK(rep.all_ok);
    CHECK(rep.k_max == 3);
    CHECK(rep.dim_inn == 2);
    CHECK(rep.dims_lder == std::vector<int>{6, 9, 9});
    for (const auto& inc : rep.inclusions) CHECK(inc.holds);
    CHECK(!rep.inclusions.empty());
}

TEST_CASE("divisibility inclusions") {
    LieAlgebra n4 = builtin("filiform_n4").algebra;
    CHECK(verify_divisibility_inclusion(n4, 1, 2));
    CHECK(verify_divisibility_inclusion(n4, 1, 3));
    CHECK(verify_divisibility_inclusion(n4, 2, 4));
    try {
        verify_divisibility_inclusion(n4, 2, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisibilityViolated);
    }
}

TEST_CASE("sum inclusion") {
    CHECK(verify_sum_inclusion(builtin("heisenberg_3").algebra, 2, 3));
    CHECK(verify_sum_inclusion(builtin("filiform_n4").algebra, 1, 2));
}

TEST_CASE("bracket closure of solved spaces") {
    CHECK(verify_bracket_closure(leibniz_derivation_space(builtin("heisenberg_3").algebra, 2)));
    CHECK(verify_bracket_closure(leibniz_derivation_space(builtin("sl2").algebra, 1)));
    CHECK(verify_bracket_closure(leibniz_derivation_space(builtin("filiform_n4").algebra, 3)));
}

TEST_CASE("pointwise membership") {
    LieAlgebra h3 = builtin("heisenberg_3").algebra;
    CHECK(is_leibniz_derivation(h3, diag(3, {1, 1, 2}), 1));
    CHECK(!is_leibniz_derivation(h3, Matrix::identity(3), 1));
    CHECK(is_leibniz_derivation(h3, Matrix::identity(3), 2)); // triple brackets vanish

    // every solved basis element is a member; one nudged off the proper
    // subspace Der(h3) in a non-derivation direction is not
    DerivationSpace ds = leibniz_derivation_space(h3, 1);
    std::vector<Matrix> cands;
    for (int r = 0; r < ds.space.dim(); ++r) {
        Vec row(ds.space.basis.a.begin() + size_t(r) * 9,
                ds.space.basis.a.begin() + size_t(r + 1) * 9);
        cands.push_back(unvectorize(row, 3));
    }
    Matrix bad = cands[0];
    bad.at(0, 0) += Rat(1, 7); // E00 scales e1 alone, never a derivation here
    bool bad_is_member = is_leibniz_derivation(h3, bad, 1);
    cands.push_back(bad);
    std::vector<bool> flags = are_leibniz_derivations(h3, cands, 1);
    for (size_t i = 0; i + 1 < flags.size(); ++i) CHECK(flags[i]);
    CHECK(flags.back() == bad_is_member);
    CHECK(!bad_is_member);
}

TEST_CASE("automorphism membership") {
    LieAlgebra h3 = builtin("heisenberg_3").algebra;
    CHECK(is_leibniz_automorphism(h3, Matrix::identity(3), 1));
    CHECK(is_leibniz_automorphism(h3, diag(3, {1, 2, 2}), 1));
    CHECK(!is_leibniz_automorphism(h3, diag(3, {1, 1, 2}), 1));
    CHECK(!is_leibniz_automorphism(h3, Matrix(3, 3), 1)); // singular
    // order 2: all nested triples vanish on h3, any invertible map passes
    CHECK(is_leibniz_automorphism(h3, diag(3, {1, 1, 5}), 2));
}

TEST_CASE("star identity space") {
    LieAlgebra sl2 = builtin("sl2").algebra;
    for (const Rat& m : {Rat(1), Rat(2), Rat(1, 2)}) {
        CHECK(star_identity_space(sl2, m, 2).space.dim() == 0);
        CHECK(star_identity_space(sl2, m, 3).space.dim() == 0);
    }
    CHECK(star_identity_space(builtin("abelian_3").algebra, Rat(1), 2).space.dim() == 9);
    CHECK(star_identity_space(builtin("abelian_3").algebra, Rat(1, 2), 3).space.dim() == 9);

    CHECK_THROWS_AS(star_identity_space(sl2, Rat(0), 2), Error);
    CHECK_THROWS_AS(star_identity_space(sl2, Rat(-3), 2), Error);
    CHECK_THROWS_AS(star_identity_space(sl2, Rat(1), 1), Error);
    CHECK_NOTHROW(star_identity_space(sl2, Rat(-1, 2), 2)); // negative but not an integer
}

TEST_CASE("star space of derivation-like maps on nilpotent algebras") {
    // h3, m = 2, k = 2: the conditions reduce to 2 f(e3) = -[e1, f(e2)] plus
    // centrality, leaving f = c*diag(-2,-2,1) + (maps of e1, e2 into e3)
    LieAlgebra h3 = builtin("heisenberg_3").algebra;
    StarSystem sys = star_identity_space(h3, Rat(2), 2);
    CHECK(sys.m == Rat(2));
    CHECK(sys.k == 2);
    CHECK(sys.space.dim() == 3);
    CHECK(contains(sys.space, vectorize(diag(3, {-2, -2, 1}))));
    Matrix into_center(3, 3);
    into_center.at(2, 0) = 1; // e1 -> e3
    CHECK(contains(sys.space, vectorize(into_center)));
    CHECK(!contains(sys.space, vectorize(Matrix::identity(3))));
}

TEST_CASE("radical invariance") {
    CHECK(radical_invariance_check(builtin("gl2").algebra, 1));
    CHECK(radical_invariance_check(builtin("gl2").algebra, 2));
    CHECK(radical_invariance_check(builtin("aff1").algebra, 3));
    CHECK(radical_invariance_check(builtin("sl2_plus_abelian_2").algebra, 2));
}

TEST_CASE("decomposition of marked reductive sums") {
    CHECK(dimension_decomposition_check(builtin("gl2").algebra, 1));
    CHECK(dimension_decomposition_check(builtin("gl2").algebra, 2));
    CHECK(dimension_decomposition_check(builtin("sl2_plus_abelian_2").algebra, 2));
    try {
        dimension_decomposition_check(builtin("heisenberg_3").algebra, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SummandsNotMarked);
    }
}

TEST_CASE("tuple cap") {
    CHECK_THROWS_AS(check_tuple_cap(3, 2, 10), Error);
    CHECK_NOTHROW(check_tuple_cap(3, 2, 27));
    // overflow-safe for absurd exponents
    CHECK_THROWS_AS(check_tuple_cap(8, 60, 1ull << 62), Error);

    SolverOptions opt;
    opt.tuple_cap = 10;
    try {
        leibniz_derivation_space(builtin("heisenberg_3").algebra, 2, opt);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }

    setenv("LIEDER_TUPLE_CAP", "50", 1);
    CHECK(tuple_cap_default() == 50);
    CHECK(effective_tuple_cap(SolverOptions{}) == 50);
    CHECK(effective_tuple_cap(opt) == 10);
    setenv("LIEDER_TUPLE_CAP", "junk", 1);
    CHECK(tuple_cap_default() == (1ull << 21));
    unsetenv("LIEDER_TUPLE_CAP");
    CHECK(tuple_cap_default() == (1ull << 21));
}

TEST_CASE("order precondition") {
    CHECK_THROWS_AS(leibniz_derivation_space(builtin("sl2").algebra, 0), Error);
}

TEST_CASE("space metadata") {
    DerivationSpace ds = leibniz_derivation_space(builtin("heisenberg_5").algebra, 2);
    CHECK(ds.order == 2);
    CHECK(ds.algebra == "heisenberg_5");
    CHECK(ds.space.ambient == 25);
}
