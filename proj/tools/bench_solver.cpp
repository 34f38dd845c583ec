#include "lieder/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

// Times the serial exact solver against the modular solver on catalog
// algebras and checks that both return the same canonical subspace.

using namespace lieder;

namespace {

double run_ms(const LieAlgebra& g, int k, SolverOptions::Mode mode, DerivationSpace& out) {
    SolverOptions opt;
    opt.mode = mode;
    auto t0 = std::chrono::steady_clock::now();
    out = leibniz_derivation_space(g, k, opt);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else {
            std::fprintf(stderr, "usage: bench_solver [--quick]\n");
            return 2;
        }
    }

    struct Case {
        const char* name;
        int k;
    };
    std::vector<Case> cases = {{"heisenberg_3", 2}, {"filiform_n4", 3}, {"sl2", 2}};
    if (!quick) {
        cases.insert(cases.end(), {{"heisenberg_5", 2},
                                   {"heisenberg_5", 3},
                                   {"sl2_plus_abelian_2", 3},
                                   {"sl2_sl2", 2},
                                   {"sl2_sl2", 3},
                                   {"dixmier_lister_8", 2},
                                   {"dixmier_lister_8", 3}});
    }

    std::printf("%-20s %2s %5s %12s %12s %8s\n", "algebra", "k", "dim", "exact[ms]", "modular[ms]",
                "ratio");
    bool ok = true;
    for (const Case& c : cases) {
        LieAlgebra g = builtin(c.name).algebra;
        DerivationSpace ex, md;
        double te = run_ms(g, c.k, SolverOptions::Mode::Exact, ex);
        double tm = run_ms(g, c.k, SolverOptions::Mode::Modular, md);
        bool same = ex.space == md.space;
        ok = ok && same;
        std::printf("%-20s %2d %5d %12.2f %12.2f %8.2f%s\n", c.name, c.k, ex.space.dim(), te, tm,
                    tm > 0 ? te / tm : 0.0, same ? "" : "  MISMATCH");
    }
    if (!ok) {
        std::fprintf(stderr, "solver outputs disagree\n");
        return 1;
    }
    return 0;
}
