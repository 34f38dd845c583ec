// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero when any fail. Slower than the unit suites by design: it
// re-derives everything from the public API, including CLI round trips.
#include <lieder/catalog.hpp>
#include <lieder/degeneration.hpp>
#include <lieder/error.hpp>
#include <lieder/leibniz.hpp>
#include <lieder/lie_algebra.hpp>
#include <lieder/nilpotency.hpp>
#include <lieder/poly.hpp>

#include "random_nilpotent.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace lieder;

namespace {

int failures = 0;

struct Checker {
    bool ok = true;
    std::string note;
    void operator()(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) note = what;
            ok = false;
        }
    }
};

void criterion(int num, const std::string& label,
               const std::function<void(Checker&)>& body) {
    Checker c;
    try {
        body(c);
    } catch (const Error& e) {
        c(false, std::string("unexpected error: ") + e.what());
    } catch (const std::exception& e) {
        c(false, std::string("unexpected exception: ") + e.what());
    }
    std::printf("criterion %2d: %s  %s%s%s\n", num, c.ok ? "PASS" : "FAIL", label.c_str(),
                c.note.empty() ? "" : "  -- ", c.note.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

int run_cli(const std::string& args) {
    const char* bin = std::getenv("LIEDER_BIN");
    if (!bin) return -1;
    std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const std::string& stem) {
    return (std::filesystem::temp_directory_path() / ("lieder_acc_" + stem)).string();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream(path) << content;
}

Matrix diag(const std::vector<Rat>& d) {
    Matrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

std::vector<CatalogEntry> whole_catalog() {
    std::vector<CatalogEntry> entries;
    for (const auto& name : builtin_names()) entries.push_back(builtin(name));
    return entries;
}

} // namespace

int main() {
    const auto catalog = whole_catalog();

    criterion(1, "chain and bracket closure across the catalog, k <= 6", [&](Checker& c) {
        for (const auto& entry : catalog) {
            const LieAlgebra& g = entry.algebra;
            Subspace inn = inner_derivations(g);
            Subspace gl = full_space(g.n * g.n);
            Subspace der;
            for (int k = 1; k <= 6; ++k) {
                DerivationSpace d = leibniz_derivation_space(g, k);
                if (k == 1) {
                    c(contains(d.space, inn), g.name + ": Inn not inside Der");
                    der = d.space;
                } else {
                    c(contains(d.space, der),
                      g.name + ": Der not inside LDer_" + std::to_string(k));
                }
                c(contains(gl, d.space), g.name + ": LDer escapes gl");
                c(verify_bracket_closure(d),
                  g.name + ": LDer_" + std::to_string(k) + " not bracket closed");
            }
        }
    });

    criterion(2, "divisibility and sum inclusions across the catalog", [&](Checker& c) {
        const std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {2, 4}, {2, 6}, {3, 6}};
        for (const auto& entry : catalog) {
            const LieAlgebra& g = entry.algebra;
            for (auto [s, t] : pairs)
                c(verify_divisibility_inclusion(g, s, t),
                  g.name + ": LDer_" + std::to_string(s) + " not inside LDer_" +
                      std::to_string(t));
            c(verify_sum_inclusion(g, 2, 3),
              g.name + ": LDer_2 meet LDer_3 not inside LDer_5");
        }
    });

    criterion(3, "class recovered from the stabilization order", [&](Checker& c) {
        for (const auto& entry : catalog) {
            if (!entry.tags.is_nilpotent) continue;
            const LieAlgebra& g = entry.algebra;
            c(class_via_lder(g) == nilpotency_class(g), g.name + ": order mismatch");
        }
        c(class_via_lder(builtin("heisenberg_3").algebra) == 2, "heisenberg_3 != 2");
        c(class_via_lder(builtin("filiform_n4").algebra) == 3, "filiform_n4 != 3");
        c(class_via_lder(builtin("abelian_3").algebra) == 1, "abelian_3 != 1");
        c(class_via_lder(builtin("heisenberg_5").algebra) == 2, "heisenberg_5 != 2");
    });

    criterion(4, "projection element lands in LDer_q and is invertible", [&](Checker& c) {
        for (const auto& entry : catalog) {
            if (!entry.tags.is_nilpotent) continue;
            const LieAlgebra& g = entry.algebra;
            SemisimpleLDer ss = construct_semisimple_lder(g);
            c(ss.q == (nilpotency_class(g) + 1) / 2, g.name + ": wrong order");
            DerivationSpace d = leibniz_derivation_space(g, ss.q);
            c(contains(d.space, vectorize(ss.p)), g.name + ": not a solver member");
            c(det(ss.p) != Rat(0), g.name + ": singular");
        }
        c(construct_semisimple_lder(builtin("heisenberg_3").algebra).p ==
              diag({Rat(1), Rat(1), Rat(2)}),
          "heisenberg_3 projection is not diag(1,1,2)");
        c(construct_semisimple_lder(builtin("filiform_n4").algebra).p ==
              diag({Rat(1), Rat(1), Rat(1), Rat(3)}),
          "filiform_n4 projection is not diag(1,1,1,3)");
    });

    criterion(5, "oracles agree; nilpotent verdicts carry verifiable certificates",
              [&](Checker& c) {
        std::vector<LieAlgebra> algebras;
        for (const auto& entry : catalog) algebras.push_back(entry.algebra);
        for (unsigned long long seed = 1; seed <= 50; ++seed)
            algebras.push_back(testutil::random_nilpotent(seed));

        for (const auto& g : algebras) {
            NilpotencyCertificate main_cert = nilpotency_by_main_theorem(g);
            NilpotencyCertificate series_cert = nilpotency_by_series(g);
            c(main_cert.nilpotent == series_cert.nilpotent, g.name + ": verdicts disagree");
            if (g.name == "sl2" || g.name == "gl2" || g.name == "aff1")
                c(!main_cert.nilpotent, g.name + ": should not be nilpotent");
            if (!main_cert.nilpotent) continue;

            c(std::holds_alternative<InvertibleLDer>(main_cert.evidence),
              g.name + ": nilpotent verdict without invertible evidence");
            c(verify_certificate(g, main_cert), g.name + ": certificate rejected");

            std::string cert_path = temp_path("cert.json");
            write_file(cert_path, certificate_to_json(main_cert));
            if (is_builtin(g.name)) {
                c(run_cli("verify " + cert_path) == 0, g.name + ": cli verify failed");
            } else {
                std::string alg_path = temp_path("alg.json");
                save_algebra(alg_path, g);
                c(run_cli("verify " + cert_path + " --algebra " + alg_path) == 0,
                  g.name + ": cli verify failed");
            }
        }
    });

    criterion(6, "derivation towers of sl2, gl2 and sl2+sl2 stay flat", [&](Checker& c) {
        LieAlgebra sl2 = builtin("sl2").algebra;
        for (int k = 1; k <= 5; ++k)
            c(leibniz_derivation_space(sl2, k).space.dim() == 3,
              "sl2 k=" + std::to_string(k));

        LieAlgebra gl2 = builtin("gl2").algebra;
        Subspace der = leibniz_derivation_space(gl2, 1).space;
        c(der.dim() == 4, "gl2 der dim");
        for (int k = 2; k <= 4; ++k)
            c(leibniz_derivation_space(gl2, k).space == der,
              "gl2 k=" + std::to_string(k) + " differs from Der");

        LieAlgebra ss = builtin("sl2_sl2").algebra;
        int der_dim = leibniz_derivation_space(ss, 1).space.dim();
        c(der_dim == 6, "sl2_sl2 der dim");
        for (int k = 2; k <= 3; ++k)
            c(leibniz_derivation_space(ss, k).space.dim() == der_dim,
              "sl2_sl2 k=" + std::to_string(k));
    });

    criterion(7, "star identity space: trivial on sl2, full on abelian", [&](Checker& c) {
        LieAlgebra sl2 = builtin("sl2").algebra;
        LieAlgebra ab = builtin("abelian_3").algebra;
        for (const Rat& m : {Rat(1), Rat(2), rat(1, 2)})
            for (int k : {2, 3}) {
                std::string tag = " m=" + rat_str(m) + " k=" + std::to_string(k);
                c(star_identity_space(sl2, m, k).space.dim() == 0, "sl2" + tag);
                c(star_identity_space(ab, m, k).space.dim() == 9, "abelian_3" + tag);
            }
    });

    criterion(8, "radical invariance for k <= 3", [&](Checker& c) {
        for (const std::string& name : {"gl2", "aff1", "sl2_plus_abelian_2"}) {
            LieAlgebra g = builtin(name).algebra;
            for (int k = 1; k <= 3; ++k)
                c(radical_invariance_check(g, k), name + " k=" + std::to_string(k));
        }
    });

    criterion(9, "projection operators induce gradings", [&](Checker& c) {
        for (const auto& entry : catalog) {
            if (!entry.tags.is_nilpotent) continue;
            const LieAlgebra& g = entry.algebra;
            SemisimpleLDer ss = construct_semisimple_lder(g);
            GradingReport rep = grading_check(g, ss.p, ss.q);
            c(rep.ok, g.name + ": grading fails");
            c(!rep.tuples.empty(), g.name + ": no tuples checked");
        }
        bool rejected = false;
        try {
            grading_check(builtin("heisenberg_3").algebra, diag({Rat(1), Rat(1), Rat(5)}), 1);
        } catch (const Error& e) {
            rejected = e.kind() == ErrorKind::NotADerivation;
        }
        c(rejected, "diag(1,1,5) was not rejected");
    });

    criterion(10, "contraction is monotone, strictly at order 1", [&](Checker& c) {
        const char* data = std::getenv("LIEDER_DATA");
        c(data != nullptr, "LIEDER_DATA not set");
        if (!data) return;
        ParamLieAlgebra fam = load_family(std::string(data) + "/family_t_e3.json");

        MonotonicityReport r1 = dimension_monotonicity_check(fam, 1, default_samples());
        c(r1.generic_dim == 6, "generic dim k=1");
        c(r1.limit_dim == 9, "limit dim k=1");
        c(r1.monotone && r1.strict, "k=1 should be strictly monotone");

        MonotonicityReport r2 = dimension_monotonicity_check(fam, 2, default_samples());
        c(r2.generic_dim == 9 && r2.limit_dim == 9, "dims k=2");
        c(r2.monotone && !r2.strict, "k=2 should be monotone but not strict");
    });

    criterion(11, "strict witnesses separate consecutive orders", [&](Checker& c) {
        struct Probe {
            const char* name;
            int k, l;
        };
        for (const Probe& p : {Probe{"heisenberg_3", 2, 1}, Probe{"filiform_n4", 3, 2}}) {
            LieAlgebra g = builtin(p.name).algebra;
            Matrix w = construct_strict_witness(g, p.k, p.l);
            Vec v = vectorize(w);
            c(contains(leibniz_derivation_space(g, p.k).space, v),
              std::string(p.name) + ": witness misses LDer_k");
            c(!contains(leibniz_derivation_space(g, p.l).space, v),
              std::string(p.name) + ": witness already in LDer_l");
        }
    });

    criterion(12, "dixmier_lister_8: nilpotent, no invertible derivation", [&](Checker& c) {
        CatalogEntry entry = builtin("dixmier_lister_8");
        const LieAlgebra& g = entry.algebra;
        c(validate(g).ok(), "structure constants invalid");

        c(nilpotency_by_main_theorem(g).nilpotent, "main oracle verdict");
        c(nilpotency_by_series(g).nilpotent, "series oracle verdict");

        MinimalOrderResult min = minimal_invertible_order(g);
        c(min.order >= 2, "invertible derivation should not exist");
        c(min.order == entry.expected.min_invertible_order, "recorded order mismatch");

        DerivationSpace der = leibniz_derivation_space(g, 1);
        c(der.space.dim() == 12, "dim Der");
        UniPoly x8 = UniPoly::monomial(Rat(1), 8);
        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 100; ++trial) {
            Matrix d = Matrix::zero(g.n);
            for (int r = 0; r < der.space.dim(); ++r) {
                long coef = long(rng() % 200001) - 100000;
                Vec row(der.space.basis.cols);
                for (int col = 0; col < der.space.basis.cols; ++col)
                    row[size_t(col)] = der.space.basis.at(r, col);
                d = d + Rat(coef) * unvectorize(row, g.n);
            }
            if (char_poly(d) != x8) {
                c(false, "sampled derivation " + std::to_string(trial) +
                             " is not nilpotent");
                break;
            }
        }
    });

    if (failures == 0) {
        std::printf("all 12 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
