#include "lieder/catalog.hpp"
#include "lieder/error.hpp"
#include "lieder/nilpotency.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace lieder;
using ojson = nlohmann::ordered_json;

namespace {

// 0 ok, 1 property failed, 2 bad input, 3 cap exceeded.
int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::CapExceeded:
        return 3;
    case ErrorKind::SpectrumNotRational:
    case ErrorKind::NotADerivation:
    case ErrorKind::WitnessVerificationFailed:
    case ErrorKind::InternalInconsistency:
        return 1;
    default:
        return 2;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// FILE arguments also accept builtin catalog names.
std::variant<LieAlgebra, ParamLieAlgebra> resolve_any(const std::string& arg) {
    if (arg != "-" && !std::filesystem::exists(arg)) {
        if (is_builtin(arg)) return builtin(arg).algebra;
        fail(ErrorKind::ParseError, "cannot open '" + arg + "' and no builtin has that name");
    }
    return parse_algebra_json(read_input(arg));
}

LieAlgebra resolve_algebra(const std::string& arg) {
    auto v = resolve_any(arg);
    if (auto* g = std::get_if<LieAlgebra>(&v)) return std::move(*g);
    fail(ErrorKind::ValidationFailed,
         "'" + arg + "' is a parametric family; evaluate it at a sample first");
}

ParamLieAlgebra resolve_family(const std::string& arg) {
    auto v = resolve_any(arg);
    if (auto* f = std::get_if<ParamLieAlgebra>(&v)) return std::move(*f);
    const LieAlgebra& g = std::get<LieAlgebra>(v);
    ParamLieAlgebra f(g.n, g.name);
    for (size_t idx = 0; idx < g.c.size(); ++idx)
        if (g.c[idx] != 0) f.c[idx] = UniPoly::constant(g.c[idx]);
    return f;
}

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows; ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Accepts a bare [[..]] array or any object with a "matrix" field, so the
// output of `construct-p --json` can be fed straight back in.
Matrix matrix_from_file(const std::string& path, int n) {
    ojson j;
    try {
        j = ojson::parse(read_input(path));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("operator JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    if (!j.is_array() || int(j.size()) != n)
        fail(ErrorKind::ParseError, "operator must be a " + std::to_string(n) + "x" +
                                        std::to_string(n) + " matrix of \"p/q\" strings");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        if (!j[size_t(r)].is_array() || int(j[size_t(r)].size()) != n)
            fail(ErrorKind::ParseError, "operator row " + std::to_string(r + 1) + " has wrong length");
        for (int c = 0; c < n; ++c) {
            const auto& cell = j[size_t(r)][size_t(c)];
            if (!cell.is_string()) fail(ErrorKind::ParseError, "operator entries must be strings");
            m.at(r, c) = parse_rat(cell.get<std::string>());
        }
    }
    return m;
}

unsigned long long parse_seed(const std::string& s, bool& randomized) {
    randomized = false;
    if (s == "random") {
        randomized = true;
        std::random_device rd;
        return (static_cast<unsigned long long>(rd()) << 32) ^ rd();
    }
    try {
        size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "--seed wants an unsigned integer or 'random', got '" + s + "'");
    }
}

std::vector<Rat> parse_samples(const std::string& list) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream is(list);
    while (std::getline(is, cur, ',')) out.push_back(parse_rat(cur));
    if (out.empty()) fail(ErrorKind::ParseError, "--samples list is empty");
    return out;
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

std::string predicates_str(const StructuralPredicates& t) {
    std::string s;
    auto tag = [&](bool b, const char* name) {
        if (!b) return;
        if (!s.empty()) s += ' ';
        s += name;
    };
    tag(t.is_abelian, "abelian");
    tag(t.is_nilpotent, "nilpotent");
    tag(t.is_solvable, "solvable");
    tag(t.is_perfect, "perfect");
    tag(t.is_semisimple, "semisimple");
    tag(t.is_reductive, "reductive");
    tag(t.is_centerless, "centerless");
    return s.empty() ? "none" : s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Leibniz-derivation computations for Lie algebras over Q"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of text");

    int rc = 0;

    // check FILE
    std::string check_file;
    auto* c_check = app.add_subcommand("check", "validate an algebra or family file");
    c_check->add_option("file", check_file, "algebra JSON ('-' for stdin)")->required();
    c_check->callback([&] {
        auto v = resolve_any(check_file);
        int n = 0;
        std::string name;
        bool parametric = false;
        if (auto* g = std::get_if<LieAlgebra>(&v)) {
            n = g->n;
            name = g->name;
        } else {
            auto& f = std::get<ParamLieAlgebra>(v);
            n = f.n;
            name = f.name;
            parametric = true;
        }
        if (json_out)
            emit({{"name", name}, {"dim", n}, {"parametric", parametric}, {"valid", true}});
        else
            std::cout << "ok: " << name << " (dim " << n << (parametric ? ", parametric family" : "")
                      << ")\n";
    });

    // info FILE
    std::string info_file;
    auto* c_info = app.add_subcommand("info", "structural invariants of an algebra");
    c_info->add_option("file", info_file, "algebra JSON ('-' for stdin) or builtin name")
        ->required();
    c_info->callback([&] {
        LieAlgebra g = resolve_algebra(info_file);
        auto tags = structural_predicates(g);
        auto cls = nilpotency_class_opt(g);
        auto lcs = lower_central_series(g);
        int dim_center = center(g).dim();
        int dim_radical = radical(g).dim();
        int dim_derived = subspace_bracket(g, full_space(g.n), full_space(g.n)).dim();
        if (json_out) {
            ojson j;
            j["name"] = g.name;
            j["dim"] = g.n;
            j["class"] = cls ? ojson(*cls) : ojson(nullptr);
            j["dim_center"] = dim_center;
            j["dim_radical"] = dim_radical;
            j["dim_derived"] = dim_derived;
            ojson dims = ojson::array();
            for (const auto& t : lcs.terms) dims.push_back(t.dim());
            j["lcs_dims"] = std::move(dims);
            j["predicates"] = {{"abelian", tags.is_abelian},       {"nilpotent", tags.is_nilpotent},
                               {"solvable", tags.is_solvable},     {"perfect", tags.is_perfect},
                               {"semisimple", tags.is_semisimple}, {"reductive", tags.is_reductive},
                               {"centerless", tags.is_centerless}};
            emit(j);
        } else {
            std::cout << "name: " << g.name << "\ndim: " << g.n << "\nclass: ";
            if (cls)
                std::cout << *cls;
            else
                std::cout << "not nilpotent";
            std::cout << "\ndim center: " << dim_center << "\ndim radical: " << dim_radical
                      << "\ndim [g,g]: " << dim_derived << "\nlcs dims:";
            for (const auto& t : lcs.terms) std::cout << ' ' << t.dim();
            std::cout << "\npredicates: " << predicates_str(tags) << "\n";
        }
    });

    // lder FILE --order K [--basis]
    std::string lder_file;
    int lder_k = 1;
    bool lder_basis = false;
    auto* c_lder = app.add_subcommand("lder", "Leibniz-derivation space of a given order");
    c_lder->add_option("file", lder_file, "algebra JSON ('-' for stdin) or builtin name")
        ->required();
    c_lder->add_option("-k,--order", lder_k, "derivation order (1 = ordinary derivations)")
        ->required();
    c_lder->add_flag("--basis", lder_basis, "include the basis endomorphisms");
    c_lder->callback([&] {
        LieAlgebra g = resolve_algebra(lder_file);
        DerivationSpace ds = leibniz_derivation_space(g, lder_k);
        if (json_out) {
            ojson j;
            j["algebra"] = ds.algebra;
            j["order"] = ds.order;
            j["dim"] = ds.space.dim();
            if (lder_basis) j["basis"] = matrix_json(ds.space.basis);
            emit(j);
        } else {
            std::cout << "dim LDer_" << ds.order << "(" << ds.algebra << ") = " << ds.space.dim()
                      << "\n";
            if (lder_basis)
                for (int r = 0; r < ds.space.dim(); ++r) {
                    Vec row(ds.space.basis.a.begin() + size_t(r) * ds.space.ambient,
                            ds.space.basis.a.begin() + size_t(r + 1) * ds.space.ambient);
                    std::cout << "\n" << matrix_str(unvectorize(row, g.n));
                }
        }
    });

    // chain FILE --max-order K
    std::string chain_file;
    int chain_k = 2;
    auto* c_chain = app.add_subcommand("chain", "verify Inn <= Der <= LDer_k <= gl");
    c_chain->add_option("file", chain_file, "algebra JSON ('-' for stdin) or builtin name")
        ->required();
    c_chain->add_option("-k,--max-order", chain_k, "largest order to include")->required();
    c_chain->callback([&] {
        LieAlgebra g = resolve_algebra(chain_file);
        ChainReport rep = verify_chain(g, chain_k);
        if (json_out) {
            ojson j;
            j["algebra"] = g.name;
            j["k_max"] = rep.k_max;
            j["dim_inn"] = rep.dim_inn;
            j["dims_lder"] = rep.dims_lder;
            ojson inc = ojson::array();
            for (const auto& i : rep.inclusions)
                inc.push_back({{"label", i.label}, {"holds", i.holds}});
            j["inclusions"] = std::move(inc);
            j["all_ok"] = rep.all_ok;
            emit(j);
        } else {
            std::cout << "dim Inn = " << rep.dim_inn << "\n";
            for (int k = 1; k <= rep.k_max; ++k)
                std::cout << "dim LDer_" << k << " = " << rep.dims_lder[size_t(k) - 1] << "\n";
            for (const auto& i : rep.inclusions)
                std::cout << i.label << ": " << (i.holds ? "ok" : "FAIL") << "\n";
            std::cout << (rep.all_ok ? "all inclusions hold\n" : "chain FAILED\n");
        }
        rc = rep.all_ok ? 0 : 1;
    });

    // invertible FILE --order K [--trials N] [--seed S]
    std::string inv_file, inv_seed = "0";
    int inv_k = 1, inv_trials = 20;
    auto* c_inv = app.add_subcommand("invertible", "search LDer_k for an invertible element");
    c_inv->add_option("file", inv_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_inv->add_option("-k,--order", inv_k, "derivation order")->required();
    c_inv->add_option("--trials", inv_trials, "random candidates to try (default 20)");
    c_inv->add_option("--seed", inv_seed, "RNG seed, or 'random'");
    c_inv->callback([&] {
        LieAlgebra g = resolve_algebra(inv_file);
        bool randomized = false;
        unsigned long long seed = parse_seed(inv_seed, randomized);
        if (randomized) std::cerr << "seed: " << seed << "\n";
        DerivationSpace ds = leibniz_derivation_space(g, inv_k);
        auto hit = find_invertible_element(ds, inv_trials, seed);
        if (json_out) {
            ojson j;
            j["algebra"] = g.name;
            j["order"] = inv_k;
            j["found"] = bool(hit);
            j["matrix"] = hit ? matrix_json(hit->p) : ojson(nullptr);
            j["det"] = hit ? ojson(rat_str(hit->det_value)) : ojson(nullptr);
            j["trials"] = inv_trials;
            j["seed"] = seed;
            emit(j);
        } else if (hit) {
            std::cout << "invertible element of LDer_" << inv_k << "(" << g.name
                      << "), det = " << rat_str(hit->det_value) << "\n"
                      << matrix_str(hit->p);
        } else {
            std::cout << "no invertible element of LDer_" << inv_k << "(" << g.name << ") found ("
                      << inv_trials << " trials, seed " << seed << ")\n";
        }
        rc = hit ? 0 : 1;
    });

    // nilpotent FILE [--trials N] [--seed S]
    std::string nil_file, nil_seed = "0";
    int nil_trials = 20;
    auto* c_nil = app.add_subcommand("nilpotent", "decide nilpotency via invertible elements");
    c_nil->add_option("file", nil_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_nil->add_option("--trials", nil_trials, "random candidates per order (default 20)");
    c_nil->add_option("--seed", nil_seed, "RNG seed, or 'random'");
    c_nil->callback([&] {
        LieAlgebra g = resolve_algebra(nil_file);
        bool randomized = false;
        unsigned long long seed = parse_seed(nil_seed, randomized);
        if (randomized) std::cerr << "seed: " << seed << "\n";
        NilpotencyCertificate cert = nilpotency_by_main_theorem(g, nil_trials, seed);
        if (json_out) {
            std::cout << certificate_to_json(cert);
        } else if (cert.nilpotent) {
            const auto& ev = std::get<InvertibleLDer>(cert.evidence);
            std::cout << "verdict: nilpotent (invertible element of LDer_" << ev.order
                      << ", det = " << rat_str(ev.det_value) << ")\n";
        } else {
            const auto& ev = std::get<NoInvertibleFound>(cert.evidence);
            std::cout << "verdict: not nilpotent (no invertible element through order "
                      << ev.max_order << ", " << ev.trials << " trials, seed " << ev.seed << ")\n";
        }
        rc = cert.nilpotent ? 0 : 1;
    });

    // construct-p FILE
    std::string cp_file;
    auto* c_cp = app.add_subcommand("construct-p", "projection-based invertible Leibniz-derivation");
    c_cp->add_option("file", cp_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_cp->callback([&] {
        LieAlgebra g = resolve_algebra(cp_file);
        SemisimpleLDer s = construct_semisimple_lder(g);
        Rat d = det(s.p);
        if (json_out) {
            ojson j;
            j["algebra"] = g.name;
            j["q"] = s.q;
            j["matrix"] = matrix_json(s.p);
            j["det"] = rat_str(d);
            emit(j);
        } else {
            std::cout << "q = " << s.q << ", det = " << rat_str(d) << "\n" << matrix_str(s.p);
        }
    });

    // witness FILE -k K -l L
    std::string wit_file;
    int wit_k = 2, wit_l = 1;
    auto* c_wit = app.add_subcommand("witness", "strict-inclusion witness for LDer_l < LDer_k");
    c_wit->add_option("file", wit_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_wit->add_option("-k", wit_k, "order the witness lies in")->required();
    c_wit->add_option("-l", wit_l, "order the witness avoids")->required();
    c_wit->callback([&] {
        LieAlgebra g = resolve_algebra(wit_file);
        Matrix w = construct_strict_witness(g, wit_k, wit_l);
        if (json_out) {
            ojson j;
            j["algebra"] = g.name;
            j["k"] = wit_k;
            j["l"] = wit_l;
            j["matrix"] = matrix_json(w);
            emit(j);
        } else {
            std::cout << "witness in LDer_" << wit_k << "(" << g.name << ") \\ LDer_" << wit_l
                      << ":\n"
                      << matrix_str(w);
        }
    });

    // grading FILE --op OPFILE --order K
    std::string gr_file, gr_op;
    int gr_k = 1;
    auto* c_gr = app.add_subcommand("grading", "eigenspace grading induced by an operator");
    c_gr->add_option("file", gr_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_gr->add_option("--op", gr_op, "operator JSON (matrix or construct-p output)")->required();
    c_gr->add_option("-k,--order", gr_k, "derivation order of the operator")->required();
    c_gr->callback([&] {
        LieAlgebra g = resolve_algebra(gr_file);
        Matrix p = matrix_from_file(gr_op, g.n);
        GradingReport rep = grading_check(g, p, gr_k);
        if (json_out) {
            ojson j;
            j["algebra"] = g.name;
            j["order"] = gr_k;
            ojson parts = ojson::array();
            for (const auto& part : rep.decomposition.parts)
                parts.push_back({{"alpha", rat_str(part.value)}, {"dim", part.space.dim()}});
            j["parts"] = std::move(parts);
            j["tuples"] = rep.tuples.size();
            j["ok"] = rep.ok;
            emit(j);
        } else {
            std::cout << "eigenvalues:";
            for (const auto& part : rep.decomposition.parts)
                std::cout << ' ' << rat_str(part.value) << " (dim " << part.space.dim() << ")";
            std::cout << "\nchecked " << rep.tuples.size() << " eigenspace tuples: "
                      << (rep.ok ? "graded\n" : "NOT graded\n");
            if (!rep.ok)
                for (const auto& t : rep.tuples)
                    if (!t.contained) {
                        std::cout << "first failure at alphas";
                        for (const auto& a : t.alphas) std::cout << ' ' << rat_str(a);
                        std::cout << "\n";
                        break;
                    }
        }
        rc = rep.ok ? 0 : 1;
    });

    // star FILE -m M -k K
    std::string st_file, st_m = "1";
    int st_k = 2;
    auto* c_st = app.add_subcommand("star", "solution space of the star identity");
    c_st->add_option("file", st_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_st->add_option("-m", st_m, "scalar m as 'p/q'")->required();
    c_st->add_option("-k,--order", st_k, "bracket length (k >= 2)")->required();
    c_st->callback([&] {
        LieAlgebra g = resolve_algebra(st_file);
        Rat m = parse_rat(st_m);
        StarSystem sys = star_identity_space(g, m, st_k);
        if (json_out) {
            ojson j;
            j["algebra"] = sys.algebra;
            j["m"] = rat_str(sys.m);
            j["k"] = sys.k;
            j["dim"] = sys.space.dim();
            emit(j);
        } else {
            std::cout << "dim star(" << sys.algebra << ", m=" << rat_str(sys.m) << ", k=" << sys.k
                      << ") = " << sys.space.dim() << "\n";
        }
    });

    // radinv FILE --order K
    std::string ri_file;
    int ri_k = 1;
    auto* c_ri = app.add_subcommand("radinv", "radical invariance under LDer_k");
    c_ri->add_option("file", ri_file, "algebra JSON ('-' for stdin) or builtin name")->required();
    c_ri->add_option("-k,--order", ri_k, "derivation order")->required();
    c_ri->callback([&] {
        LieAlgebra g = resolve_algebra(ri_file);
        int dim_rad = radical(g).dim();
        bool ok = radical_invariance_check(g, ri_k);
        if (json_out) {
            emit({{"algebra", g.name},
                  {"order", ri_k},
                  {"dim_radical", dim_rad},
                  {"invariant", ok}});
        } else {
            std::cout << "rad(" << g.name << ") (dim " << dim_rad << ") invariant under LDer_"
                      << ri_k << ": " << (ok ? "yes" : "NO") << "\n";
        }
        rc = ok ? 0 : 1;
    });

    // degenerate FAMILY --order K [--samples LIST]
    std::string dg_file, dg_samples;
    int dg_k = 1;
    auto* c_dg = app.add_subcommand("degenerate", "dimension monotonicity along a family");
    c_dg->add_option("family", dg_file, "family JSON ('-' for stdin)")->required();
    c_dg->add_option("-k,--order", dg_k, "derivation order")->required();
    auto* dg_samples_opt =
        c_dg->add_option("--samples", dg_samples,
                         "comma-separated nonzero t samples (default 1,2,1/3)");
    c_dg->callback([&] {
        ParamLieAlgebra f = resolve_family(dg_file);
        std::vector<Rat> samples =
            dg_samples_opt->count() ? parse_samples(dg_samples) : default_samples();
        MonotonicityReport rep = dimension_monotonicity_check(f, dg_k, samples);
        if (json_out) {
            ojson j;
            j["family"] = f.name;
            j["order"] = rep.order;
            ojson sj = ojson::array();
            for (const auto& s : rep.samples) sj.push_back(rat_str(s));
            j["samples"] = std::move(sj);
            j["generic_dim"] = rep.generic_dim;
            j["limit_dim"] = rep.limit_dim;
            j["monotone"] = rep.monotone;
            j["strict"] = rep.strict;
            emit(j);
        } else {
            std::cout << "dim LDer_" << rep.order << ": generic " << rep.generic_dim << ", limit "
                      << rep.limit_dim << " ("
                      << (rep.monotone ? (rep.strict ? "strictly monotone" : "monotone, equal")
                                       : "NOT monotone")
                      << ")\n";
        }
        rc = rep.monotone ? 0 : 1;
    });

    // catalog list | show NAME | table --max-order K
    auto* c_cat = app.add_subcommand("catalog", "builtin algebra catalog");
    c_cat->require_subcommand(1);
    auto* c_cat_list = c_cat->add_subcommand("list", "names of all builtins");
    c_cat_list->callback([&] {
        if (json_out) {
            emit(ojson(builtin_names()));
        } else {
            for (const auto& n : builtin_names()) std::cout << n << "\n";
        }
    });
    std::string cat_name;
    auto* c_cat_show = c_cat->add_subcommand("show", "structure constants of one builtin");
    c_cat_show->add_option("name", cat_name, "builtin name")->required();
    c_cat_show->callback([&] { std::cout << algebra_to_json(builtin(cat_name).algebra); });
    int cat_k = 2;
    auto* c_cat_table = c_cat->add_subcommand("table", "invariant table across the catalog");
    c_cat_table->add_option("-k,--max-order", cat_k, "largest LDer order column (default 2)");
    c_cat_table->callback([&] {
        std::vector<CatalogEntry> entries;
        for (const auto& n : builtin_names()) entries.push_back(builtin(n));
        auto rows = invariant_table(entries, cat_k);
        if (json_out)
            std::cout << table_to_json_lines(rows);
        else
            std::cout << table_to_csv(rows, cat_k);
    });

    // verify CERTFILE [--algebra FILE]
    std::string vf_cert, vf_algebra;
    auto* c_vf = app.add_subcommand("verify", "re-check an exported certificate from scratch");
    c_vf->add_option("certificate", vf_cert, "certificate JSON ('-' for stdin)")->required();
    c_vf->add_option("--algebra", vf_algebra,
                     "algebra the certificate refers to (default: builtin by name)");
    c_vf->callback([&] {
        NilpotencyCertificate cert = certificate_from_json(read_input(vf_cert));
        LieAlgebra g;
        if (!vf_algebra.empty()) {
            g = resolve_algebra(vf_algebra);
        } else if (is_builtin(cert.algebra)) {
            g = builtin(cert.algebra).algebra;
        } else {
            fail(ErrorKind::UnknownName, "certificate names '" + cert.algebra +
                                             "', which is not a builtin; pass --algebra FILE");
        }
        bool ok = verify_certificate(g, cert);
        if (json_out) {
            emit({{"algebra", cert.algebra},
                  {"verdict", cert.nilpotent ? "nilpotent" : "not_nilpotent"},
                  {"valid", ok}});
        } else {
            std::cout << "certificate for " << cert.algebra << ": "
                      << (ok ? "valid" : "INVALID") << "\n";
        }
        rc = ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        if (json_out) {
            emit({{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}});
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return exit_code_for(e.kind());
    }
    return rc;
}
