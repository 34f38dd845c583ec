#include "lieder/catalog.hpp"
#include "lieder/error.hpp"

#include "lieder/nilpotency.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lieder {

namespace {

void brk(LieAlgebra& g, int i, int j, std::initializer_list<std::pair<int, Rat>> terms) {
    Vec v(size_t(g.n), Rat(0));
    for (const auto& [k, cv] : terms) v[size_t(k) - 1] = cv;
    g.set_bracket(i - 1, j - 1, v);
}

LieAlgebra make_abelian(int n) { return LieAlgebra(n, "abelian_" + std::to_string(n)); }

LieAlgebra make_sl2_block(int n, const std::string& name, int off = 0) {
    // basis h, e, f at offsets off..off+2
    LieAlgebra g(n, name);
    brk(g, off + 1, off + 2, {{off + 2, 2}});
    brk(g, off + 1, off + 3, {{off + 3, -2}});
    brk(g, off + 2, off + 3, {{off + 1, 1}});
    return g;
}

StructuralPredicates tags_nilpotent_nonabelian() {
    StructuralPredicates t;
    t.is_nilpotent = true;
    t.is_solvable = true;
    return t;
}

CatalogEntry make_builtin(const std::string& name) {
    CatalogEntry e;
    if (name.rfind("abelian_", 0) == 0) {
        int n = std::stoi(name.substr(8));
        e.algebra = make_abelian(n);
        e.algebra.reductive_split = {0, n};
        e.tags.is_abelian = e.tags.is_nilpotent = e.tags.is_solvable = e.tags.is_reductive = true;
        e.expected.cls = 1;
        e.expected.dim_radical = n;
        e.expected.dim_lder = {{1, n * n}, {2, n * n}};
        e.expected.min_invertible_order = 1;
        return e;
    }
    if (name == "heisenberg_3") {
        LieAlgebra g(3, name);
        brk(g, 1, 2, {{3, 1}});
        e.algebra = std::move(g);
        e.tags = tags_nilpotent_nonabelian();
        e.expected.cls = 2;
        e.expected.dim_radical = 3;
        e.expected.dim_lder = {{1, 6}, {2, 9}};
        e.expected.min_invertible_order = 1;
        return e;
    }
    if (name == "heisenberg_5") {
        LieAlgebra g(5, name);
        brk(g, 1, 2, {{5, 1}});
        brk(g, 3, 4, {{5, 1}});
        e.algebra = std::move(g);
        e.tags = tags_nilpotent_nonabelian();
        e.expected.cls = 2;
        e.expected.dim_radical = 5;
        e.expected.dim_lder = {{1, 15}, {2, 25}};
        e.expected.min_invertible_order = 1;
        return e;
    }
    if (name == "filiform_n4") {
        LieAlgebra g(4, name);
        brk(g, 1, 2, {{3, 1}});
        brk(g, 1, 3, {{4, 1}});
        e.algebra = std::move(g);
        e.tags = tags_nilpotent_nonabelian();
        e.expected.cls = 3;
        e.expected.dim_radical = 4;
        e.expected.dim_lder = {{1, 7}, {2, 9}, {3, 16}};
        e.expected.min_invertible_order = 1;
        return e;
    }
    if (name == "sl2") {
        e.algebra = make_sl2_block(3, name);
        e.algebra.reductive_split = {3, 0};
        e.tags.is_perfect = e.tags.is_semisimple = e.tags.is_reductive = e.tags.is_centerless =
            true;
        e.expected.dim_radical = 0;
        e.expected.dim_lder = {{1, 3}, {2, 3}, {3, 3}};
        return e;
    }
    if (name == "gl2") {
        e.algebra = make_sl2_block(4, name);
        e.algebra.reductive_split = {3, 1};
        e.tags.is_reductive = true;
        e.expected.dim_radical = 1;
        e.expected.dim_lder = {{1, 4}, {2, 4}};
        return e;
    }
    if (name == "aff1") {
        LieAlgebra g(2, name);
        brk(g, 1, 2, {{2, 1}});
        e.algebra = std::move(g);
        e.tags.is_solvable = e.tags.is_centerless = true;
        e.expected.dim_radical = 2;
        e.expected.dim_lder = {{1, 2}, {2, 2}, {3, 2}, {4, 2}};
        return e;
    }
    if (name.rfind("sl2_plus_abelian_", 0) == 0) {
        int m = std::stoi(name.substr(17));
        e.algebra = make_sl2_block(3 + m, name);
        e.algebra.reductive_split = {3, m};
        e.tags.is_reductive = true;
        e.expected.dim_radical = m;
        e.expected.dim_lder = {{1, 3 + m * m}, {2, 3 + m * m}};
        return e;
    }
    if (name == "sl2_sl2") {
        LieAlgebra g = make_sl2_block(6, name);
        LieAlgebra second = make_sl2_block(6, name, 3);
        for (size_t i = 0; i < g.c.size(); ++i)
            if (second.c[i] != 0) g.c[i] = second.c[i];
        g.reductive_split = {6, 0};
        e.algebra = std::move(g);
        e.tags.is_perfect = e.tags.is_semisimple = e.tags.is_reductive = e.tags.is_centerless =
            true;
        e.expected.dim_radical = 0;
        e.expected.dim_lder = {{1, 6}, {2, 6}, {3, 6}};
        return e;
    }
    if (name == "dixmier_lister_8") {
        LieAlgebra g(8, name);
        brk(g, 1, 2, {{5, 1}});
        brk(g, 1, 3, {{6, 1}});
        brk(g, 1, 4, {{7, 1}});
        brk(g, 1, 5, {{8, -1}});
        brk(g, 2, 3, {{8, 1}});
        brk(g, 2, 4, {{6, 1}});
        brk(g, 2, 6, {{7, -1}});
        brk(g, 3, 4, {{5, -1}});
        brk(g, 3, 5, {{7, -1}});
        brk(g, 4, 6, {{8, -1}});
        e.algebra = std::move(g);
        e.tags = tags_nilpotent_nonabelian();
        e.expected.cls = 3;
        e.expected.dim_radical = 8;
        e.expected.dim_lder = {{1, 12}, {2, 28}, {3, 64}};
        e.expected.min_invertible_order = 2;
        return e;
    }
    fail(ErrorKind::UnknownName, "no builtin algebra named '" + name + "'");
}

bool parses_as(const std::string& name, const std::string& prefix, int lo, int hi) {
    if (name.rfind(prefix, 0) != 0) return false;
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.size() > 1 || tail[0] < '0' + lo || tail[0] > '0' + hi) return false;
    return true;
}

} // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 6; ++n) names.push_back("abelian_" + std::to_string(n));
    names.insert(names.end(), {"heisenberg_3", "heisenberg_5", "filiform_n4", "sl2", "gl2",
                               "aff1", "sl2_plus_abelian_1", "sl2_plus_abelian_2", "sl2_sl2",
                               "dixmier_lister_8"});
    return names;
}

bool is_builtin(const std::string& name) {
    if (parses_as(name, "abelian_", 1, 6)) return true;
    if (parses_as(name, "sl2_plus_abelian_", 1, 5)) return true;
    for (const char* fixed : {"heisenberg_3", "heisenberg_5", "filiform_n4", "sl2", "gl2",
                              "aff1", "sl2_sl2", "dixmier_lister_8"})
        if (name == fixed) return true;
    return false;
}

CatalogEntry builtin(const std::string& name) {
    if (!is_builtin(name)) fail(ErrorKind::UnknownName, "no builtin algebra named '" + name + "'");
    CatalogEntry e = make_builtin(name);
    require_valid(e.algebra);
    return e;
}

namespace {

std::string slurp(const std::string& path) {
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

} // namespace

std::variant<LieAlgebra, ParamLieAlgebra> parse_algebra_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("algebra JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::ParseError, "algebra JSON: top level must be an object");
    if (!j.contains("name") || !j["name"].is_string())
        fail(ErrorKind::ParseError, "algebra JSON: missing string field 'name'");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        fail(ErrorKind::ParseError, "algebra JSON: missing integer field 'dim'");
    const std::string name = j["name"].get<std::string>();
    const int n = j["dim"].get<int>();
    if (n < 1 || n > 64) fail(ErrorKind::ParseError, "algebra JSON: 'dim' out of range 1..64");

    ParamLieAlgebra f(n, name);
    bool parametric = false;
    std::vector<std::vector<bool>> seen(size_t(n), std::vector<bool>(size_t(n), false));

    if (j.contains("brackets")) {
        if (!j["brackets"].is_array())
            fail(ErrorKind::ParseError, "algebra JSON: 'brackets' must be an array");
        for (const auto& b : j["brackets"]) {
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("c") ||
                !b["i"].is_number_integer() || !b["j"].is_number_integer() || !b["c"].is_object())
                fail(ErrorKind::ParseError,
                     "algebra JSON: each bracket needs integer 'i', 'j' and object 'c'");
            int i = b["i"].get<int>(), jj = b["j"].get<int>();
            if (i < 1 || i > n || jj < 1 || jj > n)
                fail(ErrorKind::ParseError, "algebra JSON: bracket index out of range");
            if (i >= jj)
                fail(ErrorKind::ValidationFailed,
                     "bracket entry (" + std::to_string(i) + "," + std::to_string(jj) +
                         "): only i < j entries are allowed (antisymmetry is implied)");
            if (seen[size_t(i) - 1][size_t(jj) - 1])
                fail(ErrorKind::ParseError, "algebra JSON: duplicate bracket pair (" +
                                                std::to_string(i) + "," + std::to_string(jj) + ")");
            seen[size_t(i) - 1][size_t(jj) - 1] = true;
            for (const auto& [kstr, val] : b["c"].items()) {
                int k = 0;
                try {
                    size_t pos = 0;
                    k = std::stoi(kstr, &pos);
                    if (pos != kstr.size()) throw std::invalid_argument(kstr);
                } catch (const std::exception&) {
                    fail(ErrorKind::ParseError, "algebra JSON: bad component index '" + kstr + "'");
                }
                if (k < 1 || k > n)
                    fail(ErrorKind::ParseError, "algebra JSON: component index out of range");
                if (!val.is_string())
                    fail(ErrorKind::ParseError, "algebra JSON: coefficients must be strings");
                UniPoly p = parse_poly(val.get<std::string>());
                if (p.degree() > 0) parametric = true;
                f.c_at(i - 1, jj - 1, k - 1) = p;
                f.c_at(jj - 1, i - 1, k - 1) = UniPoly{} - p;
            }
        }
    }

    if (parametric) {
        require_valid_family(f);
        return f;
    }
    LieAlgebra g(n, name);
    for (size_t idx = 0; idx < f.c.size(); ++idx) g.c[idx] = f.c[idx].coeff(0);
    require_valid(g);
    return g;
}

std::variant<LieAlgebra, ParamLieAlgebra> load_algebra_file(const std::string& path) {
    return parse_algebra_json(slurp(path));
}

LieAlgebra load_algebra(const std::string& path) {
    auto v = load_algebra_file(path);
    if (auto* g = std::get_if<LieAlgebra>(&v)) return std::move(*g);
    fail(ErrorKind::ValidationFailed,
         "'" + path + "' is a parametric family; evaluate it at a sample first");
}

ParamLieAlgebra load_family(const std::string& path) {
    auto v = load_algebra_file(path);
    if (auto* f = std::get_if<ParamLieAlgebra>(&v)) return std::move(*f);
    const LieAlgebra& g = std::get<LieAlgebra>(v);
    ParamLieAlgebra f(g.n, g.name);
    for (size_t idx = 0; idx < g.c.size(); ++idx)
        if (g.c[idx] != 0) f.c[idx] = UniPoly::constant(g.c[idx]);
    return f;
}

namespace {

template <class Coeff, class Str>
nlohmann::ordered_json tensor_json(int n, const std::string& name, const Coeff& at, Str str) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["dim"] = n;
    nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj) {
            nlohmann::ordered_json comps;
            for (int k = 0; k < n; ++k)
                if (auto s = str(at(i, jj, k))) comps[std::to_string(k + 1)] = *s;
            if (!comps.empty()) {
                nlohmann::ordered_json b;
                b["i"] = i + 1;
                b["j"] = jj + 1;
                b["c"] = std::move(comps);
                brackets.push_back(std::move(b));
            }
        }
    j["brackets"] = std::move(brackets);
    return j;
}

} // namespace

std::string algebra_to_json(const LieAlgebra& g, int indent) {
    auto j = tensor_json(
        g.n, g.name, [&](int i, int jj, int k) -> const Rat& { return g.c_at(i, jj, k); },
        [](const Rat& x) -> std::optional<std::string> {
            if (x == 0) return std::nullopt;
            return rat_str(x);
        });
    return j.dump(indent) + "\n";
}

std::string family_to_json(const ParamLieAlgebra& f, int indent) {
    auto j = tensor_json(
        f.n, f.name, [&](int i, int jj, int k) -> const UniPoly& { return f.c_at(i, jj, k); },
        [](const UniPoly& p) -> std::optional<std::string> {
            if (p.is_zero()) return std::nullopt;
            return poly_str(p);
        });
    return j.dump(indent) + "\n";
}

void save_algebra(const std::string& path, const LieAlgebra& g) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ParseError, "cannot open '" + path + "' for writing");
    out << algebra_to_json(g);
    if (!out) fail(ErrorKind::ParseError, "short write to '" + path + "'");
}

std::vector<InvariantRow> invariant_table(const std::vector<CatalogEntry>& entries, int k_max,
                                          const SolverOptions& opt) {
    if (k_max < 1) fail(ErrorKind::PreconditionViolated, "k_max must be >= 1");
    std::vector<InvariantRow> rows;
    rows.reserve(entries.size());
    for (const CatalogEntry& e : entries) {
        InvariantRow row;
        row.name = e.algebra.name;
        row.n = e.algebra.n;
        row.cls = nilpotency_class_opt(e.algebra);
        row.dim_inn = inner_derivations(e.algebra).dim();
        for (int k = 1; k <= k_max; ++k)
            row.dim_lder.push_back(leibniz_derivation_space(e.algebra, k, opt).space.dim());
        if (row.cls) row.min_invertible_order = minimal_invertible_order(e.algebra).order;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string table_to_csv(const std::vector<InvariantRow>& rows, int k_max) {
    std::ostringstream os;
    os << "name,n,class,dim_inn,dim_der";
    for (int k = 2; k <= k_max; ++k) os << ",dim_lder_" << k;
    os << ",min_invertible_order\n";
    for (const InvariantRow& r : rows) {
        os << csv_field(r.name) << ',' << r.n << ',';
        if (r.cls)
            os << *r.cls;
        else
            os << "NotNilpotent";
        os << ',' << r.dim_inn;
        for (int d : r.dim_lder) os << ',' << d;
        os << ',';
        if (r.min_invertible_order)
            os << *r.min_invertible_order;
        else
            os << '-';
        os << '\n';
    }
    return os.str();
}

std::string table_to_json_lines(const std::vector<InvariantRow>& rows) {
    std::ostringstream os;
    for (const InvariantRow& r : rows) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["n"] = r.n;
        j["class"] = r.cls ? nlohmann::ordered_json(*r.cls) : nlohmann::ordered_json(nullptr);
        j["dim_inn"] = r.dim_inn;
        j["dim_lder"] = r.dim_lder;
        j["min_invertible_order"] = r.min_invertible_order
                                        ? nlohmann::ordered_json(*r.min_invertible_order)
                                        : nlohmann::ordered_json(nullptr);
        os << j.dump() << '\n';
    }
    return os.str();
}

} // namespace lieder
