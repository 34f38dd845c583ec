#pragma once

#include "lieder/degeneration.hpp"

#include <map>
#include <variant>

namespace lieder {

// Recorded invariants; when present, tests require recomputation to match.
struct ExpectedInvariants {
    std::optional<int> cls; // nilpotency class; nullopt when not nilpotent
    std::optional<int> dim_radical;
    std::map<int, int> dim_lder; // order -> dim
    std::optional<int> min_invertible_order;
};

struct CatalogEntry {
    LieAlgebra algebra;
    StructuralPredicates tags;
    ExpectedInvariants expected;
};

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
CatalogEntry builtin(const std::string& name); // UnknownName

// Algebra file format: {"name": str, "dim": n, "brackets": [{"i","j","c":{"k":
// coeff}}]} with 1-based indices and only i < j entries; coefficients are
// "p/q" strings, or polynomials in t for parametric families.
std::variant<LieAlgebra, ParamLieAlgebra> parse_algebra_json(const std::string& text);
std::variant<LieAlgebra, ParamLieAlgebra> load_algebra_file(const std::string& path);

// Loads a plain algebra; a parametric file is rejected (ValidationFailed).
LieAlgebra load_algebra(const std::string& path);
// Loads a family; a constant file is promoted to a constant family.
ParamLieAlgebra load_family(const std::string& path);

std::string algebra_to_json(const LieAlgebra& g, int indent = 2);
std::string family_to_json(const ParamLieAlgebra& f, int indent = 2);
void save_algebra(const std::string& path, const LieAlgebra& g);

struct InvariantRow {
    std::string name;
    int n = 0;
    std::optional<int> cls;
    int dim_inn = 0;
    std::vector<int> dim_lder;            // orders 1..k_max
    std::optional<int> min_invertible_order;
};

std::vector<InvariantRow> invariant_table(const std::vector<CatalogEntry>& entries, int k_max,
                                          const SolverOptions& opt = {});

std::string table_to_csv(const std::vector<InvariantRow>& rows, int k_max);
std::string table_to_json_lines(const std::vector<InvariantRow>& rows);

} // namespace lieder
