#include "lieder/degeneration.hpp"
#include "lieder/error.hpp"

#include <sstream>

namespace lieder {

void require_valid_family(const ParamLieAlgebra& f) {
    const int n = f.n;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                bool bad = i == j ? !f.c_at(i, j, k).is_zero()
                                  : !(f.c_at(i, j, k) + f.c_at(j, i, k)).is_zero();
                if (bad) {
                    std::ostringstream os;
                    os << "family antisymmetry fails at (" << i + 1 << "," << j + 1 << ")";
                    fail(ErrorKind::ValidationFailed, os.str());
                }
            }
    // sum over cyclic rotations of [[ei,ej],ek] must vanish identically
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    UniPoly total;
                    for (int s = 0; s < n; ++s) {
                        total = total + f.c_at(i, j, s) * f.c_at(s, k, m);
                        total = total + f.c_at(j, k, s) * f.c_at(s, i, m);
                        total = total + f.c_at(k, i, s) * f.c_at(s, j, m);
                    }
                    if (!total.is_zero()) {
                        std::ostringstream os;
                        os << "family Jacobi identity fails at (" << i + 1 << "," << j + 1 << ","
                           << k + 1 << ")";
                        fail(ErrorKind::ValidationFailed, os.str());
                    }
                }
}

LieAlgebra evaluate_family(const ParamLieAlgebra& f, const Rat& eps) {
    LieAlgebra g(f.n, f.name + "@t=" + rat_str(eps));
    for (size_t idx = 0; idx < f.c.size(); ++idx) g.c[idx] = eval(f.c[idx], eps);
    require_valid(g);
    return g;
}

MonotonicityReport dimension_monotonicity_check(const ParamLieAlgebra& f, int k,
                                                const std::vector<Rat>& samples,
                                                const SolverOptions& opt) {
    if (samples.empty()) fail(ErrorKind::PreconditionViolated, "need at least one sample");
    for (const Rat& s : samples)
        if (s == 0) fail(ErrorKind::PreconditionViolated, "samples must be nonzero");
    require_valid_family(f);

    MonotonicityReport rep;
    rep.order = k;
    rep.samples = samples;

    int generic = -1;
    for (const Rat& s : samples) {
        int d = leibniz_derivation_space(evaluate_family(f, s), k, opt).space.dim();
        if (generic < 0) generic = d;
        if (d != generic) {
            std::ostringstream os;
            os << "dim LDer_" << k << " is " << generic << " at t=" << rat_str(samples[0])
               << " but " << d << " at t=" << rat_str(s) << "; pick samples off special fibers";
            fail(ErrorKind::GenericDimUnstable, os.str());
        }
    }
    rep.generic_dim = generic;
    rep.limit_dim = leibniz_derivation_space(evaluate_family(f, Rat(0)), k, opt).space.dim();
    rep.monotone = rep.generic_dim <= rep.limit_dim;
    rep.strict = rep.generic_dim < rep.limit_dim;
    return rep;
}

std::vector<Rat> default_samples() { return {Rat(1), Rat(2), rat(1, 3)}; }

} // namespace lieder
