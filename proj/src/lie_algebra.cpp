#include "lieder/lie_algebra.hpp"

#include "lieder/error.hpp"

namespace lieder {

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
    for (int k = 0; k < n; ++k) {
        c_at(i, j, k) = v[size_t(k)];
        c_at(j, i, k) = -v[size_t(k)];
    }
}

ValidationReport validate(const LieAlgebra& g) {
    ValidationReport rep;
    int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            bool bad = false;
            for (int k = 0; k < n; ++k)
                if (g.c_at(i, j, k) != -g.c_at(j, i, k)) bad = true;
            if (bad) {
                rep.antisymmetry_ok = false;
                rep.failing_pairs.push_back({i, j});
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec jac = bracket(g, unit_vec(n, i), bracket(g, unit_vec(n, j), unit_vec(n, k)));
                jac = add(jac, bracket(g, unit_vec(n, j), bracket(g, unit_vec(n, k), unit_vec(n, i))));
                jac = add(jac, bracket(g, unit_vec(n, k), bracket(g, unit_vec(n, i), unit_vec(n, j))));
                if (!is_zero_vec(jac)) {
                    rep.jacobi_ok = false;
                    rep.failing_triples.push_back({i, j, k});
                }
            }
    return rep;
}

void require_valid(const LieAlgebra& g) {
    ValidationReport rep = validate(g);
    if (rep.ok()) return;
    std::string what;
    if (!rep.antisymmetry_ok) {
        auto [i, j] = rep.failing_pairs.front();
        what = "antisymmetry fails on pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    } else {
        auto [i, j, k] = rep.failing_triples.front();
        what = "Jacobi fails on triple (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
               std::to_string(k + 1) + ")";
    }
    fail(ErrorKind::ValidationFailed, g.name.empty() ? what : g.name + ": " + what);
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
    if (int(x.size()) != g.n || int(y.size()) != g.n)
        fail(ErrorKind::PreconditionViolated, "bracket operand length mismatch");
    Vec out(size_t(g.n), Rat(0));
    for (int i = 0; i < g.n; ++i) {
        if (x[size_t(i)] == 0) continue;
        for (int j = 0; j < g.n; ++j) {
            if (y[size_t(j)] == 0) continue;
            Rat f = x[size_t(i)] * y[size_t(j)];
            for (int k = 0; k < g.n; ++k) {
                const Rat& cv = g.c_at(i, j, k);
                if (cv != 0) out[size_t(k)] += f * cv;
            }
        }
    }
    return out;
}

Vec nested_bracket(const LieAlgebra& g, const std::vector<Vec>& xs) {
    if (xs.size() < 2)
        fail(ErrorKind::PreconditionViolated, "nested_bracket needs at least two arguments");
    Vec acc = xs.back();
    for (size_t i = xs.size() - 1; i-- > 0;) acc = bracket(g, xs[i], acc);
    return acc;
}

Matrix ad(const LieAlgebra& g, const Vec& x) {
    if (int(x.size()) != g.n) fail(ErrorKind::PreconditionViolated, "ad operand length mismatch");
    Matrix m(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        if (x[size_t(i)] == 0) continue;
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k) {
                const Rat& cv = g.c_at(i, j, k);
                if (cv != 0) m.at(k, j) += x[size_t(i)] * cv;
            }
    }
    return m;
}

Matrix ad_basis(const LieAlgebra& g, int i) {
    Matrix m(g.n, g.n);
    for (int j = 0; j < g.n; ++j)
        for (int k = 0; k < g.n; ++k) {
            const Rat& cv = g.c_at(i, j, k);
            if (cv != 0) m.at(k, j) = cv;
        }
    return m;
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    RrefBuilder out(g.n);
    for (int r = 0; r < a.dim(); ++r) {
        Vec x(size_t(g.n), Rat(0));
        for (int c = 0; c < g.n; ++c) x[size_t(c)] = a.basis.at(r, c);
        for (int s = 0; s < b.dim(); ++s) {
            Vec y(size_t(g.n), Rat(0));
            for (int c = 0; c < g.n; ++c) y[size_t(c)] = b.basis.at(s, c);
            out.add(bracket(g, x, y));
        }
    }
    return out.to_subspace();
}

SeriesChain lower_central_series(const LieAlgebra& g) {
    SeriesChain chain{SeriesKind::LowerCentral, {full_space(g.n)}};
    for (;;) {
        Subspace next = subspace_bracket(g, full_space(g.n), chain.terms.back());
        if (next == chain.terms.back()) break;
        chain.terms.push_back(std::move(next));
    }
    return chain;
}

SeriesChain derived_series(const LieAlgebra& g) {
    SeriesChain chain{SeriesKind::Derived, {full_space(g.n)}};
    for (;;) {
        Subspace next = subspace_bracket(g, chain.terms.back(), chain.terms.back());
        if (next == chain.terms.back()) break;
        chain.terms.push_back(std::move(next));
    }
    return chain;
}

SeriesChain upper_central_series(const LieAlgebra& g) {
    SeriesChain chain{SeriesKind::UpperCentral, {zero_subspace(g.n)}};
    for (;;) {
        // x in next term iff [x, e_j] lies in the current term for all j;
        // stack the residual-composed ad matrices and take the kernel.
        const Subspace& cur = chain.terms.back();
        RrefBuilder member(g.n);
        member.add_rows(cur.basis);
        Matrix sys(g.n * g.n, g.n);
        for (int j = 0; j < g.n; ++j) {
            Matrix adj = ad_basis(g, j);
            for (int col = 0; col < g.n; ++col) {
                Vec img(size_t(g.n), Rat(0));
                for (int r = 0; r < g.n; ++r) img[size_t(r)] = -adj.at(r, col); // [x, e_j] = -ad(e_j) x
                Vec res = member.residual(img);
                for (int r = 0; r < g.n; ++r) sys.at(j * g.n + r, col) = res[size_t(r)];
            }
        }
        Subspace next = nullspace(sys);
        if (next == cur) break;
        chain.terms.push_back(std::move(next));
    }
    return chain;
}

SeriesChain k_derived_series(const LieAlgebra& g, const Subspace& s, int k) {
    if (k < 1) fail(ErrorKind::PreconditionViolated, "k_derived_series needs k >= 1");
    if (s.ambient != g.n)
        fail(ErrorKind::PreconditionViolated, "k_derived_series subspace has wrong ambient");
    SeriesChain chain{SeriesKind::KDerived, {s}};
    for (int guard = 0; guard <= 4 * g.n + 4; ++guard) {
        // span of nested (k+1)-brackets of tuples from S = iterated bracket
        // span [S, [S, ... [S, S]]] by right-linearity of the nesting.
        const Subspace& cur = chain.terms.back();
        Subspace acc = cur;
        for (int step = 0; step < k; ++step) acc = subspace_bracket(g, cur, acc);
        if (acc == cur) return chain;
        chain.terms.push_back(std::move(acc));
    }
    fail(ErrorKind::InternalInconsistency, "k-derived sequence does not stabilize");
}

Subspace center(const LieAlgebra& g) {
    SeriesChain ucs = upper_central_series(g);
    return ucs.terms.size() > 1 ? ucs.terms[1] : zero_subspace(g.n);
}

std::optional<int> nilpotency_class_opt(const LieAlgebra& g) {
    SeriesChain lcs = lower_central_series(g);
    if (lcs.terms.back().dim() != 0) return std::nullopt;
    return int(lcs.terms.size()) - 1; // terms = (γ_1, ..., γ_c, 0)
}

int nilpotency_class(const LieAlgebra& g) {
    auto c = nilpotency_class_opt(g);
    if (!c) fail(ErrorKind::NotNilpotent, g.name.empty() ? "algebra is not nilpotent"
                                                         : g.name + " is not nilpotent");
    return *c;
}

Matrix killing_form(const LieAlgebra& g) {
    std::vector<Matrix> ads;
    ads.reserve(size_t(g.n));
    for (int i = 0; i < g.n; ++i) ads.push_back(ad_basis(g, i));
    Matrix k(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i; j < g.n; ++j) {
            Rat t = trace(ads[size_t(i)] * ads[size_t(j)]);
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

Subspace radical(const LieAlgebra& g) {
    Matrix k = killing_form(g);
    Subspace derived = subspace_bracket(g, full_space(g.n), full_space(g.n));
    // x in rad iff K(x, y) = 0 for y in [g,g]: rows B*K with B = basis of [g,g]
    Matrix sys(derived.dim(), g.n);
    for (int r = 0; r < derived.dim(); ++r)
        for (int c = 0; c < g.n; ++c) {
            Rat acc;
            for (int m = 0; m < g.n; ++m)
                if (derived.basis.at(r, m) != 0 && k.at(m, c) != 0)
                    acc += derived.basis.at(r, m) * k.at(m, c);
            sys.at(r, c) = acc;
        }
    Subspace rad = nullspace(sys);
    // solvability re-check of the candidate
    Subspace term = rad;
    for (;;) {
        Subspace next = subspace_bracket(g, term, term);
        if (next == term) break;
        term = std::move(next);
    }
    if (term.dim() != 0)
        fail(ErrorKind::InternalInconsistency, "computed radical is not solvable");
    return rad;
}

StructuralPredicates structural_predicates(const LieAlgebra& g) {
    StructuralPredicates p;
    p.is_abelian = true;
    for (const Rat& x : g.c)
        if (x != 0) { p.is_abelian = false; break; }
    p.is_nilpotent = nilpotency_class_opt(g).has_value();
    p.is_solvable = derived_series(g).terms.back().dim() == 0;
    Subspace derived = subspace_bracket(g, full_space(g.n), full_space(g.n));
    p.is_perfect = derived.dim() == g.n;
    p.is_semisimple = det(killing_form(g)) != 0;
    Subspace z = center(g);
    p.is_centerless = z.dim() == 0;
    p.is_reductive = radical(g) == z;
    return p;
}

} // namespace lieder
