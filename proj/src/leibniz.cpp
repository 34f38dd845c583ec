#include "lieder/leibniz.hpp"
#include "lieder/error.hpp"

#include "tuple_system.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

namespace lieder {

unsigned long long tuple_cap_default() {
    if (const char* env = std::getenv("LIEDER_TUPLE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ull << 21;
}

unsigned long long effective_tuple_cap(const SolverOptions& opt) {
    return opt.tuple_cap ? opt.tuple_cap : tuple_cap_default();
}

void check_tuple_cap(int n, int k, unsigned long long cap) {
    unsigned long long count = 1;
    bool over = false;
    for (int i = 0; i <= k && !over; ++i) {
        if (n > 0 && count > cap / (unsigned long long)n)
            over = true;
        else
            count *= (unsigned long long)n;
    }
    if (over || count > cap) {
        std::ostringstream os;
        os << "tuple count " << n << "^" << (k + 1) << " exceeds cap " << cap
           << " (raise LIEDER_TUPLE_CAP or lower the order)";
        fail(ErrorKind::CapExceeded, os.str());
    }
}

Subspace inner_derivations(const LieAlgebra& g) {
    RrefBuilder b(g.n * g.n);
    for (int i = 0; i < g.n; ++i) b.add(vectorize(ad_basis(g, i)));
    return b.to_subspace();
}

namespace {

void require_endo(const LieAlgebra& g, const Matrix& p) {
    if (p.rows != g.n || p.cols != g.n)
        fail(ErrorKind::PreconditionViolated, "endomorphism must be n x n");
}

} // namespace

std::vector<bool> are_leibniz_derivations(const LieAlgebra& g, const std::vector<Matrix>& ps,
                                          int k, unsigned long long tuple_cap) {
    if (k < 1) fail(ErrorKind::PreconditionViolated, "order k must be >= 1");
    for (const Matrix& p : ps) require_endo(g, p);
    check_tuple_cap(g.n, k, tuple_cap ? tuple_cap : tuple_cap_default());

    const int n = g.n;
    const size_t nc = ps.size();
    detail::AdTable ads(g);

    // pcol[c][i] = P_c e_i
    std::vector<std::vector<Vec>> pcol(nc);
    for (size_t c = 0; c < nc; ++c) {
        pcol[c].assign(size_t(n), Vec(size_t(n)));
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r) pcol[c][size_t(i)][size_t(r)] = ps[c].at(r, i);
    }

    std::vector<char> ok(nc, 1);
    size_t alive = nc;

    // Suffix walk: level d holds V = nested suffix bracket and, per candidate,
    // D = the same bracket with P applied at one slot (summed over slots).
    // Extending left by e_i: V' = [e_i, V], D' = [e_i, D] + [P e_i, V].
    std::vector<Vec> vbuf(size_t(k) + 1, zero_vec(n));
    std::vector<std::vector<Vec>> dbuf(size_t(k) + 1, std::vector<Vec>(nc, Vec(size_t(n))));

    std::function<void(int)> rec = [&](int depth) {
        if (alive == 0) return;
        if (depth == k) {
            for (size_t c = 0; c < nc; ++c) {
                if (!ok[c]) continue;
                if (lieder::apply(ps[c], vbuf[size_t(depth)]) != dbuf[size_t(depth)][c]) {
                    ok[c] = 0;
                    --alive;
                }
            }
            return;
        }
        for (int i = 0; i < n; ++i) {
            bool vnz = ads.bracket_into(i, vbuf[size_t(depth)], vbuf[size_t(depth) + 1]);
            bool dnz = false;
            for (size_t c = 0; c < nc; ++c) {
                Vec& d = dbuf[size_t(depth) + 1][c];
                for (Rat& x : d) x = 0;
                if (!ok[c]) continue;
                ads.bracket_acc(i, dbuf[size_t(depth)][c], d);
                ads.xbracket_acc(pcol[c][size_t(i)], vbuf[size_t(depth)], d);
                if (!dnz)
                    for (const Rat& x : d)
                        if (x != 0) { dnz = true; break; }
            }
            if (vnz || dnz) rec(depth + 1);
            if (alive == 0) return;
        }
    };

    for (int i = 0; i < n && alive > 0; ++i) {
        for (int r = 0; r < n; ++r) vbuf[0][size_t(r)] = (r == i) ? 1 : 0;
        for (size_t c = 0; c < nc; ++c) dbuf[0][c] = pcol[c][size_t(i)];
        rec(0);
    }

    std::vector<bool> out(nc);
    for (size_t c = 0; c < nc; ++c) out[c] = ok[c] != 0;
    return out;
}

bool is_leibniz_derivation(const LieAlgebra& g, const Matrix& p, int k,
                           unsigned long long tuple_cap) {
    return are_leibniz_derivations(g, {p}, k, tuple_cap)[0];
}

bool is_leibniz_automorphism(const LieAlgebra& g, const Matrix& a, int k,
                             unsigned long long tuple_cap) {
    if (k < 1) fail(ErrorKind::PreconditionViolated, "order k must be >= 1");
    require_endo(g, a);
    check_tuple_cap(g.n, k, tuple_cap ? tuple_cap : tuple_cap_default());
    if (det(a) == 0) return false;

    const int n = g.n;
    detail::AdTable ads(g);
    std::vector<Vec> acol(size_t(n), zero_vec(n));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) acol[size_t(i)][size_t(r)] = a.at(r, i);

    // W = nested suffix, AW = same bracket of the A-images.
    std::vector<Vec> wbuf(size_t(k) + 1, zero_vec(n));
    std::vector<Vec> awbuf(size_t(k) + 1, zero_vec(n));
    bool good = true;

    std::function<void(int)> rec = [&](int depth) {
        if (!good) return;
        if (depth == k) {
            if (lieder::apply(a, wbuf[size_t(depth)]) != awbuf[size_t(depth)]) good = false;
            return;
        }
        for (int i = 0; i < n && good; ++i) {
            bool wnz = ads.bracket_into(i, wbuf[size_t(depth)], wbuf[size_t(depth) + 1]);
            Vec& aw = awbuf[size_t(depth) + 1];
            for (Rat& x : aw) x = 0;
            ads.xbracket_acc(acol[size_t(i)], awbuf[size_t(depth)], aw);
            bool awnz = false;
            for (const Rat& x : aw)
                if (x != 0) { awnz = true; break; }
            if (wnz || awnz) rec(depth + 1);
        }
    };

    for (int i = 0; i < n && good; ++i) {
        for (int r = 0; r < n; ++r) wbuf[0][size_t(r)] = (r == i) ? 1 : 0;
        awbuf[0] = acol[size_t(i)];
        rec(0);
    }
    return good;
}

ChainReport verify_chain(const LieAlgebra& g, int k_max, const SolverOptions& opt) {
    if (k_max < 1) fail(ErrorKind::PreconditionViolated, "k_max must be >= 1");
    ChainReport rep;
    rep.k_max = k_max;

    Subspace inn = inner_derivations(g);
    rep.dim_inn = inn.dim();
    Subspace gl = full_space(g.n * g.n);

    std::vector<Subspace> lder;
    lder.reserve(size_t(k_max));
    for (int k = 1; k <= k_max; ++k) {
        lder.push_back(leibniz_derivation_space(g, k, opt).space);
        rep.dims_lder.push_back(lder.back().dim());
    }

    auto record = [&](std::string label, bool holds) {
        rep.inclusions.push_back({std::move(label), holds});
    };
    record("Inn <= Der", contains(lder[0], inn));
    record("Der <= gl", contains(gl, lder[0]));
    for (int k = 2; k <= k_max; ++k) {
        std::string tag = "LDer_" + std::to_string(k);
        record("Der <= " + tag, contains(lder[size_t(k) - 1], lder[0]));
        record(tag + " <= gl", contains(gl, lder[size_t(k) - 1]));
    }
    rep.all_ok = true;
    for (const auto& inc : rep.inclusions) rep.all_ok = rep.all_ok && inc.holds;
    return rep;
}

bool verify_divisibility_inclusion(const LieAlgebra& g, int s, int t, const SolverOptions& opt) {
    if (s < 1 || t < 1) fail(ErrorKind::PreconditionViolated, "orders must be >= 1");
    if (t % s != 0)
        fail(ErrorKind::DivisibilityViolated,
             std::to_string(s) + " does not divide " + std::to_string(t));
    Subspace low = leibniz_derivation_space(g, s, opt).space;
    Subspace high = leibniz_derivation_space(g, t, opt).space;
    return contains(high, low);
}

bool verify_sum_inclusion(const LieAlgebra& g, int k, int l, const SolverOptions& opt) {
    if (k < 1 || l < 1) fail(ErrorKind::PreconditionViolated, "orders must be >= 1");
    Subspace a = leibniz_derivation_space(g, k, opt).space;
    Subspace b = leibniz_derivation_space(g, l, opt).space;
    Subspace c = leibniz_derivation_space(g, k + l, opt).space;
    return contains(c, intersect(a, b));
}

bool verify_bracket_closure(const DerivationSpace& space) {
    int n2 = space.space.ambient;
    int n = 0;
    while (n * n < n2) ++n;
    if (n * n != n2)
        fail(ErrorKind::PreconditionViolated, "ambient dimension is not a square");
    const Matrix& basis = space.space.basis;
    std::vector<Matrix> mats;
    mats.reserve(size_t(basis.rows));
    for (int r = 0; r < basis.rows; ++r) {
        Vec row(size_t(n2), Rat(0));
        for (int c = 0; c < n2; ++c) row[size_t(c)] = basis.at(r, c);
        mats.push_back(unvectorize(row, n));
    }
    for (size_t i = 0; i < mats.size(); ++i)
        for (size_t j = i + 1; j < mats.size(); ++j)
            if (!contains(space.space, vectorize(commutator(mats[i], mats[j])))) return false;
    return true;
}

StarSystem star_identity_space(const LieAlgebra& g, const Rat& m, int k,
                               const SolverOptions& opt) {
    if (k < 2) fail(ErrorKind::PreconditionViolated, "star identity needs arity k >= 2");
    if (m == 0 || (m < 0 && m.get_den() == 1))
        fail(ErrorKind::InvalidM, "m = " + rat_str(m) + " is zero or a negative integer");
    check_tuple_cap(g.n, k - 1, effective_tuple_cap(opt)); // n^k tuples

    const int n = g.n;
    const int n2 = n * n;
    detail::AdTable ads(g);

    std::vector<Matrix> admat(size_t(n), Matrix(n, n));
    for (int i = 0; i < n; ++i) admat[size_t(i)] = ad_basis(g, i);

    RrefBuilder rref(n2);
    std::vector<int> idx(size_t(k), 0);
    std::vector<Vec> suffix(size_t(k), zero_vec(n)); // suffix[j] = nested(e_{i_{j+1}},..,e_{i_k})
    std::vector<Matrix> lmat(size_t(k), Matrix(n, n));  // lmat[j] = ad(e_{i_1})..ad(e_{i_j})
    Vec row(size_t(n2), Rat(0));

    // m*F(nested(tuple)) + sum_{j=1}^{k-1} L_j * F(suffix_j) = 0 per tuple
    while (true) {
        for (int r = 0; r < n; ++r) suffix[size_t(k) - 1][size_t(r)] = (r == idx[size_t(k) - 1]) ? 1 : 0;
        for (int j = k - 2; j >= 0; --j)
            ads.bracket_into(idx[size_t(j)], suffix[size_t(j) + 1], suffix[size_t(j)]);
        lmat[1] = admat[size_t(idx[0])];
        for (int j = 2; j <= k - 1; ++j) lmat[size_t(j)] = lmat[size_t(j) - 1] * admat[size_t(idx[size_t(j) - 1])];

        for (int r = 0; r < n; ++r) {
            for (Rat& x : row) x = 0;
            bool nz = false;
            for (int c = 0; c < n; ++c) {
                const Rat& v0 = suffix[0][size_t(c)];
                if (v0 != 0) {
                    row[size_t(r) * n + c] += m * v0;
                    nz = true;
                }
            }
            for (int j = 1; j <= k - 1; ++j)
                for (int s = 0; s < n; ++s) {
                    const Rat& lv = lmat[size_t(j)].at(r, s);
                    if (lv == 0) continue;
                    for (int c = 0; c < n; ++c) {
                        const Rat& vj = suffix[size_t(j)][size_t(c)];
                        if (vj != 0) {
                            row[size_t(s) * n + c] += lv * vj;
                            nz = true;
                        }
                    }
                }
            if (nz) rref.add(row);
        }

        int pos = k - 1;
        while (pos >= 0 && ++idx[size_t(pos)] == n) idx[size_t(pos--)] = 0;
        if (pos < 0) break;
    }

    StarSystem out;
    out.m = m;
    out.k = k;
    out.algebra = g.name;
    out.space = kernel_of_rref(rref);
    return out;
}

bool radical_invariance_check(const LieAlgebra& g, int k, const SolverOptions& opt) {
    Subspace rad = radical(g);
    Subspace space = leibniz_derivation_space(g, k, opt).space;
    const int n = g.n;
    for (int r = 0; r < space.basis.rows; ++r) {
        Vec row(size_t(n) * n);
        for (int c = 0; c < n * n; ++c) row[size_t(c)] = space.basis.at(r, c);
        Matrix d = unvectorize(row, n);
        for (int i = 0; i < rad.basis.rows; ++i) {
            Vec v(size_t(n), Rat(0));
            for (int c = 0; c < n; ++c) v[size_t(c)] = rad.basis.at(i, c);
            if (!contains(rad, lieder::apply(d, v))) return false;
        }
    }
    return true;
}

bool dimension_decomposition_check(const LieAlgebra& g, int k, const SolverOptions& opt) {
    if (!g.reductive_split)
        fail(ErrorKind::SummandsNotMarked,
             "algebra '" + g.name + "' carries no semisimple/abelian summand marking");
    auto [sd, ad_] = *g.reductive_split;
    if (sd < 0 || ad_ < 0 || sd + ad_ != g.n)
        fail(ErrorKind::InternalInconsistency, "summand marking does not partition the basis");
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int kk = 0; kk < g.n; ++kk) {
                const Rat& cv = g.c_at(i, j, kk);
                if (cv == 0) continue;
                bool cross = (i >= sd) || (j >= sd) || (kk >= sd);
                if (cross)
                    fail(ErrorKind::InternalInconsistency,
                         "marked abelian summand participates in a bracket");
            }

    int dim_inn_s = 0;
    if (sd > 0) {
        LieAlgebra s(sd, g.name + ":semisimple");
        for (int i = 0; i < sd; ++i)
            for (int j = 0; j < sd; ++j)
                for (int kk = 0; kk < sd; ++kk) s.c_at(i, j, kk) = g.c_at(i, j, kk);
        dim_inn_s = inner_derivations(s).dim();
    }

    DerivationSpace lder = leibniz_derivation_space(g, k, opt);
    DerivationSpace der = k == 1 ? lder : leibniz_derivation_space(g, 1, opt);
    return lder.space.dim() == dim_inn_s + ad_ * ad_ && lder.space == der.space;
}

} // namespace lieder
