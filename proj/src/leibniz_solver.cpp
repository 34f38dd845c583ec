#include "lieder/leibniz.hpp"
#include "lieder/error.hpp"

#include "modp.hpp"
#include "tuple_system.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieder {

namespace {

// Serial exact reference path: stream every row through rational elimination.
Subspace exact_kernel(const LieAlgebra& g, const detail::AdTable& ads, int k) {
    RrefBuilder rref(g.n * g.n);
    detail::WalkStats st;
    detail::walk_leibniz_system(
        g, ads, k, -1, -1, [&](const Vec& row) { rref.add(row); }, st);
    return kernel_of_rref(rref);
}

struct ModularOutcome {
    bool decided = false;           // true: `space` is certified (or zero-row shortcut)
    bool zero_rows = false;         // no nonzero equations at all
    Subspace space;
    std::vector<size_t> bad_fields; // primes that divided a denominator
};

int pivot_of(const std::vector<uint64_t>& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return int(i);
    return -1;
}

// One multimodular attempt: walk once, eliminate per prime, CRT the agreeing
// kernels back to Q and certify every reconstructed basis element exactly.
// rank over F_p never exceeds the rational rank, so d_p exactly verified
// independent members force equality with the rational kernel.
ModularOutcome modular_attempt(const LieAlgebra& g, const detail::AdTable& ads, int k,
                               const std::vector<uint64_t>& primes, unsigned long long cap) {
    ModularOutcome out;
    const int n = g.n;
    const int n2 = n * n;
    const size_t nf = primes.size();

    std::vector<modp::Field> fields;
    fields.reserve(nf);
    for (uint64_t p : primes) fields.emplace_back(p);

    const long nchunks = detail::leibniz_chunk_count(n, k);
    std::vector<std::vector<modp::Rref>> acc((size_t(nchunks)));
    std::vector<detail::WalkStats> stats((size_t(nchunks)));
    std::vector<char> bad(nf, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long ch = 0; ch < nchunks; ++ch) {
        auto& local = acc[size_t(ch)];
        local.reserve(nf);
        for (size_t f = 0; f < nf; ++f) local.emplace_back(&fields[f], n2);
        std::vector<uint64_t> mrow(size_t(n2), 0);
        detail::walk_leibniz_system(
            g, ads, k, ch, ch + 1,
            [&](const Vec& row) {
                for (size_t f = 0; f < nf; ++f) {
                    if (bad[f]) continue;
                    try {
                        for (int i = 0; i < n2; ++i) mrow[size_t(i)] = fields[f].residue(row[size_t(i)]);
                        local[f].add(mrow);
                    } catch (const modp::BadPrime&) {
                        bad[f] = 1;
                    }
                }
            },
            stats[size_t(ch)]);
    }

    unsigned long long total_rows = 0;
    for (const auto& st : stats) total_rows += st.rows;
    if (total_rows == 0) {
        // No equation constrains P at all; the kernel is all of gl (exact fact:
        // assembly was rational, so the zero-row count is not a mod-p artifact).
        out.decided = true;
        out.zero_rows = true;
        out.space = full_space(n2);
        return out;
    }

    for (size_t f = 0; f < nf; ++f)
        if (bad[f]) out.bad_fields.push_back(f);

    std::vector<modp::Rref> master;
    master.reserve(nf);
    for (size_t f = 0; f < nf; ++f) master.emplace_back(&fields[f], n2);
    for (long ch = 0; ch < nchunks; ++ch)
        for (size_t f = 0; f < nf; ++f) {
            if (bad[f]) continue;
            for (const auto& row : acc[size_t(ch)][f].rows()) master[f].add(row);
        }

    // Kernels per usable prime; keep only the primes of maximal rank (other
    // primes lost equations to unlucky reductions).
    std::vector<std::vector<std::vector<uint64_t>>> kernels(nf);
    int max_rank = -1;
    for (size_t f = 0; f < nf; ++f) {
        if (bad[f]) continue;
        max_rank = std::max(max_rank, master[f].rank());
    }
    if (max_rank < 0) return out; // every prime went bad

    std::vector<size_t> used;
    for (size_t f = 0; f < nf; ++f)
        if (!bad[f] && master[f].rank() == max_rank) used.push_back(f);
    if (used.size() < 2) return out;

    for (size_t f : used) kernels[f] = master[f].kernel_rref();
    const size_t dim = kernels[used[0]].size();

    std::vector<int> pivots(dim);
    for (size_t r = 0; r < dim; ++r) pivots[r] = pivot_of(kernels[used[0]][r]);
    for (size_t f : used)
        for (size_t r = 0; r < dim; ++r)
            if (pivot_of(kernels[f][r]) != pivots[r]) return out;

    std::vector<char> is_pivot(size_t(n2), 0);
    for (int p : pivots) is_pivot[size_t(p)] = 1;

    std::vector<uint64_t> used_primes;
    for (size_t f : used) used_primes.push_back(primes[f]);

    Matrix basis(int(dim), n2);
    std::vector<uint64_t> residues(used.size());
    for (size_t r = 0; r < dim; ++r) {
        for (size_t j = 0; j < dim; ++j) basis.at(int(r), pivots[j]) = (j == r) ? 1 : 0;
        for (int c = 0; c < n2; ++c) {
            if (is_pivot[size_t(c)]) continue;
            bool all_zero = true;
            for (size_t u = 0; u < used.size(); ++u) {
                residues[u] = fields[used[u]].from(kernels[used[u]][r][size_t(c)]);
                all_zero = all_zero && residues[u] == 0;
            }
            if (all_zero) continue;
            Rat val;
            if (!modp::crt_reconstruct(residues, used_primes, val)) return out;
            basis.at(int(r), c) = val;
        }
    }

    // Exact certification: distinct pivots make the rows independent; every
    // row satisfying the identity plus dim >= rational kernel dim closes the
    // argument, and RREF uniqueness makes the basis canonical.
    std::vector<Matrix> cands;
    cands.reserve(dim);
    for (size_t r = 0; r < dim; ++r) {
        Vec row(size_t(n2), Rat(0));
        for (int c = 0; c < n2; ++c) row[size_t(c)] = basis.at(int(r), c);
        cands.push_back(unvectorize(row, n));
    }
    std::vector<bool> ok = are_leibniz_derivations(g, cands, k, cap);
    for (bool b : ok)
        if (!b) return out;

    std::vector<Vec> rows;
    rows.reserve(dim);
    for (const Matrix& p : cands) rows.push_back(vectorize(p));
    out.space = subspace_from_rows(n2, rows);
    if (out.space.dim() != int(dim))
        fail(ErrorKind::InternalInconsistency, "reconstructed kernel basis is degenerate");
    out.decided = true;
    return out;
}

Subspace modular_kernel(const LieAlgebra& g, const detail::AdTable& ads, int k,
                        unsigned long long cap) {
    std::vector<uint64_t> pool = modp::solver_primes(24);
    std::vector<char> blacklist(pool.size(), 0);

    for (size_t nprimes : {size_t(2), size_t(4), size_t(6)}) {
        for (int retry = 0; retry < 3; ++retry) {
            std::vector<uint64_t> primes;
            std::vector<size_t> chosen;
            for (size_t i = 0; i < pool.size() && primes.size() < nprimes; ++i) {
                if (blacklist[i]) continue;
                primes.push_back(pool[i]);
                chosen.push_back(i);
            }
            if (primes.size() < nprimes) break;

            ModularOutcome res = modular_attempt(g, ads, k, primes, cap);
            for (size_t f : res.bad_fields) blacklist[chosen[f]] = 1;
            if (res.decided) return res.space;
            if (res.bad_fields.empty()) break; // certification failed: escalate primes
        }
    }
    return exact_kernel(g, ads, k);
}

} // namespace

DerivationSpace leibniz_derivation_space(const LieAlgebra& g, int k, const SolverOptions& opt) {
    if (k < 1) fail(ErrorKind::PreconditionViolated, "order k must be >= 1");
    unsigned long long cap = effective_tuple_cap(opt);
    check_tuple_cap(g.n, k, cap);

    DerivationSpace out;
    out.order = k;
    out.algebra = g.name;

    detail::AdTable ads(g);

    bool modular = false;
    switch (opt.mode) {
    case SolverOptions::Mode::Exact: modular = false; break;
    case SolverOptions::Mode::Modular: modular = true; break;
    case SolverOptions::Mode::Auto: {
        unsigned long long tuples = 1;
        for (int i = 0; i <= k && tuples <= 10000; ++i) tuples *= (unsigned long long)g.n;
        modular = tuples > 10000;
        break;
    }
    }

    out.space = modular ? modular_kernel(g, ads, k, cap) : exact_kernel(g, ads, k);
    return out;
}

} // namespace lieder
