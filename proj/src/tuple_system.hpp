#pragma once

#include "lieder/lie_algebra.hpp"

#include <functional>

// Internal equation-assembly walker for the order-k Leibniz system. Exact
// arithmetic throughout; both the exact and the modular elimination paths
// consume the same rows.

namespace lieder::detail {

// Sparse bracket table: col[i][j] lists the nonzero (k, c_ijk) of [e_i, e_j].
struct AdTable {
    int n = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> col;

    explicit AdTable(const LieAlgebra& g) : n(g.n), col(size_t(g.n)) {
        for (int i = 0; i < n; ++i) {
            col[size_t(i)].resize(size_t(n));
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Rat& cv = g.c_at(i, j, k);
                    if (cv != 0) col[size_t(i)][size_t(j)].emplace_back(k, cv);
                }
        }
    }

    // dst = [e_i, v]; returns true when dst is nonzero.
    bool bracket_into(int i, const Vec& v, Vec& dst) const {
        for (Rat& x : dst) x = 0;
        bracket_acc(i, v, dst);
        for (const Rat& x : dst)
            if (x != 0) return true;
        return false;
    }

    // dst += [e_i, v]
    void bracket_acc(int i, const Vec& v, Vec& dst) const {
        const auto& cols = col[size_t(i)];
        for (int j = 0; j < n; ++j) {
            const Rat& vj = v[size_t(j)];
            if (vj == 0) continue;
            for (const auto& [k, cv] : cols[size_t(j)]) dst[size_t(k)] += vj * cv;
        }
    }

    // dst += [x, v] for dense x
    void xbracket_acc(const Vec& x, const Vec& v, Vec& dst) const {
        for (int i = 0; i < n; ++i) {
            const Rat& xi = x[size_t(i)];
            if (xi == 0) continue;
            const auto& cols = col[size_t(i)];
            for (int j = 0; j < n; ++j) {
                const Rat& vj = v[size_t(j)];
                if (vj == 0) continue;
                for (const auto& [k, cv] : cols[size_t(j)]) dst[size_t(k)] += xi * vj * cv;
            }
        }
    }
};

struct WalkStats {
    unsigned long long tuples = 0;
    unsigned long long skipped = 0;
    unsigned long long rows = 0;
};

// dst = a * ad(e_i) (dense small matrices, zero-skip); true when nonzero.
inline bool mul_ad_into(const Matrix& a, const AdTable& ads, int i, Matrix& dst) {
    int n = a.rows;
    for (Rat& x : dst.a) x = 0;
    bool nz = false;
    // dst[r][j] = sum_m a[r][m] * ad_i[m][j]; ad_i[m][j] = c_{i,j,m}
    for (int j = 0; j < n; ++j)
        for (const auto& [m, cv] : ads.col[size_t(i)][size_t(j)])
            for (int r = 0; r < n; ++r) {
                const Rat& av = a.at(r, m);
                if (av != 0) {
                    dst.at(r, j) += av * cv;
                    nz = true;
                }
            }
    if (!nz) return false;
    for (const Rat& x : dst.a)
        if (x != 0) return true;
    return false;
}

// Number of flattened prefix chunks the walk is split into (first one or two
// tuple positions).
inline long leibniz_chunk_count(int n, int k) { return k >= 2 ? long(n) * n : long(n); }

// Walks the (k+1)-tuples whose flattened leading indices lie in
// [chunk_lo, chunk_hi) and emits every nonzero row of the linear system
// (rows have length n*n; unknown P given row-major). The row buffer is
// reused between calls; consumers must copy or reduce immediately.
template <class Emit>
void walk_leibniz_system(const LieAlgebra& g, const AdTable& ads, int k, long chunk_lo,
                         long chunk_hi, Emit&& emit, WalkStats& stats) {
    const int n = g.n;
    const int n2 = n * n;

    std::vector<Matrix> lmat(size_t(k) + 1, Matrix(n, n)); // prefix products L_0..L_k
    std::vector<char> lalive(size_t(k) + 1, 0);
    lmat[0] = Matrix::identity(n);
    lalive[0] = 1;

    std::vector<int> idx(size_t(k) + 1, 0); // current tuple, 0-based positions 1..k+1 in slots 0..k

    // suffix brackets: w[j] = nested(e_{i_{j+1}}, ..., e_{i_{k+1}}), j = 1..k
    std::vector<Vec> w(size_t(k) + 1, zero_vec(n));
    std::vector<char> wnz(size_t(k) + 1, 0);
    Vec bt(size_t(n), Rat(0));
    // slot vectors: v[j][s] = L_{j-1} * [e_s, w_j]
    std::vector<std::vector<Vec>> vslot(size_t(k) + 1, std::vector<Vec>(size_t(n), Vec(size_t(n))));
    std::vector<std::vector<char>> vnz(size_t(k) + 1, std::vector<char>(size_t(n), 0));
    Vec u(size_t(n), Rat(0));
    Vec row(size_t(n2), Rat(0));

    const int chunk_depth = k >= 2 ? 2 : 1;

    auto leaf = [&](int last) {
        idx[size_t(k)] = last;
        ++stats.tuples;

        // w chain, right to left
        for (int c = 0; c < n; ++c) w[size_t(k)][size_t(c)] = (c == last) ? 1 : 0;
        wnz[size_t(k)] = 1;
        for (int j = k - 1; j >= 1; --j) {
            if (!wnz[size_t(j + 1)]) {
                wnz[size_t(j)] = 0;
                continue;
            }
            wnz[size_t(j)] =
                ads.bracket_into(idx[size_t(j)], w[size_t(j + 1)], w[size_t(j)]) ? 1 : 0;
        }
        bool bt_nz = wnz[1] ? ads.bracket_into(idx[0], w[1], bt) : false;

        // slot vectors
        bool any_slot = false;
        for (int j = 1; j <= k; ++j) {
            if (!lalive[size_t(j - 1)] || !wnz[size_t(j)]) {
                for (int s = 0; s < n; ++s) vnz[size_t(j)][size_t(s)] = 0;
                continue;
            }
            const Matrix& lm = lmat[size_t(j - 1)];
            for (int s = 0; s < n; ++s) {
                if (!ads.bracket_into(s, w[size_t(j)], u)) {
                    vnz[size_t(j)][size_t(s)] = 0;
                    continue;
                }
                Vec& v = vslot[size_t(j)][size_t(s)];
                bool nz = false;
                for (int r = 0; r < n; ++r) {
                    Rat acc;
                    for (int m = 0; m < n; ++m) {
                        const Rat& lv = lm.at(r, m);
                        if (lv != 0 && u[size_t(m)] != 0) acc += lv * u[size_t(m)];
                    }
                    if (acc != 0) nz = true;
                    v[size_t(r)] = std::move(acc);
                }
                vnz[size_t(j)][size_t(s)] = nz ? 1 : 0;
                any_slot = any_slot || nz;
            }
        }
        bool lk_alive = lalive[size_t(k)] != 0;
        if (!bt_nz && !lk_alive && !any_slot) {
            ++stats.skipped;
            return;
        }

        for (int r = 0; r < n; ++r) {
            for (Rat& x : row) x = 0;
            bool nz = false;
            if (bt_nz)
                for (int c = 0; c < n; ++c)
                    if (bt[size_t(c)] != 0) {
                        row[size_t(r) * n + c] += bt[size_t(c)];
                        nz = true;
                    }
            if (lk_alive) {
                const Matrix& lk = lmat[size_t(k)];
                for (int s = 0; s < n; ++s) {
                    const Rat& lv = lk.at(r, s);
                    if (lv != 0) {
                        row[size_t(s) * n + last] -= lv;
                        nz = true;
                    }
                }
            }
            for (int j = 1; j <= k; ++j)
                for (int s = 0; s < n; ++s) {
                    if (!vnz[size_t(j)][size_t(s)]) continue;
                    const Rat& vv = vslot[size_t(j)][size_t(s)][size_t(r)];
                    if (vv != 0) {
                        row[size_t(s) * n + idx[size_t(j - 1)]] -= vv;
                        nz = true;
                    }
                }
            if (nz) {
                ++stats.rows;
                emit(row);
            }
        }
    };

    std::function<void(int)> descend = [&](int depth) {
        // depth = number of prefix positions already fixed (0..k)
        if (depth == k) {
            for (int last = 0; last < n; ++last) leaf(last);
            return;
        }
        for (int i = 0; i < n; ++i) {
            idx[size_t(depth)] = i;
            if (lalive[size_t(depth)])
                lalive[size_t(depth + 1)] =
                    mul_ad_into(lmat[size_t(depth)], ads, i, lmat[size_t(depth + 1)]) ? 1 : 0;
            else
                lalive[size_t(depth + 1)] = 0;
            descend(depth + 1);
        }
    };

    auto run_prefix = [&](long flat) {
        if (chunk_depth == 1) {
            int i1 = int(flat);
            idx[0] = i1;
            lalive[1] = mul_ad_into(lmat[0], ads, i1, lmat[1]) ? 1 : 0;
            descend(1);
        } else {
            int i1 = int(flat / n), i2 = int(flat % n);
            idx[0] = i1;
            idx[1] = i2;
            lalive[1] = mul_ad_into(lmat[0], ads, i1, lmat[1]) ? 1 : 0;
            if (lalive[1])
                lalive[2] = mul_ad_into(lmat[1], ads, i2, lmat[2]) ? 1 : 0;
            else
                lalive[2] = 0;
            descend(2);
        }
    };

    if (chunk_lo < 0) {
        chunk_lo = 0;
        chunk_hi = leibniz_chunk_count(n, k);
    }
    for (long flat = chunk_lo; flat < chunk_hi; ++flat) run_prefix(flat);
}

} // namespace lieder::detail
