#pragma once

#include "lieder/lie_algebra.hpp"
#include "lieder/matrix.hpp"

#include <random>
#include <string>
#include <vector>

// Seeded generator of small nilpotent algebras: quotients of strictly
// upper-triangular matrix algebras u_N (N = 3, 4, 5) by monomial ideals,
// re-expressed in a random invertible basis so the structure constants are
// not in normal form. Every proper quotient kills the 1-dim center of u_N,
// so classes here are 1 or 2; deeper classes come from the fixed catalog.

namespace testutil {

inline lieder::LieAlgebra quotient_of_upper(int nn, const std::vector<std::pair<int, int>>& kept,
                                            const std::string& name) {
    using namespace lieder;
    int n = int(kept.size());
    auto pos = [&](int a, int b) {
        for (int i = 0; i < n; ++i)
            if (kept[size_t(i)] == std::pair<int, int>(a, b)) return i;
        return -1;
    };
    LieAlgebra g(n, name);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto [a, b] = kept[size_t(x)];
            auto [c, d] = kept[size_t(y)];
            Vec v(size_t(n), Rat(0));
            // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, dropped coords are 0
            if (b == c) {
                int p = pos(a, d);
                if (p >= 0) v[size_t(p)] += 1;
            }
            if (d == a) {
                int p = pos(c, b);
                if (p >= 0) v[size_t(p)] -= 1;
            }
            g.set_bracket(x, y, v);
        }
    require_valid(g);
    return g;
}

inline const std::vector<lieder::LieAlgebra>& nilpotent_bases() {
    static const std::vector<lieder::LieAlgebra> bases = [] {
        std::vector<lieder::LieAlgebra> v;
        v.push_back(quotient_of_upper(3, {{1, 2}, {2, 3}, {1, 3}}, "u3"));
        v.push_back(quotient_of_upper(3, {{1, 2}, {2, 3}}, "u3_mod_13"));
        v.push_back(quotient_of_upper(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}}, "u4_mod_14"));
        v.push_back(quotient_of_upper(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}}, "u4_mod_13_14"));
        v.push_back(quotient_of_upper(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}, "u4_mod_24_14"));
        v.push_back(quotient_of_upper(4, {{1, 2}, {2, 3}, {3, 4}}, "u4_mod_depth2"));
        v.push_back(
            quotient_of_upper(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}}, "u5_keep_24"));
        v.push_back(
            quotient_of_upper(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}, "u5_keep_35"));
        return v;
    }();
    return bases;
}

inline lieder::LieAlgebra random_nilpotent(unsigned long long seed) {
    using namespace lieder;
    std::mt19937_64 rng(seed ^ 0x5bf0f5b9c0e4a163ULL);
    const auto& bases = nilpotent_bases();
    const LieAlgebra& base = bases[size_t(rng() % bases.size())];
    const int n = base.n;

    // invertible basis change: diagonal rational scaling between shear passes
    Matrix b = Matrix::identity(n);
    auto shear = [&] {
        int i = int(rng() % (unsigned long long)(n));
        int j = int(rng() % (unsigned long long)(n));
        long m = long(rng() % 5ULL) - 2;
        if (i == j || m == 0) return;
        for (int c = 0; c < n; ++c) b.at(i, c) += Rat(m) * b.at(j, c);
    };
    for (int s = 0; s < n; ++s) shear();
    for (int i = 0; i < n; ++i) {
        long num = long(rng() % 3ULL) + 1, den = long(rng() % 2ULL) + 1;
        Rat d(num, den);
        d.canonicalize();
        if (rng() % 2ULL) d = -d;
        for (int c = 0; c < n; ++c) b.at(i, c) *= d;
    }
    for (int s = 0; s < n; ++s) shear();

    // row i of b = coordinates of the new basis vector f_i; pulling the
    // bracket back needs (b^T)^{-1}
    Matrix bt_inv = inverse(transpose(b));
    LieAlgebra g(n, base.name + "_seed" + std::to_string(seed));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec fi = zero_vec(n), fj = zero_vec(n);
            for (int c = 0; c < n; ++c) {
                fi[size_t(c)] = b.at(i, c);
                fj[size_t(c)] = b.at(j, c);
            }
            g.set_bracket(i, j, lieder::apply(bt_inv, bracket(base, fi, fj)));
        }
    require_valid(g);
    return g;
}

} // namespace testutil
