#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lieder {

// Exact rationals. mpq_class keeps the canonical form we rely on everywhere:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (optional sign, arbitrary precision). Throws ParseError.
Rat parse_rat(const std::string& s);

// Canonical rendering: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& x);

using Vec = std::vector<Rat>;

bool is_zero_vec(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& v);
std::string vec_str(const Vec& v);

} // namespace lieder
