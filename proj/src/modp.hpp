#pragma once

#include "lieder/rational.hpp"

#include <cstdint>
#include <vector>

// Internal modular engine backing the fast solver path. Values live in
// Montgomery form throughout elimination; conversions happen at the edges.

namespace lieder::modp {

struct BadPrime {}; // thrown when a denominator vanishes mod p

// Montgomery arithmetic for an odd prime p < 2^62.
class Field {
public:
    explicit Field(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t to(uint64_t x) const;   // standard -> Montgomery
    uint64_t from(uint64_t x) const; // Montgomery -> standard
    uint64_t one() const { return r1_; }

    uint64_t mul(uint64_t a, uint64_t b) const { return redc((unsigned __int128)a * b); }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t pow(uint64_t base, uint64_t e) const;
    uint64_t inv(uint64_t a) const; // a != 0 (Montgomery form in and out)

    // Rational -> Montgomery residue; throws BadPrime if p | den.
    uint64_t residue(const Rat& x) const;

private:
    uint64_t redc(unsigned __int128 t) const;

    uint64_t p_;
    uint64_t pinv_; // -p^{-1} mod 2^64
    uint64_t r1_;   // 2^64 mod p
    uint64_t r2_;   // 2^128 mod p
};

// First `count` primes below 2^62, descending; deterministic.
std::vector<uint64_t> solver_primes(int count);

// Incremental RREF accumulator over F_p (Montgomery-form entries).
class Rref {
public:
    Rref(const Field* f, int ambient);

    bool add(std::vector<uint64_t> row);
    int rank() const { return int(rows_.size()); }
    const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Kernel of the accumulated system, itself in canonical RREF form.
    std::vector<std::vector<uint64_t>> kernel_rref() const;

private:
    const Field* f_;
    int ambient_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<int> pivots_;
};

// CRT lift of residues (standard form) to the symmetric range, then rational
// reconstruction. Returns false when no small fraction exists.
bool crt_reconstruct(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& primes,
                     Rat& out);

} // namespace lieder::modp
