#include "modp.hpp"

#include "lieder/error.hpp"

#include <algorithm>

namespace lieder::modp {

namespace {

uint64_t mulmod_slow(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod_slow(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) acc = mulmod_slow(acc, base, m);
        base = mulmod_slow(base, base, m);
        e >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_slow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_slow(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

Field::Field(uint64_t p) : p_(p) {
    // pinv_ = -p^{-1} mod 2^64 via Newton iteration
    uint64_t inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    pinv_ = ~inv + 1;
    r1_ = (~uint64_t(0) % p) + 1; // 2^64 mod p
    if (r1_ == p) r1_ = 0;
    r2_ = mulmod_slow(r1_, r1_, p);
}

uint64_t Field::redc(unsigned __int128 t) const {
    uint64_t m = uint64_t(t) * pinv_;
    unsigned __int128 s = t + (unsigned __int128)m * p_;
    uint64_t r = uint64_t(s >> 64);
    return r >= p_ ? r - p_ : r;
}

uint64_t Field::to(uint64_t x) const { return redc((unsigned __int128)(x % p_) * r2_); }

uint64_t Field::from(uint64_t x) const { return redc(x); }

uint64_t Field::pow(uint64_t base, uint64_t e) const {
    uint64_t acc = r1_;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

uint64_t Field::inv(uint64_t a) const { return pow(a, p_ - 2); }

uint64_t Field::residue(const Rat& x) const {
    Int num = x.get_num(), den = x.get_den();
    uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p_);
    uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p_);
    if (d == 0) throw BadPrime{};
    if (n == 0) return 0;
    return mul(to(n), inv(to(d)));
}

std::vector<uint64_t> solver_primes(int count) {
    std::vector<uint64_t> primes;
    uint64_t candidate = (1ULL << 62) - 1;
    while (int(primes.size()) < count) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes;
}

Rref::Rref(const Field* f, int ambient) : f_(f), ambient_(ambient) {}

bool Rref::add(std::vector<uint64_t> row) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint64_t fct = row[size_t(pivots_[i])];
        if (fct == 0) continue;
        const auto& pr = rows_[i];
        for (int c = pivots_[i]; c < ambient_; ++c)
            if (pr[size_t(c)] != 0) row[size_t(c)] = f_->sub(row[size_t(c)], f_->mul(fct, pr[size_t(c)]));
    }
    int piv = -1;
    for (int c = 0; c < ambient_; ++c)
        if (row[size_t(c)] != 0) { piv = c; break; }
    if (piv < 0) return false;
    if (row[size_t(piv)] != f_->one()) {
        uint64_t inv = f_->inv(row[size_t(piv)]);
        for (int c = piv; c < ambient_; ++c)
            if (row[size_t(c)] != 0) row[size_t(c)] = f_->mul(row[size_t(c)], inv);
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint64_t fct = rows_[i][size_t(piv)];
        if (fct == 0) continue;
        for (int c = piv; c < ambient_; ++c)
            if (row[size_t(c)] != 0)
                rows_[i][size_t(c)] = f_->sub(rows_[i][size_t(c)], f_->mul(fct, row[size_t(c)]));
    }
    size_t pos = size_t(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
    pivots_.insert(pivots_.begin() + long(pos), piv);
    rows_.insert(rows_.begin() + long(pos), std::move(row));
    return true;
}

std::vector<std::vector<uint64_t>> Rref::kernel_rref() const {
    std::vector<bool> is_pivot(size_t(ambient_), false);
    for (int p : pivots_) is_pivot[size_t(p)] = true;
    Rref kernel(f_, ambient_);
    for (int free = 0; free < ambient_; ++free) {
        if (is_pivot[size_t(free)]) continue;
        std::vector<uint64_t> v(size_t(ambient_), 0);
        v[size_t(free)] = f_->one();
        for (size_t i = 0; i < pivots_.size(); ++i)
            v[size_t(pivots_[i])] = f_->neg(rows_[i][size_t(free)]);
        kernel.add(std::move(v));
    }
    return kernel.rows();
}

bool crt_reconstruct(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& primes,
                     Rat& out) {
    Int modulus(1), value(0);
    for (size_t i = 0; i < primes.size(); ++i) {
        Int p;
        p = (unsigned long)primes[i];
        Int r;
        r = (unsigned long)residues[i];
        if (i == 0) {
            value = r;
            modulus = p;
            continue;
        }
        // value' = value + modulus * ((r - value) * modulus^{-1} mod p)
        Int minv;
        if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t()) == 0) return false;
        Int diff = (r - value) % p;
        if (diff < 0) diff += p;
        Int t = (diff * minv) % p;
        value += modulus * t;
        modulus *= p;
    }
    // Wang rational reconstruction: |num|, den <= sqrt(modulus/2)
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(modulus / 2).get_mpz_t());
    Int r0 = modulus, r1 = value % modulus;
    if (r1 < 0) r1 += modulus;
    Int t0(0), t1(1);
    while (r1 > bound) {
        if (r1 == 0) return false;
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return false;
    Int den = t1 < 0 ? Int(-t1) : t1;
    Int num = t1 < 0 ? Int(-r1) : r1;
    if (den > bound || den == 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    // confirm num == value * den mod modulus
    Int check = (num - value * den) % modulus;
    if (check != 0) return false;
    out = Rat(num) / Rat(den);
    out.canonicalize();
    return true;
}

} // namespace lieder::modp
