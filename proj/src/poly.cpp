#include "lieder/poly.hpp"

#include "lieder/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lieder {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rat& x) { return UniPoly(std::vector<Rat>{x}); }

UniPoly UniPoly::monomial(const Rat& coeff, int deg) {
    std::vector<Rat> c(size_t(deg) + 1);
    c[size_t(deg)] = coeff;
    return UniPoly(std::move(c));
}

void UniPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<Rat> c(std::max(p.c.size(), q.c.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(int(i)) + q.coeff(int(i));
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<Rat> c(std::max(p.c.size(), q.c.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(int(i)) - q.coeff(int(i));
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    std::vector<Rat> c(p.c.size() + q.c.size() - 1);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        for (size_t j = 0; j < q.c.size(); ++j)
            if (q.c[j] != 0) c[i + j] += p.c[i] * q.c[j];
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rat& s, const UniPoly& p) {
    std::vector<Rat> c(p.c);
    for (Rat& x : c) x *= s;
    return UniPoly(std::move(c));
}

Rat eval(const UniPoly& p, const Rat& x) {
    Rat acc;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
    return acc;
}

UniPoly char_poly(const Matrix& m) {
    if (!m.is_square()) fail(ErrorKind::PreconditionViolated, "char_poly of non-square matrix");
    int n = m.rows;
    std::vector<Rat> coeffs(size_t(n) + 1);
    coeffs[size_t(n)] = 1;
    Matrix b = Matrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        Matrix ak = m * b;
        Rat ck = -trace(ak) / k;
        coeffs[size_t(n - k)] = ck;
        b = ak;
        for (int i = 0; i < n; ++i) b.at(i, i) += ck;
    }
    return UniPoly(std::move(coeffs));
}

namespace {

Int pollard_rho(const Int& n) {
    for (long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break; // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n < 0) n = -n;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    for (long p = 53; p < 100000 && Int(p) * p <= n; p += 2) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    while (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            ++out[n];
            return;
        }
        Int d = pollard_rho(n);
        std::map<Int, int> sub;
        factor_into(d, sub);
        for (const auto& [p, e] : sub) {
            (void)e;
            while (n % p == 0) {
                ++out[p];
                n /= p;
            }
        }
    }
}

std::vector<Int> divisors_of(const Int& n) {
    std::map<Int, int> fac;
    factor_into(n, fac);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

// Exact division of p by (x - r); remainder must be zero (callers check eval first).
UniPoly deflate(const UniPoly& p, const Rat& r) {
    int n = p.degree();
    std::vector<Rat> q(size_t(n), Rat(0));
    Rat carry;
    for (int i = n; i >= 1; --i) {
        carry = p.c[size_t(i)] + carry * r;
        q[size_t(i - 1)] = carry;
    }
    return UniPoly(std::move(q));
}

} // namespace

RootReport rational_roots(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorKind::PreconditionViolated, "rational_roots of zero polynomial");
    RootReport rep;
    UniPoly q = p;
    int zero_mult = 0;
    while (!q.c.empty() && q.c[0] == 0) {
        q.c.erase(q.c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) rep.roots.emplace_back(Rat(0), zero_mult);
    if (q.degree() >= 1) {
        // integer scaling
        Int den_lcm(1);
        for (const Rat& x : q.c)
            if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> ic(q.c.size());
        for (size_t i = 0; i < q.c.size(); ++i) {
            Rat v = q.c[i] * den_lcm;
            ic[i] = v.get_num();
        }
        std::set<Rat> candidates;
        for (const Int& d1 : divisors_of(ic.front()))
            for (const Int& d2 : divisors_of(ic.back())) {
                Rat r(d1, d2);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(-r);
            }
        for (const Rat& r : candidates) {
            int mult = 0;
            while (q.degree() >= 1 && eval(q, r) == 0) {
                q = deflate(q, r);
                ++mult;
            }
            if (mult > 0) rep.roots.emplace_back(r, mult);
        }
        std::sort(rep.roots.begin(), rep.roots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    rep.remainder_degree = std::max(q.degree(), 0);
    if (q.degree() <= 0) rep.remainder_degree = 0;
    return rep;
}

std::vector<EigenPart> generalized_eigenspaces(const Matrix& a) {
    if (!a.is_square())
        fail(ErrorKind::PreconditionViolated, "generalized_eigenspaces of non-square matrix");
    RootReport rep = rational_roots(char_poly(a));
    if (rep.remainder_degree != 0)
        fail(ErrorKind::SpectrumNotRational,
             "characteristic polynomial does not split over Q (rootless cofactor degree " +
                 std::to_string(rep.remainder_degree) + ")");
    std::vector<EigenPart> parts;
    int total = 0;
    for (const auto& [alpha, mult] : rep.roots) {
        Matrix shifted = a;
        for (int i = 0; i < a.rows; ++i) shifted.at(i, i) -= alpha;
        EigenPart part{alpha, nullspace(mat_pow(shifted, mult))};
        total += part.space.dim();
        parts.push_back(std::move(part));
    }
    if (total != a.rows)
        fail(ErrorKind::InternalInconsistency, "generalized eigenspace dims do not sum to n");
    return parts;
}

std::string poly_str(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rat coef = p.coeff(d);
        if (coef == 0) continue;
        bool neg = coef < 0;
        Rat mag = neg ? Rat(-coef) : coef;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string term;
        if (d == 0)
            term = rat_str(mag);
        else {
            if (mag != 1) term = rat_str(mag) + "*";
            term += var;
            if (d > 1) term += "^" + std::to_string(d);
        }
        out += term;
    }
    return out;
}

UniPoly parse_poly(const std::string& s, const std::string& var) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) fail(ErrorKind::ParseError, "empty polynomial literal");
    UniPoly acc;
    size_t pos = 0;
    while (pos < t.size()) {
        int sign = 1;
        while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
            if (t[pos] == '-') sign = -sign;
            ++pos;
        }
        size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
        std::string term = t.substr(pos, end - pos);
        if (term.empty()) fail(ErrorKind::ParseError, "dangling sign in polynomial '" + s + "'");
        pos = end;

        Rat coef(1);
        int deg = 0;
        size_t vpos = term.find(var);
        if (vpos == std::string::npos) {
            coef = parse_rat(term);
        } else {
            std::string pre = term.substr(0, vpos);
            std::string post = term.substr(vpos + var.size());
            if (!pre.empty()) {
                if (pre.back() != '*')
                    fail(ErrorKind::ParseError, "expected '*' before variable in '" + term + "'");
                coef = parse_rat(pre.substr(0, pre.size() - 1));
            }
            deg = 1;
            if (!post.empty()) {
                if (post[0] != '^')
                    fail(ErrorKind::ParseError, "unexpected trailing text in '" + term + "'");
                std::string e = post.substr(1);
                if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
                    fail(ErrorKind::ParseError, "bad exponent in '" + term + "'");
                deg = std::stoi(e);
            }
        }
        acc = acc + UniPoly::monomial(sign * coef, deg);
    }
    return acc;
}

} // namespace lieder
