#pragma once

#include "lieder/subspace.hpp"

#include <utility>

namespace lieder {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient list.
struct UniPoly {
    std::vector<Rat> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly constant(const Rat& x);
    static UniPoly monomial(const Rat& coeff, int deg);

    int degree() const { return int(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    Rat coeff(int i) const { return i < int(c.size()) ? c[size_t(i)] : Rat(0); }
    void normalize();

    bool operator==(const UniPoly& o) const = default;
};

UniPoly operator+(const UniPoly& p, const UniPoly& q);
UniPoly operator-(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const Rat& s, const UniPoly& p);

Rat eval(const UniPoly& p, const Rat& x);

// Monic characteristic polynomial via the Faddeev-LeVerrier trace recursion.
UniPoly char_poly(const Matrix& m);

struct RootReport {
    std::vector<std::pair<Rat, int>> roots; // (root, multiplicity), ascending
    int remainder_degree = 0;               // degree of the rootless cofactor
};

// All rational roots with multiplicities (rational-root theorem after integer
// scaling). Throws PreconditionViolated on the zero polynomial.
RootReport rational_roots(const UniPoly& p);

struct EigenPart {
    Rat value;
    Subspace space;
};

// Generalized eigenspaces ker((A - aI)^m_a) for each rational eigenvalue,
// ascending by eigenvalue. Throws SpectrumNotRational when char_poly does not
// split over Q.
std::vector<EigenPart> generalized_eigenspaces(const Matrix& a);

// "3/2*t^2 - t + 1" style rendering/parsing used by family files.
std::string poly_str(const UniPoly& p, const std::string& var = "t");
UniPoly parse_poly(const std::string& s, const std::string& var = "t");

} // namespace lieder
