#pragma once

#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Univariate polynomial over Q, coefficients ascending, no trailing
/// zeros; the zero polynomial is the empty vector (degree -1).
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rat leading() const { return c.empty() ? Rat(0) : c.back(); }
    Rat operator()(const Rat& x) const; // Horner

    bool operator==(const Poly& o) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);

Poly derivative(const Poly& a);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Degree of the squarefree part, deg(a / gcd(a, a')).
int squarefree_degree(const Poly& a);

/// The unique polynomial of degree < xs.size() through the given
/// points; the xs must be pairwise distinct.
Poly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// "27*x^9 + ... + 531441" with caret powers, for display only.
std::string to_string(const Poly& a, const std::string& var = "x");

} // namespace delpezzo
