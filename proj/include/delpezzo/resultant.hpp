#pragma once

#include <array>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Ternary quadric q0*x^2 + q1*xy + q2*xz + q3*y^2 + q4*yz + q5*z^2
/// (graded-lex coefficient order).
struct Quadric {
    std::array<Int, 6> c{};
};

/// Ternary cubic with graded-lex coefficients
/// (x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3).
struct Cubic {
    std::array<Int, 10> c{};
};

Cubic operator+(const Cubic& a, const Cubic& b);
Cubic operator*(const Int& s, const Cubic& a);

/// Gradient of a cubic: three quadrics (f_x, f_y, f_z).
std::array<Quadric, 3> partial_derivatives(const Cubic& f);

/// Macaulay resultant of three ternary quadrics, an integer polynomial
/// of degree 4 in the coefficients of each quadric; it vanishes exactly
/// when the quadrics share a projective zero.
///
/// Built at the critical degree 4: the 15x15 matrix M has one row per
/// degree-4 monomial m, holding x_i^-2 * m * F_i where x_i is the first
/// variable appearing squared in m; then Res = det(M) / det(M'), where
/// M' is the 3x3 minor on the non-reduced monomials x^2y^2, x^2z^2,
/// y^2z^2 (Macaulay's extraneous factor).  The division is exact over
/// the integers.  When det(M') = 0 the construction is retried over the
/// six variable orderings (the resultant of quadrics is invariant under
/// them); if every ordering degenerates, throws
/// DegenerateConfigurationError.
Int macaulay_resultant(const Quadric& f0, const Quadric& f1, const Quadric& f2);

} // namespace delpezzo
