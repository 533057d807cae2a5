#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/picard.hpp"
#include "delpezzo/point_spec.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

/// The r = 8 degenerating family on the 9-point blow-up whose ratios
/// m/(m-1) squeeze the constant down to 1.
struct FamilyDescriptor {
    std::string shape = "(3m; m^8, m-1)";
};

struct SeshadriResult {
    Rat value;
    bool attained; // by an irreducible rational curve
    std::optional<std::pair<DivisorClass, Int>> witness; // (class, mult at x)
    std::optional<FamilyDescriptor> family;
};

/// max{t : pullback(-K_{X_r}) - tE nef on the blow-up of X_r at the
/// query point}, computed on the (r+1)-point lattice: the minimum of
/// (3d - sum_{i<=r} a_i)/a_{r+1} over Mori generators of X_{r+1} with
/// a_{r+1} >= 1.  Values: 2 for r <= 5, 3/2 for r = 6 (binding class
/// (3; 1^6, 2)), 4/3 for r = 7 (binding (6; 2^7, 3)).
///
/// For r = 8 the answer is exactly 1, pinched from two sides on the
/// 9-point lattice: the effective cubic (3; 1^9) caps the threshold at
/// (9-8)/1 = 1, while (3; 1^8, t) = (1-t) * pullback(-K_8) + t * (-K_9)
/// stays nef for t <= 1 (every (-1)-class of X_9 through the point has
/// -K_9 degree 1, hence ratio (a_9+1)/a_9 > 1).
///
/// Only general points: the threshold models blowing up a general
/// further point.
Rat nef_threshold(int r, const PointSpec& p);

/// The full computation: exact value, attainment, rational-curve
/// witness (general r <= 7, every distinguished point, and the node),
/// or the degenerating family (r = 8 general, where no rational curve
/// attains the infimum).
SeshadriResult seshadri_constant(int r, const PointSpec& p);

/// The minimizing rational curve: class on X_r plus its multiplicity at
/// x.  General r <= 7: read off the binding Mori generator of X_{r+1}.
/// Distinguished point: the distinguished curve at multiplicity 1.
/// Node: the nodal anticanonical cubic (3; 1^8) at multiplicity 2.
/// The assigned genus bookkeeping p_a(class) - m(m-1)/2 is 0 in every
/// case (the witness is rational).
/// Throws NotAttainedError for r = 8 general points.
std::pair<DivisorClass, Int> witness_rational_curve(int r, const PointSpec& p);

/// Definition-1 oracle: minimize (-K.C)/m over candidate classes C
/// with an assigned multiplicity m >= 1 at x, keeping (C, m) when the
/// extended class on X_{r+1} is a (-1)-class or passes the dimension
/// and Bezout feasibility tests.  For r <= 7 this equals nef_threshold
/// exactly, certifying both computations.
///
/// For r = 8 the infimum runs over rational curves, where the
/// feasibility tests have no bite (the elliptic cubic through the 8
/// points and x is not rational); the oracle scans the degenerating
/// family members with 3m <= d_max and returns the smallest ratio
/// m/(m-1), a strict upper bound decreasing to the true value 1.
///
/// At special points the candidate pool additionally contains the
/// distinguished curve (mult 1) or the nodal cubic (mult 2), whose
/// ratios 1 and 1/2 are the minima there.
Rat brute_force_seshadri(int r, const PointSpec& p, int d_max);

/// Member m of the family |3m E_0 - m E_1 - ... - m E_8 - (m-1) E_9|
/// on the 9-point lattice: the class (3m; m^8, m-1), an irreducible
/// rational nodal curve for every m >= 1.  Its -K_9 degree is 1.
/// m = 1 is the plain cubic with multiplicity 0 at the ninth point
/// (returned as is; it carries no ratio).
DivisorClass limiting_family(const Int& m);

/// (-K_{X_8} . member)/mult = m/(m-1); needs m >= 2 (the m = 1 member
/// misses the ninth point).
Rat family_ratio(const Int& m);

/// The number of singular members of a general cubic pencil: 12, as
/// the topological Euler number e(X_9) = e(P^2) + 9 of the rational
/// elliptic surface resolving the pencil (a smooth fiber contributes 0,
/// each nodal fiber 1).  Only r = 8 carries the pencil.
int count_anticanonical_nodes(int r);

/// Canonical representative of each distinguished-curve type on X_r:
/// exceptional curve, line through 2 points (r >= 2), conic through 5
/// (r >= 5), cubic double at one of 7 (r = 7).
std::vector<DivisorClass> distinguished_types(int r);

/// One row of the theorem table.
struct TableRow {
    int r;
    PointSpec point;
    SeshadriResult result;
};

/// Every case of the theorem: r = 1..8 general, each distinguished
/// type for r <= 7, and the r = 8 node.
std::vector<TableRow> theorem_table();

} // namespace delpezzo
