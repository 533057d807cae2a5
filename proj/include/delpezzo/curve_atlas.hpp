#pragma once

#include <vector>

#include "delpezzo/picard.hpp"
#include "delpezzo/point_spec.hpp"

namespace delpezzo {

/// C² = -1 and -K·C = 1 (equivalently p_a = 0).  These classes are the
/// exceptional curves of X_r and the strict transforms of lines through
/// 2 points, conics through 5, cubics double at one of 7, etc.
bool is_minus_one_class(const DivisorClass& c);

/// All (-1)-classes of X_r, 0 <= r <= 8, in canonical order.
///
/// Exhaustive search over d in 0..7 with a_i in -1..3.  The box is
/// forced by the two defining equations: Cauchy-Schwarz on
/// (sum a_i)² <= r * (sum a_i²) gives (3d-1)² <= 8(d²+1), i.e. d <= 7,
/// and redoing it with one slot removed pins every a_i into
/// [(3d-1-s)/8, (3d-1+s)/8] with s² = -7(d-7)(d+1), which lies inside
/// [-1, 3] for every d in the range.  (d = 7 admits no integer
/// solution; the search confirms this.)
///
/// Counts for r = 1..8: 1, 3, 6, 10, 16, 27, 56, 240.
/// Throws UnsupportedSurfaceError for r > 8 (X_9 has infinitely many).
std::vector<DivisorClass> enumerate_minus_one_classes(int r);

/// Generators of the Mori cone of X_r, used for nef testing by duality.
struct MoriGenerators {
    int r = 0;
    std::vector<DivisorClass> classes;
};

/// r = 0: {H}.  r = 1: {E1, H - E1}.  2 <= r <= 8: the (-1)-classes.
MoriGenerators mori_generators(int r);

/// The distinguished (-1)-curve(s) through the point: empty for a
/// general point, a singleton for a point on a distinguished curve.
/// Node points are outside this model (the nodal cubic has p_a = 1);
/// they are handled by the r = 8 node path of the Seshadri engine.
std::vector<DivisorClass> distinguished_curves_through(int r, const PointSpec& p);

/// Candidate classes for the Definition-1 infimum at a general point:
/// one representative per relabeling orbit (multiplicities sorted
/// descending), since the blown-up points are interchangeable there.
///
/// A class (d; a), 1 <= d <= d_max, 0 <= a_i <= d, is kept when it is a
/// (-1)-class, or when it survives the plane-curve feasibility tests
/// for an irreducible curve at general points:
///   - expected_dim >= 0 (the system is nonempty),
///   - Bezout against a line through two of the points: a_i + a_j <= d,
///   - against a conic through five: sum of any five <= 2d,
///   - against a cubic double at one of seven: doubled seven-sum <= 3d.
/// The exceptional representative (0; 0,...,0,-1) is appended.
std::vector<DivisorClass> effective_candidates(int r, int d_max);

/// The Bezout filters above, on a multiplicity vector sorted descending
/// (exposed for the extension step of the brute-force oracle).
bool bezout_compatible(const Int& d, const std::vector<Int>& sorted_desc);

} // namespace delpezzo
