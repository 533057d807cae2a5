#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "delpezzo/picard.hpp"
#include "delpezzo/qpoly.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/resultant.hpp"

namespace delpezzo {

/// Plane curves of degree d with assigned multiplicities r_i >= 1 at
/// distinct general points: the projective system V(d; r_1 x_1, ...).
struct LinearSystemSpec {
    Int d;
    std::vector<Int> mults;

    LinearSystemSpec(Int degree, std::vector<Int> ms);
};

/// The conditions count for dim V: d(d+3)/2 - sum r_i(r_i+1)/2.
/// May be negative; the true dimension is >= this value.
Int expected_dim(const LinearSystemSpec& spec);

/// Same count for a lattice class (d; a), skipping zero multiplicities
/// (entries must be >= 0).
Int expected_dim_class(const DivisorClass& c);

/// Nonempty at general points when the expected dimension is >= 0.
/// (One-directional: emptiness below 0 needs very-general points.)
bool nonempty_at_general_points(const LinearSystemSpec& spec);

/// Bezout feasibility: an irreducible degree-d curve meets a degree-e
/// curve not containing it in at most d*e points counted with
/// multiplicity.  True when mult_sum <= d * aux_degree.
bool bezout_mult_bound(const Int& d, const Int& aux_degree, const Int& mult_sum);

/// One decomposition case of the r = 7 sextic argument: if the sextic
/// with multiplicities (2^7, 3) split as stated, the component-wise
/// multiplicity budgets cap the total below the required 17.
struct ExclusionCase {
    std::string name;              // e.g. "two cubics"
    std::vector<Int> degrees;      // component degrees
    std::vector<Int> bounds;       // per-component multiplicity budget
    Int total_bound;               // sum of bounds
    bool excluded;                 // total_bound < required_total
};

struct ExclusionReport {
    Int required_total;            // 17 = 7*2 + 3
    std::vector<ExclusionCase> cases;
    bool all_excluded;
};

/// Multiplicity budget of a degree-k component over the 8 assigned
/// points x_1..x_7, x:
///   k = 1 -> 2   (no 3 of the points collinear),
///   k = 2 -> 5   (no 6 on a conic),
///   k >= 3 -> 3k - 1 (Bezout against the smooth cubic through all 8
///                 points and one further point of the component).
Int component_mult_budget(const Int& k);

/// The four decomposition cases of the irreducible sextic argument:
/// two cubics, quintic + line, quartic + conic, three conics.  Every
/// case totals below 17, so the sextic is irreducible and reduced.
ExclusionReport decomposition_excluded_r7();

struct PlanePoint {
    Rat x, y; // affine chart z = 1
    bool operator==(const PlanePoint& o) const = default;
};

/// A general cubic pencil through 8 plane points with its discriminant.
struct PencilSample {
    std::array<PlanePoint, 8> points;
    Cubic f, g;          // integer cubics spanning the pencil lambda*f + g
    Poly discriminant;   // R(lambda), exact integer coefficients
    int degree;          // deg R <= 12
    int squarefree_degree;
    int root_count;      // complex roots with multiplicity = deg R
};

/// R(lambda) for the pencil lambda*f + g: the Macaulay resultant of the
/// three partial derivatives, a polynomial of degree at most
/// 4+4+4 = 12 in lambda recovered exactly by interpolation at 15
/// integer nodes starting at node_offset (nodes where the resultant
/// construction degenerates are skipped).  Distinct node sets give the
/// same polynomial.  Throws NonReducedPencilError when R vanishes
/// identically (every member singular, e.g. a fixed component).
Poly pencil_discriminant(const Cubic& f, const Cubic& g, long node_offset = 0);

/// Exact discriminant of the pencil of cubics through the 8 points.
///
/// The 8x10 evaluation matrix against the cubic monomials must have
/// rank 8 (points impose independent conditions); its 2-dimensional
/// kernel spans the pencil, and R(lambda) is interpolated as in
/// pencil_discriminant.
///
/// Throws DegenerateConfigurationError when the rank drops below 8 and
/// NonReducedPencilError when R vanishes identically.
PencilSample cubic_pencil_discriminant(const std::array<PlanePoint, 8>& points,
                                       long node_offset = 0);

/// Seeded sample of 8 points with small integer coordinates in general
/// position, retrying until the discriminant pipeline accepts them.
/// Deterministic in the seed across platforms.
struct SampledConfiguration {
    std::array<PlanePoint, 8> points;
    std::uint64_t seed;
    int attempts;
};

SampledConfiguration random_pencil_sample(std::uint64_t seed);

} // namespace delpezzo
