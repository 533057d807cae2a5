#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// A divisor class d*H - sum a_i * E_i on the blow-up of the plane at
/// r points, stored against the basis (H, E_1, ..., E_r) of the Picard
/// lattice.  With this sign convention the strict transform of a plane
/// curve of degree d with multiplicity a_i at the i-th point reads off
/// directly as (d; a_1, ..., a_r), and the exceptional curve E_i is
/// (0; ..., -1, ...).
struct DivisorClass {
    Int d;
    std::vector<Int> a;

    DivisorClass() : d(0) {}
    DivisorClass(Int degree, std::vector<Int> mults)
        : d(std::move(degree)), a(std::move(mults)) {}

    /// Number of blown-up points of the ambient lattice.
    int points() const { return static_cast<int>(a.size()); }

    /// The hyperplane (line pullback) class H on a rank-(1+r) lattice.
    static DivisorClass hyperplane(int r);

    /// The exceptional class E_i (1-based index, 1 <= i <= r).
    static DivisorClass exceptional(int r, int i);

    bool operator==(const DivisorClass& o) const = default;
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator*(const Int& k, const DivisorClass& x);

/// "(d; a1,a2,...)" — used by the CLI text output and error messages.
std::string to_string(const DivisorClass& c);

/// Position assumption for the blown-up points.  VeryGeneral
/// additionally activates the emptiness conclusions that a plain
/// dimension count cannot give (countably many closed conditions
/// excluded instead of finitely many).
enum class Position { General, VeryGeneral };

/// The blow-up X_r of the plane at r points.  r <= 8 is the del Pezzo
/// range; r = 9 is admitted only as the auxiliary lattice used for nef
/// thresholds and the degenerating family.
struct SurfaceModel {
    int r = 0;
    Position assumption = Position::General;

    explicit SurfaceModel(int r_, Position pos = Position::General);
};

/// Intersection number d1*d2 - sum a1_i*a2_i of the standard form
/// diag(1, -1, ..., -1).  Symmetric and bilinear.
/// Throws DimensionMismatchError when the lattices differ.
Int intersect(const DivisorClass& c1, const DivisorClass& c2);

/// The anticanonical class (3; 1, ..., 1) with r entries.
DivisorClass anticanonical_class(int r);
DivisorClass anticanonical(const SurfaceModel& s);

/// -K . c = 3d - sum a_i.
Int deg_anticanonical(const DivisorClass& c);

/// Adjunction genus (c.c + c.K)/2 + 1, always an integer for integral
/// classes; equals (d-1)(d-2)/2 - sum a_i(a_i-1)/2.
Int arithmetic_genus(const DivisorClass& c);

/// Canonical ordering: by degree, then by the multiplicity multiset
/// (sorted descending, compared lexicographically), then by the raw
/// multiplicity vector.  Class lists sorted this way are reproducible
/// byte for byte.
bool canonical_less(const DivisorClass& x, const DivisorClass& y);

/// The same class with multiplicities sorted descending: the canonical
/// representative of its orbit under relabeling of the blown-up points.
DivisorClass canonical_representative(const DivisorClass& c);

} // namespace delpezzo
