#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/picard.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Whether an irreducible rational curve of class c = (d; a) can exist
/// on the very general blow-up: the genus-0 moduli space is empty when
/// 3d - 1 - sum a_i < 0.  Meaningful for d >= 1 and a_i >= 0.  Every
/// admissible class automatically meets -K in 3d - sum a_i >= 1.
bool rational_class_admissible(const DivisorClass& c);

/// c . g >= 0 against every generator (nef by cone duality when the
/// generators span the curve classes).
bool is_nef_against(const DivisorClass& c, const std::vector<DivisorClass>& generators);

/// Minimum of -K.C over the GP-admissible classes with 1 <= d <= d_max
/// and 0 <= a_i <= d, scanned one representative per relabeling orbit.
/// The GP inequality makes the minimum >= 1 for every d; the scan is
/// the enumerated redundancy check up to the bound.
Int gp_scan_min(int r, int d_max);

/// The verdicts for the 10-point and 13-point blow-ups.
struct PositivityReport {
    int r = 0;
    Int k_squared;

    bool nef = false;
    std::optional<DivisorClass> nef_violation; // effective class with -K.C < 0
    bool nef_implied_by_pseff = false;

    bool pseff = true;
    std::optional<DivisorClass> pseff_violation; // moving M, M^2 >= 0, -K.M < 0

    bool rational_positive = false;
    Int scan_min;    // min -K.C over admissible classes scanned
    int scan_d_max = 0;

    // 13-point certificates
    std::optional<Int> quartic_pencil_dim; // expected_dim(4; 1^13) = 1
    std::optional<Int> cubic_system_dim;   // expected_dim(3; 1^13) = -4

    std::vector<std::string> assumptions;
};

/// Blow-up at 9 very general points plus a tenth on the unique cubic
/// through them: -K^2 = -1 and the cubic's transform (3; 1^10) is an
/// effective member of |-K| meeting -K in -1, so -K is not nef, yet
/// every GP-admissible rational class meets -K positively.  -K stays
/// pseudoeffective (it has the effective member).
PositivityReport verify_ten_point_example(int d_max = 12);

/// Blow-up at 13 very general points: the quartics through them form a
/// pencil (expected dim 1) covering a dense open set, each member
/// meeting -K in -1, so -K is not even pseudoeffective (hence not nef);
/// no cubic passes through the 13 points (expected dim -4, empty by
/// very-generality).  Rational positivity holds by the same GP scan.
PositivityReport verify_thirteen_point_example(int d_max = 12);

} // namespace delpezzo
