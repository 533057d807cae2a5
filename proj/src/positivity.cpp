#include "delpezzo/positivity.hpp"

#include "delpezzo/errors.hpp"
#include "delpezzo/linear_systems.hpp"

namespace delpezzo {

bool rational_class_admissible(const DivisorClass& c) {
    Int s = 3 * c.d - 1;
    for (const auto& ai : c.a)
        s -= ai;
    return s >= 0;
}

bool is_nef_against(const DivisorClass& c, const std::vector<DivisorClass>& generators) {
    for (const auto& g : generators)
        if (intersect(c, g) < 0)
            return false;
    return true;
}

namespace {

// Admissible multiplicity multisets have sum <= 3d - 1, so the search
// space is a set of bounded partitions, tiny even for d_max = 12.
void scan_admissible(int r, int slot, const Int& d, Int sum_left,
                     std::vector<Int>& a, Int& best, bool& seen) {
    if (slot == r) {
        DivisorClass c(d, a);
        // sum a_i <= 3d - 1 held throughout, so c is admissible.
        Int deg = deg_anticanonical(c);
        if (!seen || deg < best) {
            best = deg;
            seen = true;
        }
        return;
    }
    Int hi = slot == 0 ? d : a[slot - 1];
    if (hi > sum_left)
        hi = sum_left;
    for (Int v = hi; v >= 0; --v) {
        a[slot] = v;
        scan_admissible(r, slot + 1, d, sum_left - v, a, best, seen);
    }
    a[slot] = 0;
}

} // namespace

Int gp_scan_min(int r, int d_max) {
    if (r < 1 || d_max < 1)
        throw Error("GP scan needs r >= 1 and d_max >= 1");
    Int best = 0;
    bool seen = false;
    std::vector<Int> a(r, 0);
    for (long d = 1; d <= d_max; ++d)
        scan_admissible(r, 0, Int(d), Int(3 * d - 1), a, best, seen);
    if (!seen)
        throw Error("GP scan saw no admissible class; bounds are wrong");
    return best;
}

PositivityReport verify_ten_point_example(int d_max) {
    PositivityReport rep;
    rep.r = 10;
    DivisorClass k = anticanonical_class(10);
    rep.k_squared = intersect(k, k); // 9 - 10 = -1

    // The strict transform of the cubic: effective because the tenth
    // point was chosen on it, and -K.C' = C'^2 = -1 < 0.
    DivisorClass cubic = anticanonical_class(10); // (3; 1^10) = C' = -K
    rep.nef = is_nef_against(k, {cubic});
    if (!rep.nef)
        rep.nef_violation = cubic;

    // |-K| contains C' itself, so -K stays pseudoeffective.
    rep.pseff = true;

    rep.scan_d_max = d_max;
    rep.scan_min = gp_scan_min(10, d_max);
    rep.rational_positive = rep.scan_min >= 1;

    rep.assumptions = {
        "the first 9 points are very general; the tenth lies on the "
        "unique cubic through them, so (3; 1^10) is effective",
        "GP admissibility governs rational classes (very general points)"};
    return rep;
}

PositivityReport verify_thirteen_point_example(int d_max) {
    PositivityReport rep;
    rep.r = 13;
    DivisorClass k = anticanonical_class(13);
    rep.k_squared = intersect(k, k); // 9 - 13 = -4

    DivisorClass quartic(4, std::vector<Int>(13, 1));
    DivisorClass cubic(3, std::vector<Int>(13, 1));
    rep.quartic_pencil_dim = expected_dim_class(quartic); // 14 - 13 = 1
    rep.cubic_system_dim = expected_dim_class(cubic);     // 9 - 13 = -4

    // The quartics form a pencil sweeping a dense open set; each member
    // meets -K in -1, so no effective class can limit to -K.
    Int deg = intersect(k, quartic);
    if (*rep.quartic_pencil_dim >= 1 && intersect(quartic, quartic) >= 0 && deg < 0) {
        rep.pseff = false;
        rep.pseff_violation = quartic;
    }

    // Failing pseudoeffectivity already fails nefness; the moving class
    // doubles as the direct certificate (-K.M = -1 with M effective).
    rep.nef = rep.pseff;
    if (!rep.nef) {
        rep.nef_violation = quartic;
        rep.nef_implied_by_pseff = true;
    }

    rep.scan_d_max = d_max;
    rep.scan_min = gp_scan_min(13, d_max);
    rep.rational_positive = rep.scan_min >= 1;

    rep.assumptions = {
        "the 13 points are very general: the quartics through them form "
        "a pencil and no cubic contains them",
        "GP admissibility governs rational classes (very general points)"};
    return rep;
}

} // namespace delpezzo
