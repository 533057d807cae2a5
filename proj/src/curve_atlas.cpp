#include "delpezzo/curve_atlas.hpp"

#include <algorithm>

#include "delpezzo/errors.hpp"
#include "delpezzo/linear_systems.hpp"

namespace delpezzo {

bool is_minus_one_class(const DivisorClass& c) {
    return intersect(c, c) == -1 && deg_anticanonical(c) == 1;
}

namespace {

// Depth-first fill of the multiplicity slots for fixed d, pruning on
// the running sum and sum of squares.  Targets: sum = 3d - 1,
// sumsq = d^2 + 1.
void search_slots(int r, int slot, long sum_left, long sumsq_left,
                  std::vector<Int>& a, const Int& d,
                  std::vector<DivisorClass>& out) {
    int k = r - slot;
    if (k == 0) {
        if (sum_left == 0 && sumsq_left == 0)
            out.emplace_back(d, a);
        return;
    }
    // Remaining entries lie in [-1, 3]: bounds on the achievable sums,
    // plus Cauchy-Schwarz (sum_left)^2 <= k * sumsq_left.
    if (sum_left < -k || sum_left > 3L * k)
        return;
    if (sumsq_left < 0 || sumsq_left > 9L * k)
        return;
    if (sum_left * sum_left > static_cast<long>(k) * sumsq_left)
        return;
    for (long v = -1; v <= 3; ++v) {
        a[slot] = v;
        search_slots(r, slot + 1, sum_left - v, sumsq_left - v * v, a, d, out);
    }
    a[slot] = 0;
}

} // namespace

std::vector<DivisorClass> enumerate_minus_one_classes(int r) {
    if (r < 0 || r > 8)
        throw UnsupportedSurfaceError(
            "(-1)-class enumeration needs 0 <= r <= 8; X_9 and beyond carry "
            "infinitely many such classes");
    std::vector<DivisorClass> out;
    std::vector<Int> a(r, 0);
    for (long d = 0; d <= 7; ++d)
        search_slots(r, 0, 3 * d - 1, d * d + 1, a, Int(d), out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

MoriGenerators mori_generators(int r) {
    if (r < 0 || r > 8)
        throw UnsupportedSurfaceError("Mori generators available for 0 <= r <= 8 only");
    MoriGenerators g;
    g.r = r;
    if (r == 0) {
        g.classes.push_back(DivisorClass::hyperplane(0));
    } else if (r == 1) {
        g.classes.push_back(DivisorClass::exceptional(1, 1));
        g.classes.push_back(DivisorClass(1, {1})); // H - E1, the ruling
    } else {
        g.classes = enumerate_minus_one_classes(r);
    }
    return g;
}

std::vector<DivisorClass> distinguished_curves_through(int r, const PointSpec& p) {
    validate_point_spec(r, p);
    switch (p.kind) {
    case PointSpec::Kind::General:
        return {};
    case PointSpec::Kind::OnDistinguished:
        return {p.cls};
    case PointSpec::Kind::AnticanonicalNode:
        throw InvalidPointSpecError(
            "node points have no distinguished (-1)-curve; the nodal cubic "
            "is handled by the r = 8 Seshadri path");
    }
    return {};
}

bool bezout_compatible(const Int& d, const std::vector<Int>& sorted_desc) {
    size_t n = sorted_desc.size();
    if (n >= 2 && sorted_desc[0] + sorted_desc[1] > d)
        return false;
    if (n >= 5) {
        Int five = 0;
        for (size_t i = 0; i < 5; ++i)
            five += sorted_desc[i];
        if (five > 2 * d)
            return false;
    }
    if (n >= 7) {
        Int seven = sorted_desc[0];
        for (size_t i = 0; i < 7; ++i)
            seven += sorted_desc[i];
        if (seven > 3 * d)
            return false;
    }
    return true;
}

namespace {

// Non-increasing multiplicity vectors 0 <= a_i <= min(prev, d).  The
// feasibility tests run at the leaf only: a (-1)-class is allowed to
// violate the Bezout filters (the line through two points is the very
// line the pair filter intersects against).
void fill_candidates(int r, int slot, const Int& d, std::vector<Int>& a,
                     std::vector<DivisorClass>& out) {
    if (slot == r) {
        DivisorClass c(d, a);
        if (is_minus_one_class(c) ||
            (expected_dim_class(c) >= 0 && bezout_compatible(d, a)))
            out.push_back(c);
        return;
    }
    Int hi = slot == 0 ? d : a[slot - 1];
    for (Int v = hi; v >= 0; --v) {
        a[slot] = v;
        fill_candidates(r, slot + 1, d, a, out);
    }
    a[slot] = 0;
}

} // namespace

std::vector<DivisorClass> effective_candidates(int r, int d_max) {
    if (r < 0)
        throw UnsupportedSurfaceError("negative number of points");
    if (d_max < 1)
        throw Error("effective_candidates requires d_max >= 1");
    std::vector<DivisorClass> out;
    std::vector<Int> a(r, 0);
    for (long d = 1; d <= d_max; ++d)
        fill_candidates(r, 0, Int(d), a, out);
    if (r >= 1) {
        DivisorClass e(0, std::vector<Int>(r, 0));
        e.a[r - 1] = -1; // representative of the exceptional orbit
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace delpezzo
