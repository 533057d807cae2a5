#pragma once

#include <gmpxx.h>

#include <string>

namespace delpezzo {

// All lattice and threshold arithmetic is exact: arbitrary-precision
// integers and canonical rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational p/q (q > 0, gcd(p,q) = 1).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace delpezzo
