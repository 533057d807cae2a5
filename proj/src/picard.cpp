#include "delpezzo/picard.hpp"

#include <algorithm>
#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

DivisorClass DivisorClass::hyperplane(int r) {
    return DivisorClass(1, std::vector<Int>(r, 0));
}

DivisorClass DivisorClass::exceptional(int r, int i) {
    if (i < 1 || i > r)
        throw Error("exceptional index out of range");
    DivisorClass c(0, std::vector<Int>(r, 0));
    c.a[i - 1] = -1;
    return c;
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.a.size() != y.a.size())
        throw DimensionMismatchError("divisor classes live on different lattices");
    DivisorClass z(x.d + y.d, x.a);
    for (size_t i = 0; i < z.a.size(); ++i)
        z.a[i] += y.a[i];
    return z;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.a.size() != y.a.size())
        throw DimensionMismatchError("divisor classes live on different lattices");
    DivisorClass z(x.d - y.d, x.a);
    for (size_t i = 0; i < z.a.size(); ++i)
        z.a[i] -= y.a[i];
    return z;
}

DivisorClass operator*(const Int& k, const DivisorClass& x) {
    DivisorClass z(k * x.d, x.a);
    for (auto& ai : z.a)
        ai *= k;
    return z;
}

std::string to_string(const DivisorClass& c) {
    std::ostringstream os;
    os << "(" << c.d.get_str() << ";";
    for (size_t i = 0; i < c.a.size(); ++i)
        os << (i ? "," : " ") << c.a[i].get_str();
    if (c.a.empty())
        os << " ";
    os << ")";
    return os.str();
}

SurfaceModel::SurfaceModel(int r_, Position pos) : r(r_), assumption(pos) {
    if (r < 0 || r > 9)
        throw UnsupportedSurfaceError(
            "blow-up of the plane at " + std::to_string(r_) +
            " points is outside the supported range 0..9");
}

Int intersect(const DivisorClass& c1, const DivisorClass& c2) {
    if (c1.a.size() != c2.a.size())
        throw DimensionMismatchError("divisor classes live on different lattices");
    Int s = c1.d * c2.d;
    for (size_t i = 0; i < c1.a.size(); ++i)
        s -= c1.a[i] * c2.a[i];
    return s;
}

DivisorClass anticanonical_class(int r) {
    if (r < 0)
        throw UnsupportedSurfaceError("negative number of points");
    return DivisorClass(3, std::vector<Int>(r, 1));
}

DivisorClass anticanonical(const SurfaceModel& s) {
    return anticanonical_class(s.r);
}

Int deg_anticanonical(const DivisorClass& c) {
    Int s = 3 * c.d;
    for (const auto& ai : c.a)
        s -= ai;
    return s;
}

Int arithmetic_genus(const DivisorClass& c) {
    Int g = (c.d - 1) * (c.d - 2) / 2;
    for (const auto& ai : c.a)
        g -= ai * (ai - 1) / 2;
    return g;
}

bool canonical_less(const DivisorClass& x, const DivisorClass& y) {
    if (x.d != y.d)
        return x.d < y.d;
    std::vector<Int> xs = x.a, ys = y.a;
    std::sort(xs.begin(), xs.end(), std::greater<Int>());
    std::sort(ys.begin(), ys.end(), std::greater<Int>());
    if (xs != ys)
        return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
    return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
}

DivisorClass canonical_representative(const DivisorClass& c) {
    DivisorClass z = c;
    std::sort(z.a.begin(), z.a.end(), std::greater<Int>());
    return z;
}

} // namespace delpezzo
