#include "delpezzo/qpoly.hpp"

#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

} // namespace

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
    trim(c);
}

Rat Poly::operator()(const Rat& x) const {
    Rat v(0);
    for (size_t i = c.size(); i-- > 0;)
        v = v * x + c[i];
    return v;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        c[i] += b.c[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        c[i] -= b.c[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& a) {
    std::vector<Rat> c = a.c;
    for (auto& ci : c)
        ci *= s;
    return Poly(std::move(c));
}

Poly derivative(const Poly& a) {
    if (a.c.size() <= 1)
        return Poly();
    std::vector<Rat> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = Rat(static_cast<long>(i)) * a.c[i];
    return Poly(std::move(c));
}

namespace {

// Remainder of a by monic-normalized b.
Poly rem(Poly a, const Poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rat f = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[i + shift] -= f * b.c[i];
        a.c.pop_back(); // leading term cancels exactly
        while (!a.c.empty() && a.c.back() == 0)
            a.c.pop_back();
    }
    return a;
}

} // namespace

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat inv = a.leading();
        for (auto& ci : a.c)
            ci /= inv;
    }
    return a;
}

int squarefree_degree(const Poly& a) {
    if (a.is_zero())
        throw Error("squarefree degree of the zero polynomial");
    return a.degree() - gcd(a, derivative(a)).degree();
}

Poly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size())
        throw DimensionMismatchError("interpolation needs as many values as nodes");
    if (xs.empty())
        return Poly();
    // Newton's divided differences: exact and O(n^2) coefficients.
    size_t n = xs.size();
    std::vector<Rat> coef = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            Rat dx = xs[i] - xs[i - j];
            if (dx == 0)
                throw Error("interpolation nodes must be distinct");
            coef[i] = (coef[i] - coef[i - 1]) / dx;
        }
    Poly p;
    for (size_t i = n; i-- > 0;) {
        // p = p * (x - xs[i]) + coef[i]
        Poly shifted(std::vector<Rat>{-xs[i], Rat(1)});
        p = p * shifted + Poly(std::vector<Rat>{coef[i]});
    }
    return p;
}

std::string to_string(const Poly& a, const std::string& var) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        const Rat& ci = a.c[i];
        if (ci == 0)
            continue;
        if (first) {
            if (ci < 0)
                os << "-";
            first = false;
        } else {
            os << (ci < 0 ? " - " : " + ");
        }
        Rat mag = abs(ci);
        if (mag != 1 || i == 0)
            os << rat_to_string(mag);
        if (i > 0) {
            if (mag != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

} // namespace delpezzo
