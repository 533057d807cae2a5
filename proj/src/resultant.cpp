#include "delpezzo/resultant.hpp"

#include <algorithm>
#include <vector>

#include "delpezzo/errors.hpp"
#include "delpezzo/qlinalg.hpp"

namespace delpezzo {

Cubic operator+(const Cubic& a, const Cubic& b) {
    Cubic s;
    for (size_t i = 0; i < 10; ++i)
        s.c[i] = a.c[i] + b.c[i];
    return s;
}

Cubic operator*(const Int& s, const Cubic& a) {
    Cubic p;
    for (size_t i = 0; i < 10; ++i)
        p.c[i] = s * a.c[i];
    return p;
}

namespace {

using Expo = std::array<int, 3>;

// Monomials of the given degree in graded-lex (x before y before z) order.
std::vector<Expo> monomials(int deg) {
    std::vector<Expo> out;
    for (int i = deg; i >= 0; --i)
        for (int j = deg - i; j >= 0; --j)
            out.push_back({i, j, deg - i - j});
    return out;
}

int index_of(const std::vector<Expo>& ms, const Expo& e) {
    auto it = std::find(ms.begin(), ms.end(), e);
    return static_cast<int>(it - ms.begin());
}

// Quadric with variables renamed through perm (x_v -> x_{perm[v]}).
Quadric permute_quadric(const Quadric& q, const std::array<int, 3>& perm,
                        const std::vector<Expo>& mono2) {
    Quadric out;
    for (size_t t = 0; t < 6; ++t) {
        Expo e = mono2[t], pe{};
        for (int v = 0; v < 3; ++v)
            pe[perm[v]] = e[v];
        out.c[index_of(mono2, pe)] = q.c[t];
    }
    return out;
}

// det(M) and det(M') of the Macaulay construction at critical degree 4.
std::pair<Int, Int> macaulay_dets(const std::array<Quadric, 3>& f,
                                  const std::vector<Expo>& mono2,
                                  const std::vector<Expo>& mono4) {
    MatZ m(15, std::vector<Int>(15, 0));
    for (size_t row = 0; row < 15; ++row) {
        Expo e = mono4[row];
        int i = e[0] >= 2 ? 0 : (e[1] >= 2 ? 1 : 2);
        Expo q = e;
        q[i] -= 2;
        for (size_t t = 0; t < 6; ++t) {
            Expo col = {q[0] + mono2[t][0], q[1] + mono2[t][1], q[2] + mono2[t][2]};
            m[row][index_of(mono4, col)] = f[i].c[t];
        }
    }
    // Non-reduced monomials (two variables squared): the extraneous minor.
    std::array<int, 3> nr = {index_of(mono4, {2, 2, 0}),
                             index_of(mono4, {2, 0, 2}),
                             index_of(mono4, {0, 2, 2})};
    MatZ mp(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            mp[i][j] = m[nr[i]][nr[j]];
    return {det(std::move(m)), det(std::move(mp))};
}

} // namespace

std::array<Quadric, 3> partial_derivatives(const Cubic& f) {
    const auto& c = f.c;
    Quadric fx, fy, fz;
    fx.c = {3 * c[0], 2 * c[1], 2 * c[2], c[3], c[4], c[5]};
    fy.c = {c[1], 2 * c[3], c[4], 3 * c[6], 2 * c[7], c[8]};
    fz.c = {c[2], c[4], 2 * c[5], c[7], 2 * c[8], 3 * c[9]};
    return {fx, fy, fz};
}

Int macaulay_resultant(const Quadric& f0, const Quadric& f1, const Quadric& f2) {
    static const std::vector<Expo> mono2 = monomials(2);
    static const std::vector<Expo> mono4 = monomials(4);
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    // A variable permutation rescales the resultant by det(P)^8 = 1, so
    // any ordering with a nonvanishing extraneous minor gives the value.
    for (const auto& p : perms) {
        std::array<Quadric, 3> f = {permute_quadric(f0, p, mono2),
                                    permute_quadric(f1, p, mono2),
                                    permute_quadric(f2, p, mono2)};
        auto [dm, dmp] = macaulay_dets(f, mono2, mono4);
        if (dmp == 0)
            continue;
        if (!mpz_divisible_p(dm.get_mpz_t(), dmp.get_mpz_t()))
            throw Error("Macaulay quotient not exact; construction is wrong");
        Int res;
        mpz_divexact(res.get_mpz_t(), dm.get_mpz_t(), dmp.get_mpz_t());
        return res;
    }
    throw DegenerateConfigurationError(
        "Macaulay minor vanishes for every variable ordering; quadric "
        "system too degenerate for the resultant construction");
}

} // namespace delpezzo
