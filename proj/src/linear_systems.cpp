#include "delpezzo/linear_systems.hpp"

#include <random>

#include "delpezzo/errors.hpp"
#include "delpezzo/qlinalg.hpp"

namespace delpezzo {

LinearSystemSpec::LinearSystemSpec(Int degree, std::vector<Int> ms)
    : d(std::move(degree)), mults(std::move(ms)) {
    if (d < 1)
        throw Error("linear system needs plane degree >= 1");
    for (const auto& m : mults)
        if (m < 1)
            throw Error("assigned multiplicities must be >= 1");
}

Int expected_dim(const LinearSystemSpec& spec) {
    Int dim = spec.d * (spec.d + 3) / 2;
    for (const auto& m : spec.mults)
        dim -= m * (m + 1) / 2;
    return dim;
}

Int expected_dim_class(const DivisorClass& c) {
    if (c.d < 1)
        throw Error("expected dimension needs plane degree >= 1");
    Int dim = c.d * (c.d + 3) / 2;
    for (const auto& a : c.a) {
        if (a < 0)
            throw Error("expected dimension needs multiplicities >= 0");
        dim -= a * (a + 1) / 2;
    }
    return dim;
}

bool nonempty_at_general_points(const LinearSystemSpec& spec) {
    return expected_dim(spec) >= 0;
}

bool bezout_mult_bound(const Int& d, const Int& aux_degree, const Int& mult_sum) {
    if (d < 1 || aux_degree < 1)
        throw Error("Bezout bound needs positive degrees");
    return mult_sum <= d * aux_degree;
}

Int component_mult_budget(const Int& k) {
    if (k < 1)
        throw Error("component degree must be >= 1");
    if (k == 1)
        return 2;
    if (k == 2)
        return 5;
    return 3 * k - 1;
}

ExclusionReport decomposition_excluded_r7() {
    ExclusionReport rep;
    rep.required_total = 7 * 2 + 3; // mult 2 at x_1..x_7 plus mult 3 at x
    auto make_case = [&](std::string name, std::vector<Int> degrees) {
        ExclusionCase c;
        c.name = std::move(name);
        c.degrees = std::move(degrees);
        c.total_bound = 0;
        for (const auto& k : c.degrees) {
            c.bounds.push_back(component_mult_budget(k));
            c.total_bound += c.bounds.back();
        }
        c.excluded = c.total_bound < rep.required_total;
        return c;
    };
    rep.cases.push_back(make_case("two cubics", {3, 3}));
    rep.cases.push_back(make_case("quintic and line", {5, 1}));
    rep.cases.push_back(make_case("quartic and conic", {4, 2}));
    rep.cases.push_back(make_case("three conics", {2, 2, 2}));
    rep.all_excluded = true;
    for (const auto& c : rep.cases)
        rep.all_excluded = rep.all_excluded && c.excluded;
    return rep;
}

namespace {

// Coefficient vector of the pencil member lambda*f + g.
Cubic pencil_member(const Cubic& f, const Cubic& g, const Int& lambda) {
    return lambda * f + g;
}

// Row of the evaluation matrix: the 10 cubic monomials at (x, y, 1),
// graded-lex order matching Cubic.
std::vector<Rat> cubic_monomials_at(const PlanePoint& p) {
    const Rat &x = p.x, &y = p.y;
    return {x * x * x, x * x * y, x * x, x * y * y, x * y,
            x,         y * y * y, y * y, y,         Rat(1)};
}

// Clears denominators and content, turning a rational kernel vector
// into a primitive integer cubic.
Cubic to_integer_cubic(const std::vector<Rat>& v) {
    Int den = 1;
    for (const auto& q : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    Cubic c;
    Int content = 0;
    for (size_t i = 0; i < 10; ++i) {
        c.c[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.c[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& ci : c.c)
            mpz_divexact(ci.get_mpz_t(), ci.get_mpz_t(), content.get_mpz_t());
    return c;
}

} // namespace

Poly pencil_discriminant(const Cubic& f, const Cubic& g, long node_offset) {
    // R(lambda) has degree <= 12; 15 nodes overdetermine it, so a
    // degree-13 or -14 interpolant would expose a construction bug.
    std::vector<Rat> xs, ys;
    bool any_nonzero = false;
    long node = node_offset;
    long inspected = 0;
    while (xs.size() < 15) {
        if (++inspected > 60)
            throw DegenerateConfigurationError(
                "could not collect 15 usable interpolation nodes");
        Int lambda(node);
        ++node;
        Cubic member = pencil_member(f, g, lambda);
        auto grad = partial_derivatives(member);
        Int value;
        try {
            value = macaulay_resultant(grad[0], grad[1], grad[2]);
        } catch (const DegenerateConfigurationError&) {
            continue; // measure-zero node; take the next one
        }
        xs.emplace_back(lambda);
        ys.emplace_back(value);
        any_nonzero = any_nonzero || value != 0;
    }
    if (!any_nonzero)
        throw NonReducedPencilError(
            "every member of the pencil is singular; the discriminant "
            "vanishes identically");
    Poly r = lagrange_interpolate(xs, ys);
    if (r.degree() > 12)
        throw Error("interpolated discriminant exceeds degree 12; "
                    "resultant evaluation is inconsistent");
    return r;
}

PencilSample cubic_pencil_discriminant(const std::array<PlanePoint, 8>& points,
                                       long node_offset) {
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = i + 1; j < 8; ++j)
            if (points[i] == points[j])
                throw DegenerateConfigurationError("pencil sample points must be distinct");

    MatQ eval;
    for (const auto& p : points)
        eval.push_back(cubic_monomials_at(p));
    auto basis = kernel(eval);
    if (basis.size() != 2)
        throw DegenerateConfigurationError(
            "the 8 points impose only rank " + std::to_string(10 - basis.size()) +
            " conditions on cubics; need rank 8");

    PencilSample s;
    s.points = points;
    s.f = to_integer_cubic(basis[0]);
    s.g = to_integer_cubic(basis[1]);
    s.discriminant = pencil_discriminant(s.f, s.g, node_offset);
    s.degree = s.discriminant.degree();
    s.squarefree_degree = squarefree_degree(s.discriminant);
    s.root_count = s.degree;
    return s;
}

SampledConfiguration random_pencil_sample(std::uint64_t seed) {
    // mt19937_64 with explicit modulo keeps the stream identical across
    // platforms (uniform_int_distribution is implementation-defined).
    std::mt19937_64 rng(seed);
    auto coord = [&rng]() { return Rat(static_cast<long>(rng() % 19) - 9); };
    SampledConfiguration out;
    out.seed = seed;
    for (out.attempts = 1; out.attempts <= 200; ++out.attempts) {
        std::array<PlanePoint, 8> pts;
        bool distinct = true;
        for (auto& p : pts) {
            p.x = coord();
            p.y = coord();
        }
        for (size_t i = 0; i < 8 && distinct; ++i)
            for (size_t j = i + 1; j < 8; ++j)
                if (pts[i] == pts[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct)
            continue;
        try {
            PencilSample s = cubic_pencil_discriminant(pts);
            if (s.degree == 12 && s.squarefree_degree == 12) {
                out.points = pts;
                return out;
            }
        } catch (const DegenerateConfigurationError&) {
        } catch (const NonReducedPencilError&) {
        }
    }
    throw DegenerateConfigurationError(
        "no general-position sample found in 200 attempts; seed " +
        std::to_string(seed));
}

} // namespace delpezzo
