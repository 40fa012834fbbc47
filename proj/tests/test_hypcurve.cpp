#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "primpts/hypcurve/jacobian.hpp"
#include "primpts/hypcurve/laurent.hpp"
#include "primpts/hypcurve/riemann_roch.hpp"

using namespace primpts;

namespace {

RatPolynomial P(std::initializer_list<long> c) { return rat_poly(c); }

const HyperellipticCurve& E() { static HyperellipticCurve c(P({1, 0, 0, 1})); return c; }
const HyperellipticCurve& G2() { static HyperellipticCurve c(P({-1, 0, 0, 0, 0, 1})); return c; }
const HyperellipticCurve& G3() { static HyperellipticCurve c(P({-2, 0, 0, 0, 0, 0, 0, 1})); return c; }

Place split(long c, long v) { return Place{PlaceKind::Split, P({-c, 1}), P({v})}; }
Place ramified(long c) { return Place{PlaceKind::Ramified, P({-c, 1}), {}}; }
Place inert(const RatPolynomial& u) { return Place{PlaceKind::Inert, u, {}}; }

CurveFunction F(std::initializer_list<long> a, std::initializer_list<long> b = {})
{
    return CurveFunction(rat_poly(a), rat_poly(b));
}

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidInput;
}

/// Elliptic-curve chord/tangent law on y^2 = x^3 + 1 with affine points only.
std::pair<Rational, Rational> ec_add(std::pair<Rational, Rational> p, std::pair<Rational, Rational> q)
{
    Rational lambda = p == q ? Rational(3 * p.first * p.first / (2 * p.second))
                             : Rational((q.second - p.second) / (q.first - p.first));
    Rational x3 = lambda * lambda - p.first - q.first;
    Rational y3 = lambda * (p.first - x3) - p.second;
    return {x3, y3};
}

/// Random affine places of low degree on C.
std::vector<Place> random_places(const HyperellipticCurve& C, std::mt19937_64& rng, int count)
{
    std::uniform_int_distribution<long> dist(-6, 6);
    std::vector<Place> out;
    while (static_cast<int>(out.size()) < count) {
        RatPolynomial u = dist(rng) % 3 == 0 ? P({dist(rng), dist(rng) % 2, 1}) : P({dist(rng), 1});
        if (!is_irreducible(u))
            continue;
        auto ps = places_over_x(C, u);
        out.push_back(ps[static_cast<std::size_t>(rng() % ps.size())]);
    }
    return out;
}

} // namespace

TEST(Curve, Construction)
{
    EXPECT_EQ(curve_new(P({1, 0, 0, 1})).genus(), 1);
    EXPECT_EQ(curve_new(P({-1, 0, 0, 0, 0, 1})).genus(), 2);
    EXPECT_EQ(kind_of([] { curve_new(P({0, 0, -1, 1})); }), ErrorKind::SingularModel);
    EXPECT_EQ(kind_of([] { curve_new(P({1, 0, 0, 0, 1})); }), ErrorKind::UnsupportedModel);
}

TEST(Places, Examples)
{
    auto a = places_over_x(E(), P({-2, 1}));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0], split(2, 3));
    EXPECT_EQ(a[1], split(2, -3));
    auto b = places_over_x(E(), P({1, 1}));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].kind, PlaceKind::Ramified);
    auto c = places_over_x(E(), P({2, 1}));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].kind, PlaceKind::Inert);
    EXPECT_EQ(c[0].degree(), 2);
    EXPECT_EQ(kind_of([] { places_over_x(E(), P({-1, 0, 1})); }), ErrorKind::InvalidInput);
}

TEST(Places, HigherDegreeSplitting)
{
    for (const auto& u : {P({-2, 0, 1}), P({1, 1, 1}), P({-3, 0, 1}), P({2, 0, 1})}) {
        for (const auto& pl : places_over_x(E(), u)) {
            EXPECT_EQ(pl.u, u);
            if (pl.kind == PlaceKind::Split) {
                EXPECT_LT(pl.v.degree(), u.degree());
                EXPECT_TRUE(divides(u, pl.v * pl.v - E().h()));
            }
        }
    }
    // x^3 = 1 mod x^2 + x + 1, so h = 2 there, which is not a square in Q(zeta3)
    EXPECT_EQ(places_over_x(E(), P({1, 1, 1}))[0].kind, PlaceKind::Inert);
    // (x + 3)^2 - (x^3 + 1) = -(x^3 - x^2 - 6x - 8), an irreducible cubic, so its places split with v = +-(x + 3)
    auto cubic = places_over_x(E(), P({-8, -6, -1, 1}));
    ASSERT_EQ(cubic.size(), 2u);
    EXPECT_EQ(cubic[0].v, P({3, 1}));
    EXPECT_EQ(cubic[1].v, P({-3, -1}));
}

TEST(Valuation, Examples)
{
    EXPECT_EQ(function_valuation(E(), CurveFunction::x(), Place::infinity()), -2);
    EXPECT_EQ(function_valuation(E(), CurveFunction::y(), Place::infinity()), -3);
    EXPECT_EQ(function_valuation(E(), F({-2, 1}), split(2, 3)), 1);
    EXPECT_EQ(function_valuation(E(), F({1, 1}), ramified(-1)), 2);
    EXPECT_EQ(function_valuation(E(), CurveFunction::y(), ramified(-1)), 1);
    EXPECT_EQ(kind_of([] { function_valuation(E(), CurveFunction{}, Place::infinity()); }), ErrorKind::InvalidInput);
    // y - 3 vanishes at (2, 3) only; (y - 3)(y + 3) = x^3 - 8 = (x - 2)(x^2 + 2x + 4)
    EXPECT_EQ(function_valuation(E(), F({-3}, {1}), split(2, 3)), 1);
    EXPECT_EQ(function_valuation(E(), F({-3}, {1}), split(2, -3)), 0);
}

TEST(Valuation, TangentLineHasDoubleZero)
{
    // tangent at (0,1) to y^2 = x^3 + 1 is y = 1: y - 1 has a triple zero at (0, 1) (flex)
    EXPECT_EQ(function_valuation(E(), F({-1}, {1}), split(0, 1)), 3);
    // tangent at (2, 3): slope 3*4/6 = 2, y - 3 - 2(x - 2) = y - 2x + 1
    EXPECT_EQ(function_valuation(E(), F({1, -2}, {1}), split(2, 3)), 2);
}

TEST(Divisors, PoleDivisorAndDegree)
{
    EXPECT_EQ(pole_divisor(E(), CurveFunction::x()), Divisor::infinity(2));
    EXPECT_EQ(function_degree(E(), CurveFunction::x()), 2);
    EXPECT_EQ(function_degree(E(), CurveFunction::y()), 3);
    EXPECT_EQ(pole_divisor(E(), F({0, 0, 1}, {1})), Divisor::infinity(4));
    EXPECT_EQ(function_degree(E(), F({0, 0, 1}, {1})), 4);
    EXPECT_EQ(kind_of([] { function_degree(E(), CurveFunction::constant(3)); }), ErrorKind::DegreeUndefined);
    EXPECT_TRUE(pole_divisor(E(), CurveFunction::constant(3)).is_zero());
}

TEST(Divisors, SumFormula)
{
    for (const auto* C : {&E(), &G2(), &G3()})
        for (const auto& f : {CurveFunction::x(), CurveFunction::y(), F({0, 0, 1}, {1}), F({-2, 1})}) {
            Divisor d = principal_divisor(*C, f);
            EXPECT_EQ(d.degree(), 0) << f.to_string();
            EXPECT_EQ(d.positive_part().degree(), function_degree(*C, f));
        }
    // a rational function with affine poles
    CurveFunction g = divide(E(), F({-3}, {1}), F({-2, 1}));
    Divisor d = principal_divisor(E(), g);
    EXPECT_EQ(d.degree(), 0);
    EXPECT_EQ(d.multiplicity(split(2, -3)), -1);
}

TEST(Divisors, FiberExamples)
{
    auto a = fiber_divisor(E(), CurveFunction::x(), 2);
    EXPECT_EQ(a.divisor, Divisor(split(2, 3), 1) + Divisor(split(2, -3), 1));
    EXPECT_TRUE(a.multiplicity_one);
    auto b = fiber_divisor(E(), CurveFunction::x(), -1);
    EXPECT_EQ(b.divisor, Divisor(ramified(-1), 2));
    EXPECT_FALSE(b.multiplicity_one);
    auto c = fiber_divisor(E(), F({0, 0, 1}), 4);
    EXPECT_EQ(c.divisor, Divisor(split(2, 3), 1) + Divisor(split(2, -3), 1) + Divisor(inert(P({2, 1})), 1));
    EXPECT_TRUE(c.multiplicity_one);
    EXPECT_EQ(c.divisor.degree(), 4);
}

TEST(Divisors, FiberDegreeMatchesFunctionDegree)
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (const auto* C : {&E(), &G2(), &G3()}) {
        int done = 0;
        while (done < 50) {
            CurveFunction f(P({dist(rng), dist(rng), dist(rng)}), P({dist(rng) % 2}));
            if (f.is_constant())
                continue;
            Rational t = make_rational(Integer(dist(rng)), Integer(1 + rng() % 3));
            EXPECT_EQ(fiber_divisor(*C, f, t).divisor.degree(), function_degree(*C, f)) << f.to_string();
            ++done;
        }
    }
}

TEST(RiemannRoch, Examples)
{
    auto four = riemann_roch_basis(E(), Divisor::infinity(4));
    ASSERT_EQ(four.dimension(), 4);
    EXPECT_EQ(four.basis[0], CurveFunction::constant(1));
    EXPECT_EQ(four.basis[1], CurveFunction::x());
    EXPECT_EQ(four.basis[2], F({0, 0, 1}));
    EXPECT_EQ(four.basis[3], CurveFunction::y());
    auto one = riemann_roch_basis(E(), Divisor::infinity(1));
    ASSERT_EQ(one.dimension(), 1);
    EXPECT_EQ(one.basis[0], CurveFunction::constant(1));
    EXPECT_EQ(riemann_roch_basis(E(), Divisor{}).dimension(), 1);
    EXPECT_EQ(kind_of([] { riemann_roch_basis(E(), Divisor::infinity(-1)); }), ErrorKind::Unsupported);
}

TEST(RiemannRoch, DimensionFormulaOnMixedDivisors)
{
    std::mt19937_64 rng(5);
    for (const auto* C : {&E(), &G2(), &G3()}) {
        const int g = C->genus();
        for (int it = 0; it < 12; ++it) {
            Divisor D;
            for (const auto& p : random_places(*C, rng, 1 + it % 3))
                D.add(p, 1 + static_cast<long>(rng() % 2));
            D.add(Place::infinity(), static_cast<long>(rng() % 4));
            if (D.degree() <= 2 * g - 2)
                D.add(Place::infinity(), 2L * g);
            auto L = riemann_roch_basis(*C, D);
            EXPECT_EQ(L.dimension(), D.degree() - g + 1) << D.to_string();
            for (const auto& f : L.basis) {
                Divisor div = principal_divisor(*C, f);
                EXPECT_TRUE((div + D).is_effective()) << f.to_string() << " in L(" << D.to_string() << ")";
            }
        }
    }
}

TEST(RiemannRoch, InfinityDimensions)
{
    for (const auto* C : {&E(), &G2(), &G3()}) {
        const int g = C->genus();
        for (int n = std::max(0, 2 * g - 1); n <= 12; ++n)
            EXPECT_EQ(riemann_roch_basis(*C, Divisor::infinity(n)).dimension(), n - g + 1);
    }
}

TEST(Jacobian, Examples)
{
    Divisor D1 = Divisor(split(2, 3), 1) + Divisor(split(2, -3), 1) - Divisor::infinity(2);
    EXPECT_TRUE(is_principal(E(), D1));
    Divisor D2 = Divisor(split(2, 3), 1) - Divisor::infinity(1);
    EXPECT_FALSE(is_principal(E(), D2));
    Divisor D3 = Divisor(split(2, 3), 6) - Divisor::infinity(6);
    EXPECT_TRUE(is_principal(E(), D3));
    EXPECT_EQ(kind_of([] { is_principal(E(), Divisor(split(2, 3), 1)); }), ErrorKind::InvalidInput);
}

TEST(Jacobian, MatchesEllipticGroupLaw)
{
    std::pair<Rational, Rational> p{2, 3};
    auto p2 = ec_add(p, p);
    EXPECT_EQ(p2, (std::pair<Rational, Rational>{0, 1}));
    Mumford m2 = cantor_reduce(E(), Divisor(split(2, 3), 2) - Divisor::infinity(2));
    EXPECT_EQ(m2.u, P({-p2.first.get_num().get_si(), 1}));
    EXPECT_EQ(m2.v, RatPolynomial::constant(p2.second));
    auto p3 = ec_add(p2, p);
    Mumford m3 = cantor_reduce(E(), Divisor(split(2, 3), 3) - Divisor::infinity(3));
    EXPECT_EQ(m3.u, RatPolynomial({-p3.first, Rational(1)}));
    EXPECT_TRUE(m3.v.is_zero());
    for (int n = 1; n < 6; ++n)
        EXPECT_FALSE(is_principal(E(), Divisor(split(2, 3), n) - Divisor::infinity(n))) << n;
}

TEST(Jacobian, InvariantUnderAddingPrincipalDivisors)
{
    std::mt19937_64 rng(3);
    for (const auto* C : {&E(), &G2()}) {
        for (int it = 0; it < 15; ++it) {
            Divisor D;
            for (const auto& p : random_places(*C, rng, 2))
                D.add(p, 1);
            D.add(Place::infinity(), -D.degree());
            const bool base = is_principal(*C, D);
            Rational c = make_rational(Integer(static_cast<long>(rng() % 11) - 5), Integer(1 + rng() % 2));
            Divisor shifted = D + principal_divisor(*C, CurveFunction(RatPolynomial{-c, Rational(1)}, {}));
            EXPECT_EQ(is_principal(*C, shifted), base);
        }
    }
}

TEST(FunctionWithDivisor, Examples)
{
    Divisor fib = Divisor(split(2, 3), 1) + Divisor(split(2, -3), 1);
    EXPECT_EQ(function_with_divisor(E(), fib, Divisor::infinity(2)), F({-2, 1}));
    EXPECT_EQ(function_with_divisor(E(), Divisor(ramified(-1), 2), Divisor::infinity(2)), F({1, 1}));
    EXPECT_EQ(kind_of([] { function_with_divisor(E(), Divisor(split(2, 3), 1), Divisor::infinity(1)); }),
              ErrorKind::NotPrincipal);
}

TEST(FunctionWithDivisor, DivisorsRoundTrip)
{
    // 2P = (0, 1) for P = (2, 3): P + P - (0,1) - inf is principal
    Divisor D0 = Divisor(split(2, 3), 2);
    Divisor Dinf = Divisor(split(0, 1), 1) + Divisor::infinity(1);
    CurveFunction f = function_with_divisor(E(), D0, Dinf);
    EXPECT_EQ(zero_divisor(E(), f), D0);
    EXPECT_EQ(pole_divisor(E(), f), Dinf);

    Divisor A = Divisor(split(2, 3), 1) + Divisor(split(2, -3), 1);
    Divisor B = Divisor(inert(P({2, 1})), 1);
    CurveFunction g = function_with_divisor(E(), A, B);
    EXPECT_EQ(zero_divisor(E(), g), A);
    EXPECT_EQ(pole_divisor(E(), g), B);
}

TEST(Laurent, ExpansionSatisfiesCurveEquation)
{
    for (const auto* C : {&E(), &G2(), &G3()}) {
        auto ex = expand_at_infinity(*C, 12);
        Laurent lhs = ex.y * ex.y;
        Laurent rhs = Laurent::constant(0, 12);
        for (std::size_t i = C->h().size(); i-- > 0;)
            rhs = rhs * ex.x + Laurent::constant(C->h()[i], 12);
        for (long e = std::max(lhs.val, rhs.val); e < std::min(lhs.end(), rhs.end()); ++e)
            EXPECT_EQ(lhs.at(e), rhs.at(e)) << e;
        // pi = x^g / y
        Laurent xg = Laurent::constant(1, 12);
        for (int i = 0; i < C->genus(); ++i)
            xg = xg * ex.x;
        Laurent check = ex.y * shifted(Laurent::constant(1, 12), 1);
        for (long e = std::max(xg.val, check.val); e < std::min(xg.end(), check.end()); ++e)
            EXPECT_EQ(xg.at(e), check.at(e));
    }
}
