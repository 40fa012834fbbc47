#ifndef PRIMPTS_HYPCURVE_VALUATION_HPP
#define PRIMPTS_HYPCURVE_VALUATION_HPP

#include <algorithm>
#include <climits>
#include <optional>

#include "primpts/exactalg/factor.hpp"
#include "primpts/hypcurve/divisor.hpp"
#include "primpts/hypcurve/function.hpp"
#include "primpts/numfield/number_field.hpp"
#include "primpts/numfield/trager.hpp"

namespace primpts {

/// Largest k with u^k | p; p must be nonzero.
inline long poly_order(const RatPolynomial& p, const RatPolynomial& u)
{
    if (p.is_zero())
        return LONG_MAX;
    long k = 0;
    RatPolynomial q = p;
    for (;;) {
        auto qr = divmod(q, u);
        if (!qr.remainder.is_zero())
            return k;
        q = std::move(qr.quotient);
        ++k;
    }
}

/// v with v^2 = h mod u^k and v = v1 mod u (Newton iteration).
inline RatPolynomial lift_square_root(const RatPolynomial& h, const RatPolynomial& u, const RatPolynomial& v1,
                                      long k)
{
    RatPolynomial v = v1 % u;
    long prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        RatPolynomial m = pow(u, static_cast<unsigned>(prec));
        RatPolynomial inv = inverse_mod(v * Rational(2), m);
        v = (v - ((v * v - h) % m) * inv) % m;
    }
    return v;
}

namespace detail {

inline long valuation_at_infinity(const HyperellipticCurve& C, const CurveFunction& f)
{
    long va = f.a.is_zero() ? LONG_MAX : -2L * f.a.degree();
    long vb = f.b.is_zero() ? LONG_MAX : -2L * f.b.degree() - C.y_pole();
    return std::min(va, vb) + 2L * f.den.degree();
}

inline long numerator_valuation(const HyperellipticCurve& C, const CurveFunction& f, const Place& P)
{
    const long oa = poly_order(f.a, P.u), ob = poly_order(f.b, P.u);
    switch (P.kind) {
    case PlaceKind::Ramified:
        return std::min(oa == LONG_MAX ? LONG_MAX : 2 * oa, ob == LONG_MAX ? LONG_MAX : 2 * ob + 1);
    case PlaceKind::Inert: return std::min(oa, ob);
    case PlaceKind::Split: {
        if (f.b.is_zero())
            return oa;
        const long bound = poly_order(numerator_norm(C, f), P.u);
        const long k = bound + 1;
        RatPolynomial m = pow(P.u, static_cast<unsigned>(k));
        RatPolynomial vk = lift_square_root(C.h(), P.u, P.v, k);
        return poly_order((f.a + f.b * vk) % m, P.u);
    }
    default: break;
    }
    fail(ErrorKind::InvalidInput, "numerator valuation needs an affine place");
}

} // namespace detail

/// v_P(f).
inline long function_valuation(const HyperellipticCurve& C, const CurveFunction& f, const Place& P)
{
    if (f.is_zero())
        fail(ErrorKind::InvalidInput, "valuation of the zero function");
    if (P.is_infinity())
        return detail::valuation_at_infinity(C, f);
    const long od = poly_order(f.den, P.u);
    return detail::numerator_valuation(C, f, P) - P.ramification() * od;
}

namespace detail {

inline void add_places_over(const HyperellipticCurve& C, const CurveFunction& f, const RatPolynomial& u,
                            Divisor& out)
{
    for (const auto& P : places_over_x(C, u))
        out.add(P, function_valuation(C, f, P));
}

inline std::vector<RatPolynomial> irreducible_factors(const RatPolynomial& p)
{
    std::vector<RatPolynomial> out;
    if (p.degree() < 1)
        return out;
    for (const auto& [g, m] : factor_over_rationals(p).factors)
        out.push_back(g);
    return out;
}

} // namespace detail

/// div(f) = zeros - poles.
inline Divisor principal_divisor(const HyperellipticCurve& C, const CurveFunction& f)
{
    if (f.is_zero())
        fail(ErrorKind::InvalidInput, "divisor of the zero function");
    Divisor d;
    std::vector<RatPolynomial> us = detail::irreducible_factors(numerator_norm(C, f) * f.den);
    for (const auto& u : us)
        detail::add_places_over(C, f, u, d);
    d.add(Place::infinity(), function_valuation(C, f, Place::infinity()));
    return d;
}

inline Divisor pole_divisor(const HyperellipticCurve& C, const CurveFunction& f)
{
    if (f.is_zero())
        fail(ErrorKind::InvalidInput, "pole divisor of the zero function");
    Divisor d;
    for (const auto& u : detail::irreducible_factors(f.den))
        for (const auto& P : places_over_x(C, u)) {
            long v = function_valuation(C, f, P);
            if (v < 0)
                d.add(P, -v);
        }
    long vi = function_valuation(C, f, Place::infinity());
    if (vi < 0)
        d.add(Place::infinity(), -vi);
    return d;
}

inline Divisor zero_divisor(const HyperellipticCurve& C, const CurveFunction& f)
{
    if (f.is_zero())
        fail(ErrorKind::InvalidInput, "zero divisor of the zero function");
    Divisor d;
    for (const auto& u : detail::irreducible_factors(numerator_norm(C, f)))
        for (const auto& P : places_over_x(C, u)) {
            long v = function_valuation(C, f, P);
            if (v > 0)
                d.add(P, v);
        }
    long vi = function_valuation(C, f, Place::infinity());
    if (vi > 0)
        d.add(Place::infinity(), vi);
    return d;
}

/// Degree of f as a map to the projective line.
inline long function_degree(const HyperellipticCurve& C, const CurveFunction& f)
{
    if (f.is_zero() || f.is_constant())
        fail(ErrorKind::DegreeUndefined, "constant functions have no degree");
    if (f.is_polynomial())
        return -function_valuation(C, f, Place::infinity());
    return pole_divisor(C, f).degree();
}

struct FiberDivisor {
    Divisor divisor;
    bool multiplicity_one = false;
};

/// f^*(t), the zeros of f - t.
inline FiberDivisor fiber_divisor(const HyperellipticCurve& C, const CurveFunction& f, const Rational& t)
{
    if (f.is_zero() || f.is_constant())
        fail(ErrorKind::InvalidInput, "fiber of a constant function");
    FiberDivisor out;
    out.divisor = zero_divisor(C, f - CurveFunction::constant(t));
    out.multiplicity_one = out.divisor.is_multiplicity_one();
    return out;
}

/// Minimal polynomial over Q of the value f(P), or nothing if P is a pole.
inline std::optional<RatPolynomial> value_minpoly(const HyperellipticCurve& C, const CurveFunction& f, const Place& P)
{
    const RatPolynomial z = RatPolynomial::x();
    if (f.is_zero())
        return z;
    if (function_valuation(C, f, P) < 0)
        return std::nullopt;
    if (P.is_infinity()) {
        if (2 * f.a.degree() == 2 * f.den.degree() && !f.a.is_zero())
            return z - RatPolynomial::constant(f.a.leading() / f.den.leading());
        return z;
    }
    const long s = poly_order(f.den, P.u);
    const RatPolynomial us = pow(P.u, static_cast<unsigned>(s));
    const RatPolynomial den1 = exact_div(f.den, us);
    NumberField K = NumberField::unchecked(P.u);
    const FieldElement dinv = K.element(den1).inverse();
    if (P.kind == PlaceKind::Split) {
        const long k = s + 1;
        RatPolynomial m = pow(P.u, static_cast<unsigned>(k));
        RatPolynomial w = (f.a + f.b * lift_square_root(C.h(), P.u, P.v, k)) % m;
        FieldElement val = K.element(exact_div(w, us)) * dinv;
        return minimal_polynomial(val);
    }
    FieldElement alpha = K.element(exact_div(f.a, us)) * dinv;
    FieldElement beta = K.element(exact_div(f.b, us)) * dinv;
    if (P.kind == PlaceKind::Ramified || beta.is_zero())
        return minimal_polynomial(alpha);
    NFPolynomial q{alpha * alpha - beta * beta * K.element(C.h()), -(alpha * Rational(2)), K.one()};
    return squarefree_part(norm_over_q(q, K)).monic();
}

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_VALUATION_HPP
