#ifndef PRIMPTS_PROSPECT_FIBER_HPP
#define PRIMPTS_PROSPECT_FIBER_HPP

#include <optional>
#include <string>
#include <vector>

#include "primpts/hypcurve/valuation.hpp"
#include "primpts/numfield/primitivity.hpp"

namespace primpts {

/// Polynomial presenting the fiber f = t. For b != 0 its roots are the
/// x-coordinates of the fiber; for b = 0 they are the values of x + lambda*y.
struct FiberPresentation {
    RatPolynomial poly;
    long lambda = 0; // 0 when x itself is the primitive element
    bool clean = true; // squarefree of full degree
};

namespace detail {

inline RatPolynomial strip_common(RatPolynomial F, const RatPolynomial& den)
{
    if (den.degree() < 1)
        return F;
    for (RatPolynomial g = poly_gcd(F, den); g.degree() > 0; g = poly_gcd(F, den))
        F = exact_div(F, g);
    return F;
}

/// Res_x(A(x), (z - x)^2 - lambda^2 h(x)) as a polynomial in z.
inline RatPolynomial eliminate_primitive_element(const RatPolynomial& A, const RatPolynomial& h, long lambda)
{
    const int n = 2 * A.degree();
    const RatPolynomial l2h = h * Rational(lambda * lambda);
    std::vector<Rational> zs, vs;
    for (int k = 0; k <= n; ++k) {
        Rational z(k);
        RatPolynomial q = RatPolynomial{z * z, Rational(-2) * z, Rational(1)} - l2h;
        zs.push_back(z);
        vs.push_back(resultant(A, q));
    }
    return interpolate(zs, vs);
}

} // namespace detail

/// Fiber polynomial of f at t, made monic. Raises DegeneratePresentation when
/// no x + lambda*y with lambda <= 2d separates a clean b = 0 fiber.
inline FiberPresentation fiber_polynomial(const HyperellipticCurve& C, const CurveFunction& f, const Rational& t)
{
    if (f.is_constant())
        fail(ErrorKind::InvalidInput, "fiber polynomial of a constant function");
    const long d = function_degree(C, f);
    FiberPresentation out;
    const RatPolynomial A = f.a - f.den * t;
    if (!f.b.is_zero()) {
        RatPolynomial F = detail::strip_common(A * A - f.b * f.b * C.h(), f.den);
        out.poly = F.monic();
        out.clean = out.poly.degree() == d && is_squarefree(out.poly) && poly_gcd(out.poly, f.b).degree() == 0;
        return out;
    }
    RatPolynomial Ax = detail::strip_common(A, f.den);
    if (Ax.degree() * 2 != d || !is_squarefree(Ax) || poly_gcd(Ax, C.h()).degree() > 0) {
        out.clean = false;
        out.poly = Ax.is_zero() ? RatPolynomial{} : Ax.monic();
        return out;
    }
    for (long lambda = 1; lambda <= 2 * d; ++lambda) {
        RatPolynomial R = detail::eliminate_primitive_element(Ax, C.h(), lambda);
        if (R.degree() == d && is_squarefree(R)) {
            out.poly = R.monic();
            out.lambda = lambda;
            return out;
        }
    }
    fail(ErrorKind::DegeneratePresentation, "no primitive element x + l*y with l <= " + std::to_string(2 * d));
}

enum class SpecializationStatus { Reducible, BranchLike, Irreducible, Degenerate };

inline std::string to_string(SpecializationStatus s)
{
    switch (s) {
    case SpecializationStatus::Reducible: return "Reducible";
    case SpecializationStatus::BranchLike: return "BranchLike";
    case SpecializationStatus::Irreducible: return "Irreducible";
    case SpecializationStatus::Degenerate: return "DegeneratePresentation";
    }
    return "Unknown";
}

struct Specialization {
    Rational t;
    RatPolynomial fiber_poly;
    long lambda = 0;
    SpecializationStatus status = SpecializationStatus::BranchLike;
    std::vector<RatPolynomial> factors; // Reducible only
    std::optional<PrimitivityCertificate> cert; // Irreducible only
};

/// Classifies one fiber. With paranoid set, Auto certificates are re-derived
/// with the general algorithm and a disagreement raises VerificationFailure.
inline Specialization specialize(const HyperellipticCurve& C, const CurveFunction& f, const Rational& t,
                                 bool paranoid = false, std::uint64_t seed = 0)
{
    Specialization s;
    s.t = t;
    FiberPresentation fp;
    try {
        fp = fiber_polynomial(C, f, t);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegeneratePresentation)
            throw;
        s.status = SpecializationStatus::Degenerate;
        return s;
    }
    s.fiber_poly = fp.poly;
    s.lambda = fp.lambda;
    if (!fp.clean) {
        s.status = SpecializationStatus::BranchLike;
        return s;
    }
    FactorList fl = factor_over_rationals(fp.poly, seed);
    if (!fl.is_irreducible()) {
        s.status = SpecializationStatus::Reducible;
        for (const auto& [g, m] : fl.factors)
            for (int i = 0; i < m; ++i)
                s.factors.push_back(g);
        return s;
    }
    s.status = SpecializationStatus::Irreducible;
    s.cert = is_primitive_field(fp.poly, PrimitivityPolicy::Auto, seed);
    if (paranoid && s.cert->method != CertMethod::PrincipalSubfields) {
        auto general = is_primitive_field(fp.poly, PrimitivityPolicy::ForceGeneral, seed);
        if (general.verdict != s.cert->verdict)
            fail(ErrorKind::VerificationFailure, "certificate methods disagree on " + format(fp.poly));
    }
    return s;
}

} // namespace primpts

#endif // PRIMPTS_PROSPECT_FIBER_HPP
