#ifndef PRIMPTS_HYPCURVE_FUNCTION_HPP
#define PRIMPTS_HYPCURVE_FUNCTION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "primpts/exactalg/linalg.hpp"
#include "primpts/hypcurve/curve.hpp"

namespace primpts {

/// f = (a(x) + b(x)*y) / den(x) with den monic. Polynomial functions have
/// den = 1; a nontrivial den is needed for functions with affine poles.
struct CurveFunction {
    RatPolynomial a;
    RatPolynomial b;
    RatPolynomial den = RatPolynomial::constant(Rational(1));

    CurveFunction() = default;
    CurveFunction(RatPolynomial a0, RatPolynomial b0) : a(std::move(a0)), b(std::move(b0)) {}
    CurveFunction(RatPolynomial a0, RatPolynomial b0, RatPolynomial d0)
        : a(std::move(a0)), b(std::move(b0)), den(std::move(d0))
    {
        normalize();
    }

    static CurveFunction constant(const Rational& c) { return {RatPolynomial::constant(c), {}}; }
    static CurveFunction x() { return {RatPolynomial::x(), {}}; }
    static CurveFunction y() { return {{}, RatPolynomial::constant(Rational(1))}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }
    bool is_constant() const { return b.is_zero() && a.degree() <= 0 && den.degree() == 0; }
    Rational constant_value() const { return a.coeff(0); }

    /// Cancels common polynomial factors and makes den monic.
    void normalize()
    {
        if (den.is_zero())
            fail(ErrorKind::DivisionByZero, "curve function with zero denominator");
        if (is_zero()) {
            den = RatPolynomial::constant(Rational(1));
            return;
        }
        if (den.degree() > 0) {
            RatPolynomial g = poly_gcd(den, a.is_zero() ? b : (b.is_zero() ? a : poly_gcd(a, b)));
            if (g.degree() > 0) {
                a = exact_div(a, g);
                b = exact_div(b, g);
                den = exact_div(den, g);
            }
        }
        Rational lc = den.leading();
        if (lc != 1) {
            Rational inv = 1 / lc;
            a *= inv;
            b *= inv;
            den *= inv;
        }
    }

    friend bool operator==(const CurveFunction& f, const CurveFunction& g)
    {
        return f.a * g.den == g.a * f.den && f.b * g.den == g.b * f.den;
    }
    friend bool operator!=(const CurveFunction& f, const CurveFunction& g) { return !(f == g); }

    std::string to_string() const
    {
        std::string num;
        if (b.is_zero()) {
            num = format(a);
        } else {
            std::size_t terms = 0;
            for (const auto& c : b.coeffs())
                terms += sgn(c) != 0;
            std::string ty;
            if (terms > 1)
                ty = "(" + format(b) + ")*y";
            else if (b.degree() == 0 && abs(b[0]) == 1)
                ty = sgn(b[0]) < 0 ? "-y" : "y";
            else
                ty = format(b) + "*y";
            if (a.is_zero())
                num = ty;
            else if (ty[0] == '-')
                num = format(a) + " - " + ty.substr(1);
            else
                num = format(a) + " + " + ty;
        }
        if (den.degree() == 0)
            return num;
        return "(" + num + ")/(" + format(den) + ")";
    }
};

inline CurveFunction operator+(const CurveFunction& f, const CurveFunction& g)
{
    if (f.den == g.den)
        return CurveFunction(f.a + g.a, f.b + g.b, f.den);
    return CurveFunction(f.a * g.den + g.a * f.den, f.b * g.den + g.b * f.den, f.den * g.den);
}
inline CurveFunction operator-(const CurveFunction& f)
{
    CurveFunction r = f;
    r.a = -r.a;
    r.b = -r.b;
    return r;
}
inline CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) { return f + (-g); }
inline CurveFunction operator*(const Rational& s, const CurveFunction& f)
{
    if (sgn(s) == 0)
        return CurveFunction{};
    CurveFunction r = f;
    r.a *= s;
    r.b *= s;
    return r;
}

inline CurveFunction mul(const HyperellipticCurve& C, const CurveFunction& f, const CurveFunction& g)
{
    return CurveFunction(f.a * g.a + f.b * g.b * C.h(), f.a * g.b + f.b * g.a, f.den * g.den);
}

/// a^2 - b^2 h, the norm of the numerator down to Q(x).
inline RatPolynomial numerator_norm(const HyperellipticCurve& C, const CurveFunction& f)
{
    return f.a * f.a - f.b * f.b * C.h();
}

inline CurveFunction inverse(const HyperellipticCurve& C, const CurveFunction& f)
{
    if (f.is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of the zero function");
    RatPolynomial n = numerator_norm(C, f);
    return CurveFunction(f.a * f.den, -(f.b * f.den), n);
}

inline CurveFunction divide(const HyperellipticCurve& C, const CurveFunction& f, const CurveFunction& g)
{
    return mul(C, f, inverse(C, g));
}

inline CurveFunction power(const HyperellipticCurve& C, const CurveFunction& f, unsigned e)
{
    CurveFunction r = CurveFunction::constant(1);
    CurveFunction b = f;
    while (e) {
        if (e & 1u)
            r = mul(C, r, b);
        e >>= 1u;
        if (e)
            b = mul(C, b, b);
    }
    return r;
}

/// Rescales so the numerator term with the largest pole order at infinity
/// has coefficient 1.
inline CurveFunction normalize_scalar(const HyperellipticCurve& C, const CurveFunction& f)
{
    if (f.is_zero())
        return f;
    const int pa = f.a.is_zero() ? -1 : 2 * f.a.degree();
    const int pb = f.b.is_zero() ? -1 : 2 * f.b.degree() + C.y_pole();
    const Rational lead = pa > pb ? f.a.leading() : f.b.leading();
    return (1 / lead) * f;
}

namespace detail {

/// Coefficient matrix of the functions over a common denominator: column j
/// holds the a- and b-coefficients of fs[j].
inline RatMatrix coefficient_matrix(const std::vector<CurveFunction>& fs)
{
    RatPolynomial common = RatPolynomial::constant(Rational(1));
    for (const auto& g : fs)
        common = (common / poly_gcd(common, g.den)) * g.den;
    std::vector<std::pair<RatPolynomial, RatPolynomial>> cols;
    std::size_t na = 0, nb = 0;
    for (const auto& g : fs) {
        RatPolynomial m = exact_div(common, g.den);
        cols.emplace_back(g.a * m, g.b * m);
        na = std::max(na, cols.back().first.size());
        nb = std::max(nb, cols.back().second.size());
    }
    RatMatrix M(na + nb, fs.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < na; ++i)
            M(i, j) = cols[j].first.coeff(i);
        for (std::size_t i = 0; i < nb; ++i)
            M(na + i, j) = cols[j].second.coeff(i);
    }
    return M;
}

} // namespace detail

/// Basis of the rational relations sum c_i * fs[i] = 0.
inline std::vector<RatVector> linear_relations(const std::vector<CurveFunction>& fs)
{
    if (fs.empty())
        return {};
    return kernel(detail::coefficient_matrix(fs));
}

/// Coordinates c with sum c_i * fs[i] = f, or nothing. The fs need not be
/// independent; free coordinates are set to zero.
inline std::optional<RatVector> span_coordinates(const std::vector<CurveFunction>& fs, const CurveFunction& f)
{
    std::vector<CurveFunction> all = fs;
    all.push_back(f);
    RatMatrix M = detail::coefficient_matrix(all);
    RatMatrix A(M.rows(), fs.size());
    RatVector rhs(M.rows());
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < fs.size(); ++c)
            A(r, c) = M(r, c);
        rhs[r] = M(r, fs.size());
    }
    return solve(A, rhs);
}

/// Substitutes f into a rational function s(z)/r(z) of the x-line.
inline CurveFunction compose_rational(const HyperellipticCurve& C, const RatPolynomial& s, const RatPolynomial& r,
                                      const CurveFunction& f)
{
    auto eval = [&](const RatPolynomial& p) {
        CurveFunction acc;
        for (std::size_t i = p.size(); i-- > 0;)
            acc = mul(C, acc, f) + CurveFunction::constant(p[i]);
        return acc;
    };
    return divide(C, eval(s), eval(r));
}

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_FUNCTION_HPP
