#ifndef PRIMPTS_HYPCURVE_LAURENT_HPP
#define PRIMPTS_HYPCURVE_LAURENT_HPP

#include <algorithm>
#include <vector>

#include "primpts/hypcurve/function.hpp"

namespace primpts {

/// Truncated Laurent series sum c[i] * pi^(val + i), exact below val + c.size().
struct Laurent {
    long val = 0;
    std::vector<Rational> c;

    long end() const { return val + static_cast<long>(c.size()); }
    Rational at(long e) const
    {
        if (e < val || e >= end())
            return Rational(0);
        return c[static_cast<std::size_t>(e - val)];
    }

    static Laurent constant(const Rational& v, long precision)
    {
        Laurent r;
        r.c.assign(static_cast<std::size_t>(precision), Rational(0));
        if (precision > 0)
            r.c[0] = v;
        return r;
    }
};

inline Laurent operator+(const Laurent& a, const Laurent& b)
{
    Laurent r;
    r.val = std::min(a.val, b.val);
    const long e = std::min(a.end(), b.end());
    for (long k = r.val; k < e; ++k)
        r.c.push_back(a.at(k) + b.at(k));
    return r;
}

inline Laurent operator*(const Rational& s, Laurent a)
{
    for (auto& v : a.c)
        v *= s;
    return a;
}

inline Laurent operator*(const Laurent& a, const Laurent& b)
{
    Laurent r;
    r.val = a.val + b.val;
    const std::size_t n = std::min(a.c.size(), b.c.size());
    r.c.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.c[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

/// Shift by pi^k.
inline Laurent shifted(Laurent a, long k)
{
    a.val += k;
    return a;
}

/// Inverse of a power series with nonzero constant term.
inline std::vector<Rational> series_inverse(const std::vector<Rational>& a)
{
    if (a.empty() || sgn(a[0]) == 0)
        fail(ErrorKind::DivisionByZero, "series inverse needs a unit");
    std::vector<Rational> b(a.size());
    const Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational s = 0;
        for (std::size_t j = 1; j <= n; ++j)
            s += a[j] * b[n - j];
        b[n] = -s * inv0;
    }
    return b;
}

/// a^(1/k) for a power series with a[0] = 1.
inline std::vector<Rational> series_root(const std::vector<Rational>& a, long k)
{
    if (a.empty() || a[0] != 1)
        fail(ErrorKind::InvalidInput, "series root needs constant term 1");
    const Rational alpha = make_rational(Integer(1), Integer(k));
    std::vector<Rational> b(a.size());
    b[0] = 1;
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational s = 0;
        for (std::size_t j = 1; j <= n; ++j)
            s += ((alpha + 1) * static_cast<long>(j) - static_cast<long>(n)) * a[j] * b[n - j];
        b[n] = s / static_cast<long>(n);
    }
    return b;
}

/// Expansions of x and y at infinity in the uniformizer pi = x^g / y.
struct InfinityExpansion {
    Laurent x;
    Laurent y;
    long precision = 0;
};

inline InfinityExpansion expand_at_infinity(const HyperellipticCurve& C, long precision)
{
    const int g = C.genus();
    const RatPolynomial& h = C.h();
    const Rational lc = h.leading();
    const auto n = static_cast<std::size_t>(precision);
    // X = pi^2 x solves X = (1 - sum_{i<=2g} h_i pi^(2+4g-2i) X^(i-2g)) / lc
    std::vector<Rational> X(n, Rational(0));
    X[0] = 1 / lc;
    for (long it = 0; it <= precision / 2 + 1; ++it) {
        std::vector<Rational> Xinv = series_inverse(X);
        std::vector<Rational> next(n, Rational(0));
        next[0] = 1;
        std::vector<Rational> pw(n, Rational(0));
        pw[0] = 1; // Xinv^(2g - i), built from i = 2g downward
        for (int i = 2 * g; i >= 0; --i) {
            const std::size_t shift = static_cast<std::size_t>(2 + 4 * g - 2 * i);
            const Rational& hi = h.coeff(static_cast<std::size_t>(i));
            if (sgn(hi) != 0)
                for (std::size_t k = 0; k + shift < n; ++k)
                    next[k + shift] -= hi * pw[k];
            Laurent a{0, pw}, b{0, Xinv};
            pw = (a * b).c;
        }
        for (auto& v : next)
            v /= lc;
        X = std::move(next);
    }
    InfinityExpansion e;
    e.precision = precision;
    e.x = Laurent{-2, X};
    Laurent Xg = Laurent::constant(1, precision);
    for (int i = 0; i < g; ++i)
        Xg = Xg * Laurent{0, X};
    e.y = Laurent{-2 * g - 1, Xg.c};
    return e;
}

/// Expansion of a polynomial function a(x) + b(x) y at infinity.
inline Laurent expand_function(const InfinityExpansion& E, const CurveFunction& f)
{
    if (!f.is_polynomial())
        fail(ErrorKind::InvalidInput, "expansion at infinity implemented for polynomial functions");
    auto horner = [&](const RatPolynomial& p) {
        Laurent acc = Laurent::constant(0, E.precision);
        for (std::size_t i = p.size(); i-- > 0;)
            acc = acc * E.x + Laurent::constant(p[i], E.precision);
        return acc;
    };
    Laurent r = horner(f.a);
    if (!f.b.is_zero())
        r = r + horner(f.b) * E.y;
    // drop leading zeros
    std::size_t lead = 0;
    while (lead < r.c.size() && sgn(r.c[lead]) == 0)
        ++lead;
    r.val += static_cast<long>(lead);
    r.c.erase(r.c.begin(), r.c.begin() + static_cast<long>(lead));
    return r;
}

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_LAURENT_HPP
