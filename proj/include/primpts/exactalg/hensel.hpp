#ifndef PRIMPTS_EXACTALG_HENSEL_HPP
#define PRIMPTS_EXACTALG_HENSEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "primpts/error.hpp"
#include "primpts/exactalg/modp.hpp"
#include "primpts/exactalg/rational.hpp"

namespace primpts {

/// Integer polynomial, ascending coefficients.
using ZPoly = std::vector<Integer>;

namespace zpoly {

inline void trim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

/// Reduce into [0, m).
inline ZPoly reduce(ZPoly a, const Integer& m)
{
    for (auto& v : a)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    trim(a);
    return a;
}

/// Reduce into (-m/2, m/2].
inline ZPoly symmetric(ZPoly a, const Integer& m)
{
    Integer half = m / 2;
    for (auto& v : a) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half)
            v -= m;
    }
    trim(a);
    return a;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
    trim(r);
    return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
    trim(r);
    return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(mul(a, b), m); }

inline ZPoly scale(const ZPoly& a, const Integer& s)
{
    ZPoly r = a;
    for (auto& v : r)
        v *= s;
    trim(r);
    return r;
}

/// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a0, const ZPoly& b, const Integer& m)
{
    ZPoly a = reduce(a0, m);
    const int db = degree(b);
    if (degree(a) < db)
        return {ZPoly{}, a};
    ZPoly q(static_cast<std::size_t>(degree(a) - db + 1));
    for (int i = degree(a); i >= db; --i) {
        Integer coef = a[static_cast<std::size_t>(i)];
        mpz_fdiv_r(coef.get_mpz_t(), coef.get_mpz_t(), m.get_mpz_t());
        if (coef == 0)
            continue;
        q[static_cast<std::size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= coef * b[static_cast<std::size_t>(j)];
    }
    a.resize(static_cast<std::size_t>(db));
    return {reduce(q, m), reduce(a, m)};
}

inline ZPoly from_modp(const ModpPolynomial& f)
{
    ZPoly r;
    for (auto v : f.coeffs())
        r.emplace_back(static_cast<unsigned long>(v));
    trim(r);
    return r;
}

inline Integer inverse_mod(const Integer& a, const Integer& m)
{
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        fail(ErrorKind::DivisionByZero, "integer not invertible modulo m");
    return r;
}

} // namespace zpoly

namespace detail {

/// Quadratic two-factor lift: f = g*h mod p, h monic, s*g + t*h = 1 mod p.
/// Returns (g, h) correct modulo p^k.
inline std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, std::uint64_t p, unsigned k)
{
    using namespace zpoly;
    unsigned cur = 1;
    while (cur < k) {
        unsigned next = std::min(2 * cur, k);
        Integer m;
        mpz_ui_pow_ui(m.get_mpz_t(), p, next);
        ZPoly e = reduce(sub(f, mul(g, h)), m);
        auto [q, r] = divmod_monic(mul(s, e), h, m);
        ZPoly g2 = reduce(add(add(g, mul(t, e)), mul(q, g)), m);
        ZPoly h2 = reduce(add(h, r), m);
        ZPoly one{Integer(1)};
        ZPoly b = reduce(sub(add(mul(s, g2), mul(t, h2)), one), m);
        auto [c, d] = divmod_monic(mul(s, b), h2, m);
        s = reduce(sub(s, d), m);
        t = reduce(sub(sub(t, mul(t, b)), mul(c, g2)), m);
        g = std::move(g2);
        h = std::move(h2);
        cur = next;
    }
    return {std::move(g), std::move(h)};
}

inline void lift_tree(const ZPoly& f, const std::vector<ModpPolynomial>& factors, std::size_t lo, std::size_t hi,
                      std::uint64_t p, unsigned k, const Integer& pk, std::vector<ZPoly>& out)
{
    using namespace zpoly;
    if (hi - lo == 1) {
        Integer lc = f.back();
        out[lo] = reduce(scale(f, inverse_mod(lc, pk)), pk);
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    ModpPolynomial h = ModpPolynomial::constant(p, 1);
    for (std::size_t i = lo; i < mid; ++i)
        h = h * factors[i];
    ModpPolynomial g = ModpPolynomial::constant(p, mpz_fdiv_ui(f.back().get_mpz_t(), p));
    for (std::size_t i = mid; i < hi; ++i)
        g = g * factors[i];
    auto eg = ext_gcd(g, h);
    if (eg.gcd.degree() != 0)
        fail(ErrorKind::LiftObstruction, "modular factors are not pairwise coprime");
    auto [gl, hl] = lift_pair(f, from_modp(g), from_modp(h), from_modp(eg.s), from_modp(eg.t), p, k);
    lift_tree(hl, factors, lo, mid, p, k, pk, out);
    lift_tree(gl, factors, mid, hi, p, k, pk, out);
}

} // namespace detail

/// Lifts a factorization f = lc(f) * prod(factors) mod p (factors monic and
/// pairwise coprime) to monic factors modulo p^k, in input order, residues in
/// [0, p^k).
inline std::vector<ZPoly> hensel_lift(const ZPoly& f0, const std::vector<ModpPolynomial>& factors, std::uint64_t p,
                                      unsigned k)
{
    ZPoly f = f0;
    zpoly::trim(f);
    if (f.empty() || factors.empty())
        fail(ErrorKind::InvalidInput, "hensel_lift needs a nonzero target and at least one factor");
    if (k == 0)
        fail(ErrorKind::InvalidInput, "hensel_lift exponent must be positive");
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0)
        fail(ErrorKind::InvalidInput, "leading coefficient vanishes mod p");
    ModpPolynomial prod = ModpPolynomial::constant(p, mpz_fdiv_ui(f.back().get_mpz_t(), p));
    for (const auto& g : factors) {
        if (g.modulus() != p || g.degree() < 1 || g.leading() != 1)
            fail(ErrorKind::InvalidInput, "hensel_lift factors must be monic nonconstant mod p");
        prod = prod * g;
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (poly_gcd(factors[i], factors[j]).degree() != 0)
                fail(ErrorKind::LiftObstruction, "modular factors are not pairwise coprime");
    if (!(prod == ModpPolynomial::from_integers(f, p)))
        fail(ErrorKind::InvalidInput, "factors do not multiply to the target mod p");
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    std::vector<ZPoly> out(factors.size());
    detail::lift_tree(f, factors, 0, factors.size(), p, k, pk, out);
    return out;
}

} // namespace primpts

#endif // PRIMPTS_EXACTALG_HENSEL_HPP
