#ifndef PRIMPTS_NUMFIELD_TRAGER_HPP
#define PRIMPTS_NUMFIELD_TRAGER_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "primpts/exactalg/factor.hpp"
#include "primpts/exactalg/polynomial.hpp"
#include "primpts/numfield/number_field.hpp"

namespace primpts {

using NFPolynomial = Polynomial<FieldElement>;

/// Lifts a rational polynomial into L[x].
inline NFPolynomial to_nf(const RatPolynomial& p, const NumberField& L)
{
    std::vector<FieldElement> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs())
        c.push_back(L.from_rational(v));
    return NFPolynomial(std::move(c));
}

/// Attaches every coefficient to L (detached constants adopt the field).
inline NFPolynomial attach(const NFPolynomial& p, const NumberField& L)
{
    std::vector<FieldElement> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs())
        c.push_back(L.zero() + v);
    return NFPolynomial(std::move(c));
}

struct NFFactorList {
    std::vector<std::pair<NFPolynomial, int>> factors; // monic irreducible over L
    long shift = 0;                                    // Trager shift of the last squarefree block
    FieldElement unit;

    NFPolynomial expand() const
    {
        NFPolynomial acc = NFPolynomial::constant(unit);
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i)
                acc *= f;
        return acc;
    }
};

/// N(x) = Res_y(m(y), g(x, y)) where g's coefficients are read as polynomials
/// in y = theta. Computed by evaluation at integer points and interpolation.
inline RatPolynomial norm_over_q(const NFPolynomial& g, const NumberField& L)
{
    const int dg = g.degree();
    const int target = dg * L.degree();
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(target + 1));
    ys.reserve(static_cast<std::size_t>(target + 1));
    for (int k = 0; k <= target; ++k) {
        Rational x0(k);
        // sum_i g_i(y) * x0^i
        RatPolynomial at;
        Rational power(1);
        for (int i = 0; i <= dg; ++i) {
            at += g[static_cast<std::size_t>(i)].rep() * power;
            power *= x0;
        }
        xs.push_back(x0);
        ys.push_back(at.is_zero() ? Rational(0) : resultant(L.modulus(), at));
    }
    return interpolate(xs, ys);
}

/// Trager shift sequence 0, 1, -1, 2, -2, ...
inline long trager_shift(int index) { return index == 0 ? 0 : (index % 2 ? (index + 1) / 2 : -(index / 2)); }

namespace detail {

inline bool nf_poly_less(const NFPolynomial& a, const NFPolynomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        const auto& ra = a[i].rep();
        const auto& rb = b[i].rep();
        if (ra == rb)
            continue;
        return poly_less(ra, rb);
    }
    return false;
}

/// Factors a monic squarefree polynomial over L.
inline std::vector<NFPolynomial> trager_squarefree(const NFPolynomial& f, const NumberField& L, long& shift_out,
                                                   std::uint64_t seed)
{
    if (f.degree() <= 1) {
        shift_out = 0;
        return {f};
    }
    const FieldElement theta = L.theta();
    for (int idx = 0;; ++idx) {
        const long s = trager_shift(idx);
        // g(x) = f(x - s*theta)
        NFPolynomial sub{-(theta * Rational(s)), L.one()};
        NFPolynomial g = attach(f.compose(sub), L);
        RatPolynomial N = norm_over_q(g, L);
        if (!is_squarefree(N))
            continue;
        shift_out = s;
        FactorList fl = factor_over_rationals(N, seed);
        std::vector<NFPolynomial> out;
        NFPolynomial back{theta * Rational(s), L.one()};
        for (const auto& [Ni, mult] : fl.factors) {
            NFPolynomial h = poly_gcd(to_nf(Ni, L), g);
            if (h.degree() < 1)
                continue;
            out.push_back(attach(h.compose(back).monic(), L));
        }
        return out;
    }
}

} // namespace detail

/// Irreducible factorization over L = Q[x]/(m) by the norm-shift method.
inline NFFactorList trager_factor(const NFPolynomial& f0, const NumberField& L, std::uint64_t seed = 0)
{
    if (f0.is_zero())
        fail(ErrorKind::InvalidInput, "factorization of zero polynomial over a number field");
    NFPolynomial f = attach(f0, L);
    NFFactorList out;
    out.unit = f.leading();
    for (const auto& [piece, mult] : squarefree_decomposition(f)) {
        long s = 0;
        for (auto& g : detail::trager_squarefree(attach(piece, L), L, s, seed))
            out.factors.emplace_back(std::move(g), mult);
        out.shift = s;
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first)
            return a.second < b.second;
        return detail::nf_poly_less(a.first, b.first);
    });
    return out;
}

} // namespace primpts

#endif // PRIMPTS_NUMFIELD_TRAGER_HPP
