#ifndef PRIMPTS_HYPCURVE_RIEMANN_ROCH_HPP
#define PRIMPTS_HYPCURVE_RIEMANN_ROCH_HPP

#include <map>
#include <optional>
#include <vector>

#include "primpts/exactalg/linalg.hpp"
#include "primpts/hypcurve/valuation.hpp"

namespace primpts {

struct RRSpace {
    Divisor divisor;
    std::vector<CurveFunction> basis;

    int dimension() const { return static_cast<int>(basis.size()); }

    std::optional<RatVector> coordinates(const CurveFunction& f) const { return span_coordinates(basis, f); }

    CurveFunction combination(const RatVector& c) const
    {
        if (c.size() != basis.size())
            fail(ErrorKind::InvalidInput, "coefficient vector length does not match the basis");
        CurveFunction acc;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sgn(c[i]) != 0)
                acc = acc + c[i] * basis[i];
        return acc;
    }
};

namespace detail {

inline long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

/// Monomial basis of L(n*inf): x^i for 2i <= n, then x^j*y for 2j + 2g + 1 <= n.
inline std::vector<CurveFunction> infinity_basis(const HyperellipticCurve& C, long n)
{
    std::vector<CurveFunction> out;
    for (long i = 0; 2 * i <= n; ++i)
        out.emplace_back(RatPolynomial::monomial(Rational(1), static_cast<std::size_t>(i)), RatPolynomial{});
    for (long j = 0; 2 * j + C.y_pole() <= n; ++j)
        out.emplace_back(RatPolynomial{}, RatPolynomial::monomial(Rational(1), static_cast<std::size_t>(j)));
    return out;
}

/// Rows expressing "p mod m == 0" for each unknown's contribution p.
inline void append_vanishing_rows(RatMatrix& M, const std::vector<RatPolynomial>& contributions,
                                  const RatPolynomial& m)
{
    const auto width = static_cast<std::size_t>(m.degree());
    std::vector<RatPolynomial> red;
    red.reserve(contributions.size());
    for (const auto& p : contributions)
        red.push_back(p % m);
    for (std::size_t r = 0; r < width; ++r) {
        RatVector row(contributions.size());
        bool any = false;
        for (std::size_t j = 0; j < red.size(); ++j) {
            row[j] = red[j].coeff(r);
            any = any || sgn(row[j]) != 0;
        }
        if (any)
            M.append_row(row);
    }
}

} // namespace detail

/// L(G) = {f : div(f) + G >= 0} for an arbitrary divisor G.
inline RRSpace linear_system(const HyperellipticCurve& C, const Divisor& G)
{
    RRSpace out;
    out.divisor = G;

    bool affine = false;
    for (const auto& [P, m] : G.entries())
        affine = affine || !P.is_infinity();
    if (!affine) {
        if (G.at_infinity() >= 0)
            out.basis = detail::infinity_basis(C, G.at_infinity());
        return out;
    }

    // Clear affine poles with c = prod u^n_u.
    std::map<RatPolynomial, long, PolyLess> n_u;
    for (const auto& [P, m] : G.entries()) {
        if (P.is_infinity())
            continue;
        long need = std::max(0L, detail::ceil_div(m, P.ramification()));
        auto [it, fresh] = n_u.emplace(P.u, need);
        if (!fresh)
            it->second = std::max(it->second, need);
    }
    RatPolynomial c = RatPolynomial::constant(Rational(1));
    for (const auto& [u, n] : n_u)
        c *= pow(u, static_cast<unsigned>(n));
    const long N = G.at_infinity() + 2L * c.degree();
    const long amax = N >= 0 ? N / 2 : -1;
    const long bmax = N - C.y_pole() >= 0 ? (N - C.y_pole()) / 2 : -1;
    const std::size_t na = static_cast<std::size_t>(amax + 1), nb = static_cast<std::size_t>(bmax + 1);
    if (na + nb == 0)
        return out;

    RatMatrix M(0, na + nb);
    for (const auto& [u, n] : n_u) {
        for (const auto& P : places_over_x(C, u)) {
            const long need = P.ramification() * n - G.multiplicity(P);
            if (need <= 0)
                continue;
            std::vector<RatPolynomial> contrib(na + nb);
            if (P.kind == PlaceKind::Split) {
                RatPolynomial m = pow(u, static_cast<unsigned>(need));
                RatPolynomial vk = lift_square_root(C.h(), u, P.v, need);
                for (std::size_t i = 0; i < na; ++i)
                    contrib[i] = RatPolynomial::monomial(Rational(1), i);
                for (std::size_t j = 0; j < nb; ++j)
                    contrib[na + j] = RatPolynomial::monomial(Rational(1), j) * vk;
                detail::append_vanishing_rows(M, contrib, m);
                continue;
            }
            long ea = need, eb = need;
            if (P.kind == PlaceKind::Ramified) {
                ea = (need + 1) / 2;
                eb = need / 2;
            }
            if (ea > 0) {
                std::vector<RatPolynomial> ca(na + nb);
                for (std::size_t i = 0; i < na; ++i)
                    ca[i] = RatPolynomial::monomial(Rational(1), i);
                detail::append_vanishing_rows(M, ca, pow(u, static_cast<unsigned>(ea)));
            }
            if (eb > 0) {
                std::vector<RatPolynomial> cb(na + nb);
                for (std::size_t j = 0; j < nb; ++j)
                    cb[na + j] = RatPolynomial::monomial(Rational(1), j);
                detail::append_vanishing_rows(M, cb, pow(u, static_cast<unsigned>(eb)));
            }
        }
    }
    std::vector<RatVector> ker;
    if (M.rows() == 0) {
        for (std::size_t i = 0; i < na + nb; ++i) {
            RatVector e(na + nb);
            e[i] = 1;
            ker.push_back(std::move(e));
        }
    } else {
        ker = echelon_basis(kernel(M));
    }
    for (const auto& vec : ker) {
        RatPolynomial a(RatVector(vec.begin(), vec.begin() + static_cast<long>(na)));
        RatPolynomial b(RatVector(vec.begin() + static_cast<long>(na), vec.end()));
        out.basis.emplace_back(std::move(a), std::move(b), c);
    }
    return out;
}

/// Basis of L(D) for effective D.
inline RRSpace riemann_roch_basis(const HyperellipticCurve& C, const Divisor& D)
{
    if (!D.is_effective())
        fail(ErrorKind::Unsupported, "riemann_roch_basis needs an effective divisor");
    return linear_system(C, D);
}

/// The function with zero divisor D0 and pole divisor Dinf, up to scaling.
inline CurveFunction function_with_divisor(const HyperellipticCurve& C, const Divisor& D0, const Divisor& Dinf)
{
    if (!D0.is_effective() || !Dinf.is_effective())
        fail(ErrorKind::InvalidInput, "function_with_divisor needs effective divisors");
    if (D0.degree() != Dinf.degree())
        fail(ErrorKind::NotPrincipal, "degrees differ");
    for (const auto& [P, m] : D0.entries())
        if (Dinf.multiplicity(P) != 0)
            fail(ErrorKind::InvalidInput, "zero and pole divisors share a place");
    RRSpace L = linear_system(C, Dinf - D0);
    if (L.dimension() == 0)
        fail(ErrorKind::NotPrincipal, D0.to_string() + " - (" + Dinf.to_string() + ") is not principal");
    return normalize_scalar(C, L.basis.front());
}

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_RIEMANN_ROCH_HPP
