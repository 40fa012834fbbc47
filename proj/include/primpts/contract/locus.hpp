#ifndef PRIMPTS_CONTRACT_LOCUS_HPP
#define PRIMPTS_CONTRACT_LOCUS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "primpts/contract/enumerate.hpp"
#include "primpts/hypcurve/laurent.hpp"

namespace primpts {

/// s, r with f = s(g) / r(g) and max(deg s, deg r) <= k, if any.
inline std::optional<std::pair<RatPolynomial, RatPolynomial>>
rational_dependence(const HyperellipticCurve& C, const CurveFunction& f, const CurveFunction& g, long k)
{
    std::vector<CurveFunction> fs;
    std::vector<CurveFunction> gp{CurveFunction::constant(1)};
    for (long i = 1; i <= k; ++i)
        gp.push_back(mul(C, gp.back(), g));
    for (const auto& p : gp)
        fs.push_back(mul(C, f, p));
    for (const auto& p : gp)
        fs.push_back(-p);
    auto rel = linear_relations(fs);
    if (rel.empty())
        return std::nullopt;
    const auto& v = rel.front();
    const auto kk = static_cast<std::size_t>(k + 1);
    RatPolynomial r(RatVector(v.begin(), v.begin() + static_cast<long>(kk)));
    RatPolynomial s(RatVector(v.begin() + static_cast<long>(kk), v.end()));
    return std::pair{s, r};
}

/// Whether f lies in Q(g) for the contraction g, i.e. f = s(g)/r(g) with
/// deg f = e * max(deg s, deg r).
inline bool factors_through(const HyperellipticCurve& C, const CurveFunction& f, const Contraction& c)
{
    if (f.is_zero() || f.is_constant())
        fail(ErrorKind::InvalidInput, "factors_through needs a nonconstant function");
    const long df = function_degree(C, f);
    if (c.e <= 0 || df % c.e != 0)
        return false;
    return rational_dependence(C, f, c.g, df / c.e).has_value();
}

/// g2 = (alpha g1 + beta) / (gamma g1 + delta).
struct Mobius {
    Rational alpha, beta, gamma, delta;
};

namespace detail {

/// p + q * s with s^2 = s2.
struct QuadValue {
    Rational p, q;
};

inline QuadValue qmul(const QuadValue& a, const QuadValue& b, const Rational& s2)
{
    return {a.p * b.p + a.q * b.q * s2, a.p * b.q + a.q * b.p};
}

inline std::optional<QuadValue> evaluate_at(const CurveFunction& f, const Rational& c)
{
    Rational dv = f.den(c);
    if (sgn(dv) == 0)
        return std::nullopt;
    return QuadValue{f.a(c) / dv, f.b(c) / dv};
}

} // namespace detail

/// Recovers the Moebius map relating two contractions of the same class and
/// checks it at three points (c, sqrt(h(c))) with h(c) not a square.
inline std::optional<Mobius> recover_mobius(const HyperellipticCurve& C, const CurveFunction& g1,
                                            const CurveFunction& g2)
{
    auto rel = linear_relations({mul(C, g2, g1), g2, g1, CurveFunction::constant(1)});
    if (rel.size() != 1)
        return std::nullopt;
    const auto& v = rel.front();
    Mobius M{-v[2], -v[3], v[0], v[1]};
    if (sgn(M.alpha * M.delta - M.beta * M.gamma) == 0)
        return std::nullopt;
    int checked = 0;
    for (long n = 0; checked < 3 && n < 200; ++n) {
        Rational c(n % 2 ? -(n + 1) / 2 : n / 2);
        Rational s2 = C.h()(c), root;
        if (sgn(s2) == 0 || rational_sqrt(s2, root))
            continue;
        auto v1 = detail::evaluate_at(g1, c);
        auto v2 = detail::evaluate_at(g2, c);
        if (!v1 || !v2)
            continue;
        detail::QuadValue lhs = detail::qmul(*v2, {M.gamma * v1->p + M.delta, M.gamma * v1->q}, s2);
        detail::QuadValue rhs{M.alpha * v1->p + M.beta, M.alpha * v1->q};
        if (lhs.p != rhs.p || lhs.q != rhs.q)
            return std::nullopt;
        ++checked;
    }
    if (checked < 3)
        return std::nullopt;
    return M;
}

struct DimensionCheck {
    long dim_pd = 0;
    long dim_pdprime = 0;
    bool holds = false;
};

/// dim P(D) against dim P(D') for a contraction of D; a failure is a logic error.
inline DimensionCheck dimension_comparison_check(const HyperellipticCurve& C, const Divisor& D, const Contraction& c)
{
    if (D.degree() <= 2L * C.genus())
        fail(ErrorKind::PreconditionFailed, "dimension comparison needs deg D > 2g");
    DimensionCheck r;
    r.dim_pd = riemann_roch_basis(C, D).dimension() - 1;
    r.dim_pdprime = c.target_degree();
    r.holds = r.dim_pd > r.dim_pdprime;
    if (!r.holds)
        throw std::logic_error("dim P(D) <= dim P(D') for a contraction of " + D.to_string());
    return r;
}

/// Decomposes polynomial functions with pole divisor n*inf as p(g) with
/// g in L(e*inf), using the polar part of f^(1/k) at infinity.
class PolynomialDecomposer {
public:
    PolynomialDecomposer(const HyperellipticCurve& C, long n) : C_(C), n_(n), E_(expand_at_infinity(C, n + 4))
    {
        for (long e = 2; e < n; ++e) {
            if (n % e != 0)
                continue;
            Level lv;
            lv.e = e;
            for (auto& m : detail::infinity_basis(C, e))
                if (!m.is_constant()) {
                    lv.expansions.push_back(expand_function(E_, m));
                    lv.basis.push_back(std::move(m));
                }
            if (!lv.basis.empty())
                levels_.push_back(std::move(lv));
        }
    }

    std::optional<Contraction> find(const CurveFunction& f) const
    {
        if (!f.is_polynomial() || -function_valuation(C_, f, Place::infinity()) != n_)
            fail(ErrorKind::PreconditionFailed, "decomposition needs a polynomial function of pole order n");
        Laurent S = expand_function(E_, f);
        const Rational lc = S.c[0];
        for (const auto& lv : levels_) {
            const long e = lv.e, k = n_ / e;
            std::vector<Rational> U(S.c.begin(), S.c.begin() + e);
            for (auto& u : U)
                u /= lc;
            std::vector<Rational> R = series_root(U, k);
            RatMatrix M(static_cast<std::size_t>(e), lv.basis.size());
            for (long j = 0; j < e; ++j)
                for (std::size_t i = 0; i < lv.basis.size(); ++i)
                    M(static_cast<std::size_t>(j), i) = lv.expansions[i].at(-e + j);
            auto sol = solve(M, R);
            if (!sol)
                continue;
            CurveFunction g;
            for (std::size_t i = 0; i < sol->size(); ++i)
                if (sgn((*sol)[i]) != 0)
                    g = g + (*sol)[i] * lv.basis[i];
            std::vector<CurveFunction> powers{CurveFunction::constant(1)};
            for (long i = 1; i <= k; ++i)
                powers.push_back(mul(C_, powers.back(), g));
            if (!span_coordinates(powers, f))
                continue;
            Contraction c;
            c.g = normalize_scalar(C_, g);
            c.e = e;
            c.target_divisor.emplace_back(P1Point::at_infinity(), k);
            c.poles = Divisor::infinity(e);
            c.blocks.push_back(Divisor::infinity(n_));
            c.pullback_verified = function_degree(C_, g) == e;
            return c;
        }
        return std::nullopt;
    }

private:
    struct Level {
        long e = 0;
        std::vector<CurveFunction> basis;
        std::vector<Laurent> expansions;
    };
    HyperellipticCurve C_;
    long n_;
    InfinityExpansion E_;
    std::vector<Level> levels_;
};

enum class LocusVerdict { Imprimitive, NoFactorization };

inline std::string to_string(LocusVerdict v) { return v == LocusVerdict::Imprimitive ? "Imprimitive" : "NoFactorization"; }

struct LocusResult {
    LocusVerdict verdict = LocusVerdict::NoFactorization;
    bool degree_deficient = false; // f lies in the locus S
    std::optional<Contraction> via;
};

/// Whether f in P(D) factors through a genus-0 contraction of D. D is either
/// multiplicity-one (enumerated contractions) or n*inf (decomposition at
/// infinity).
inline LocusResult imprimitive_locus_test(const HyperellipticCurve& C, const Divisor& D, const CurveFunction& f,
                                          unsigned jobs = 1)
{
    if (f.is_zero() || f.is_constant())
        fail(ErrorKind::InvalidInput, "locus test needs a nonconstant function");
    LocusResult out;
    const long n = D.degree();
    const long df = function_degree(C, f);
    if (df < n) {
        out.degree_deficient = true;
        return out;
    }
    if (df > n)
        fail(ErrorKind::PreconditionFailed, "function degree exceeds deg D");
    if (D == Divisor::infinity(n)) {
        CurveFunction F = f;
        if (!f.is_polynomial()) {
            auto v = value_minpoly(C, f, Place::infinity());
            if (!v || v->degree() != 1)
                fail(ErrorKind::PreconditionFailed, "f is not in the linear system of " + D.to_string());
            F = inverse(C, f - CurveFunction::constant(-(*v)[0]));
            if (!F.is_polynomial())
                fail(ErrorKind::PreconditionFailed, "f is not in the linear system of " + D.to_string());
        }
        out.via = PolynomialDecomposer(C, n).find(F);
    } else if (D.is_effective() && D.is_multiplicity_one()) {
        for (const auto& c : cached_contr0(C, D, jobs).contractions)
            if (factors_through(C, f, c)) {
                out.via = c;
                break;
            }
    } else {
        fail(ErrorKind::PreconditionFailed, "locus test needs D multiplicity-one or supported at infinity");
    }
    if (out.via)
        out.verdict = LocusVerdict::Imprimitive;
    return out;
}

} // namespace primpts

#endif // PRIMPTS_CONTRACT_LOCUS_HPP
