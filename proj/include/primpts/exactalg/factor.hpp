#ifndef PRIMPTS_EXACTALG_FACTOR_HPP
#define PRIMPTS_EXACTALG_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "primpts/error.hpp"
#include "primpts/exactalg/hensel.hpp"
#include "primpts/exactalg/modp.hpp"
#include "primpts/exactalg/polynomial.hpp"

namespace primpts {

/// unit * prod(factor^multiplicity); factors monic irreducible over Q.
struct FactorList {
    Rational unit = 1;
    std::vector<std::pair<RatPolynomial, int>> factors;

    RatPolynomial expand() const
    {
        RatPolynomial acc = RatPolynomial::constant(unit);
        for (const auto& [f, m] : factors)
            acc *= pow(f, static_cast<unsigned>(m));
        return acc;
    }
    std::size_t count() const
    {
        std::size_t n = 0;
        for (const auto& f : factors)
            n += static_cast<std::size_t>(f.second);
        return n;
    }
    bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

namespace detail {

inline std::vector<std::uint64_t> small_primes(std::size_t count_hint)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; out.size() < count_hint; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

/// Trial division in Z[x]; returns quotient when exact.
inline bool zpoly_divides(const ZPoly& f, const ZPoly& g, ZPoly& quotient)
{
    using namespace zpoly;
    const int df = degree(f), dg = degree(g);
    if (dg > df)
        return false;
    ZPoly r = f;
    ZPoly q(static_cast<std::size_t>(df - dg + 1));
    const Integer& lg = g.back();
    for (int i = df; i >= dg; --i) {
        Integer& top = r[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t()))
            return false;
        Integer c = top / lg;
        q[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(i - dg + j)] -= c * g[static_cast<std::size_t>(j)];
    }
    for (const auto& v : r)
        if (v != 0)
            return false;
    trim(q);
    quotient = std::move(q);
    return true;
}

inline ZPoly primitive(ZPoly a)
{
    Integer g = 0;
    for (const auto& v : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (a.back() < 0)
        g = -g;
    for (auto& v : a)
        v /= g;
    return a;
}

inline std::set<int> subset_degree_sums(const std::vector<std::pair<ModpPolynomial, int>>& fs)
{
    std::set<int> sums{0};
    for (const auto& f : fs) {
        std::set<int> next = sums;
        for (int s : sums)
            next.insert(s + f.first.degree());
        sums = std::move(next);
    }
    return sums;
}

/// Zassenhaus factorization of a primitive squarefree integer polynomial.
inline std::vector<ZPoly> zassenhaus(ZPoly f, std::uint64_t seed)
{
    using namespace zpoly;
    const int n = degree(f);
    if (n <= 1)
        return {f};

    // Pick among the first three good primes the one with fewest modular factors.
    std::vector<std::pair<std::uint64_t, ModpFactorList>> candidates;
    std::set<int> allowed;
    bool have_allowed = false;
    for (std::uint64_t p = 2; candidates.size() < 3; ++p) {
        if (!is_prime(p))
            continue;
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0)
            continue;
        ModpPolynomial fp = ModpPolynomial::from_integers(f, p);
        if (poly_gcd(fp, fp.derivative()).degree() != 0)
            continue;
        auto fl = factor_mod_p(fp, seed);
        auto sums = subset_degree_sums(fl.factors);
        if (!have_allowed) {
            allowed = sums;
            have_allowed = true;
        } else {
            std::set<int> inter;
            std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            allowed = std::move(inter);
        }
        candidates.emplace_back(p, std::move(fl));
    }
    if (allowed.size() <= 2)
        return {f};
    auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.second.factors.size() < b.second.factors.size();
    });
    const std::uint64_t p = best->first;
    std::vector<ModpPolynomial> modular;
    for (const auto& fm : best->second.factors)
        modular.push_back(fm.first);
    if (modular.size() == 1)
        return {f};

    // Mignotte-type bound on coefficients of lc(f) * (any factor).
    Integer norm2 = 0;
    for (const auto& v : f)
        norm2 += v * v;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = abs(f.back()) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    bound = 2 * bound + 1;
    unsigned k = 1;
    Integer pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift(f, modular, p, k);
    std::vector<int> degs;
    for (const auto& m : modular)
        degs.push_back(m.degree());

    std::vector<ZPoly> found;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i)
        remaining[i] = i;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool progress = false;
        const std::size_t r = remaining.size();
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        for (;;) {
            int dsum = 0;
            for (auto i : idx)
                dsum += degs[remaining[i]];
            if (allowed.count(dsum) && allowed.count(degree(f) - dsum)) {
                const Integer& lc = f.back();
                // constant-term screen
                Integer c0 = lc;
                for (auto i : idx) {
                    const ZPoly& L = lifted[remaining[i]];
                    c0 = c0 * (L.empty() ? Integer(0) : L[0]);
                    mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), pk.get_mpz_t());
                }
                if (c0 > pk / 2)
                    c0 -= pk;
                const Integer& f0 = f[0];
                bool plausible = (c0 == 0) ? (f0 == 0) : mpz_divisible_p(Integer(lc * f0).get_mpz_t(), c0.get_mpz_t()) != 0;
                if (plausible) {
                    ZPoly g{lc};
                    for (auto i : idx)
                        g = mul_mod(g, lifted[remaining[i]], pk);
                    g = primitive(symmetric(g, pk));
                    ZPoly q;
                    if (zpoly_divides(f, g, q)) {
                        found.push_back(g);
                        f = q;
                        std::vector<std::size_t> rest;
                        for (std::size_t j = 0; j < r; ++j)
                            if (std::find(idx.begin(), idx.end(), j) == idx.end())
                                rest.push_back(remaining[j]);
                        remaining = std::move(rest);
                        progress = true;
                        break;
                    }
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == r - s + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!progress)
            ++s;
    }
    if (degree(f) > 0)
        found.push_back(primitive(f));
    return found;
}

} // namespace detail

/// Complete factorization over Q (Zassenhaus). Output ordered by degree, then
/// ascending coefficient vectors.
inline FactorList factor_over_rationals(const RatPolynomial& p, std::uint64_t seed = 0)
{
    if (p.is_zero())
        fail(ErrorKind::InvalidInput, "factorization of zero polynomial");
    FactorList out;
    out.unit = p.leading();
    for (const auto& [piece, mult] : squarefree_decomposition(p)) {
        if (piece.degree() == 1) {
            out.factors.emplace_back(piece, mult);
            continue;
        }
        auto [content, z] = primitive_integer_part(piece);
        for (const auto& g : detail::zassenhaus(z, seed)) {
            std::vector<Rational> c;
            c.reserve(g.size());
            for (const auto& v : g)
                c.emplace_back(v);
            out.factors.emplace_back(RatPolynomial(std::move(c)).monic(), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first)
            return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

inline bool is_irreducible(const RatPolynomial& p)
{
    if (p.degree() < 1)
        return false;
    return factor_over_rationals(p).is_irreducible();
}

/// Rational roots, ascending.
inline std::vector<Rational> rational_roots(const RatPolynomial& p)
{
    std::vector<Rational> roots;
    for (const auto& [f, m] : factor_over_rationals(p).factors)
        if (f.degree() == 1)
            roots.push_back(-f[0]);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace primpts

#endif // PRIMPTS_EXACTALG_FACTOR_HPP
