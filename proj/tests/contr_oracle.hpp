#ifndef PRIMPTS_TESTS_CONTR_ORACLE_HPP
#define PRIMPTS_TESTS_CONTR_ORACLE_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "primpts/contract/locus.hpp"

namespace primpts::oracle {

struct OracleHit {
    CurveFunction g;
    std::vector<Divisor> blocks;
};

/// Every ordered pair of disjoint equal-degree subdivisors, principality via
/// the dimension of L(Dinf - D0), pullback checked by summing zero divisors
/// of q(g) over the candidate closed points q.
inline std::vector<OracleHit> brute_force_contr0(const HyperellipticCurve& C, const Divisor& D)
{
    const auto places = D.support();
    const long d = D.degree();
    const unsigned long full = 1UL << places.size();
    auto sub = [&](unsigned long m) {
        Divisor r;
        for (std::size_t i = 0; i < places.size(); ++i)
            if (m & (1UL << i))
                r.add(places[i], 1);
        return r;
    };
    std::vector<OracleHit> hits;
    for (unsigned long m0 = 1; m0 < full; ++m0)
        for (unsigned long mi = 1; mi < full; ++mi) {
            if (m0 & mi)
                continue;
            Divisor D0 = sub(m0), Dinf = sub(mi);
            const long e = D0.degree();
            if (e != Dinf.degree() || e <= 1 || e >= d)
                continue;
            RRSpace L = linear_system(C, Dinf - D0);
            if (L.dimension() == 0)
                continue;
            const CurveFunction& g = L.basis.front();
            Divisor R = D - D0 - Dinf;
            std::set<RatPolynomial, PolyLess> qs;
            for (const auto& [pl, m] : R.entries())
                if (auto q = value_minpoly(C, g, pl))
                    qs.insert(*q);
            Divisor pulled = D0 + Dinf;
            std::vector<Divisor> blocks{D0, Dinf};
            for (const auto& q : qs) {
                Divisor z = zero_divisor(C, compose_rational(C, q, rat_poly({1}), g));
                pulled += z;
                blocks.push_back(z);
            }
            if (pulled != D)
                continue;
            std::sort(blocks.begin(), blocks.end());
            hits.push_back({g, blocks});
        }
    return hits;
}

inline std::set<std::vector<Divisor>> classes(const std::vector<OracleHit>& hits)
{
    std::set<std::vector<Divisor>> s;
    for (const auto& h : hits)
        s.insert(h.blocks);
    return s;
}

inline std::set<std::vector<Divisor>> classes(const ContractionSet& cs)
{
    std::set<std::vector<Divisor>> s;
    for (const auto& c : cs.contractions)
        s.insert(c.blocks);
    return s;
}

/// Random multiplicity-one divisors of degree <= 6 from x-fibers, y-fibers
/// and single places.
inline std::vector<Divisor> random_divisors(const HyperellipticCurve& C, std::mt19937_64& rng, int count)
{
    std::uniform_int_distribution<long> dist(-4, 4);
    std::vector<Divisor> out;
    while (static_cast<int>(out.size()) < count) {
        Divisor D;
        for (int pieces = 0; pieces < 3; ++pieces) {
            Divisor piece;
            switch (rng() % 3) {
            case 0: piece = fiber_divisor(C, CurveFunction::x(), dist(rng)).divisor; break;
            case 1: piece = fiber_divisor(C, CurveFunction::y(), dist(rng)).divisor; break;
            default: {
                auto ps = places_over_x(C, rat_poly({dist(rng), 1}));
                piece = Divisor(ps[rng() % ps.size()], 1);
            }
            }
            Divisor trial = D + piece;
            if (trial.is_multiplicity_one() && trial.degree() <= 6)
                D = trial;
        }
        if (D.degree() >= 3)
            out.push_back(D);
    }
    return out;
}

} // namespace primpts::oracle

#endif // PRIMPTS_TESTS_CONTR_ORACLE_HPP
