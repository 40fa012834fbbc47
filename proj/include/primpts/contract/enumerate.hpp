#ifndef PRIMPTS_CONTRACT_ENUMERATE_HPP
#define PRIMPTS_CONTRACT_ENUMERATE_HPP

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "primpts/contract/contraction.hpp"
#include "primpts/hypcurve/jacobian.hpp"
#include "primpts/hypcurve/riemann_roch.hpp"

namespace primpts {

namespace detail {

inline Divisor sub_divisor(const std::vector<Place>& places, unsigned long mask)
{
    Divisor d;
    for (std::size_t i = 0; i < places.size(); ++i)
        if (mask & (1UL << i))
            d.add(places[i], 1);
    return d;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn)
{
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err)
                        err = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace detail

/// Given g with div(g) = D0 - Dinf, checks that D = g^*(D') for an effective
/// D' on P^1 and assembles the contraction. The rest R = D - D0 - Dinf is
/// grouped by the closed point g(P); the pullback is exact iff the groups
/// exhaust e * deg q for every q.
inline std::optional<Contraction> verify_pullback(const HyperellipticCurve& C, const Divisor& D, const Divisor& D0,
                                                  const Divisor& Dinf, const CurveFunction& g, long e)
{
    Divisor R = D - D0 - Dinf;
    if (!R.is_effective())
        return std::nullopt;
    std::map<RatPolynomial, Divisor, PolyLess> groups;
    for (const auto& [P, m] : R.entries()) {
        auto q = value_minpoly(C, g, P);
        if (!q || q->degree() < 1 || (q->degree() == 1 && sgn((*q)[0]) == 0))
            return std::nullopt;
        groups[*q].add(P, m);
    }
    long total = 0;
    for (const auto& [q, blk] : groups) {
        if (blk.degree() != e * q.degree())
            return std::nullopt;
        total += blk.degree();
    }
    if (total != R.degree())
        return std::nullopt;
    Contraction c;
    c.g = g;
    c.e = e;
    c.zeros = D0;
    c.poles = Dinf;
    c.target_divisor.emplace_back(P1Point::rational(0), 1);
    for (const auto& [q, blk] : groups) {
        c.target_divisor.emplace_back(P1Point{false, q}, 1);
        c.blocks.push_back(blk);
    }
    c.target_divisor.emplace_back(P1Point::at_infinity(), 1);
    std::sort(c.target_divisor.begin(), c.target_divisor.end());
    c.blocks.push_back(D0);
    c.blocks.push_back(Dinf);
    std::sort(c.blocks.begin(), c.blocks.end());
    c.pullback_verified = true;
    return c;
}

/// Genus-0 contracting morphisms for an effective multiplicity-one D, one
/// representative per Moebius class (the first ordered pair found wins).
inline ContractionSet enumerate_contr0(const HyperellipticCurve& C, const Divisor& D, unsigned jobs = 1)
{
    if (!D.is_effective() || !D.is_multiplicity_one())
        fail(ErrorKind::PreconditionFailed, "enumerate_contr0 needs an effective multiplicity-one divisor, got " +
                                                D.to_string());
    const std::vector<Place> places = D.support();
    if (places.size() > 24)
        fail(ErrorKind::InvalidInput, "too many places in the support");
    const long d = D.degree();
    const unsigned long full = (1UL << places.size());
    std::vector<long> deg(full, 0);
    for (unsigned long m = 1; m < full; ++m) {
        unsigned long low = m & (~m + 1);
        std::size_t i = static_cast<std::size_t>(__builtin_ctzl(low));
        deg[m] = deg[m ^ low] + places[i].degree();
    }
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    for (unsigned long m0 = 1; m0 < full; ++m0) {
        const long e = deg[m0];
        if (e <= 1 || e >= d || d % e != 0)
            continue;
        for (unsigned long mi = 1; mi < full; ++mi)
            if (!(mi & m0) && deg[mi] == e)
                pairs.emplace_back(m0, mi);
    }
    std::vector<std::optional<Contraction>> found(pairs.size());
    detail::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        Divisor D0 = detail::sub_divisor(places, pairs[i].first);
        Divisor Dinf = detail::sub_divisor(places, pairs[i].second);
        if (!is_principal(C, D0 - Dinf))
            return;
        CurveFunction g = function_with_divisor(C, D0, Dinf);
        found[i] = verify_pullback(C, D, D0, Dinf, g, deg[pairs[i].first]);
    });
    ContractionSet out;
    out.divisor = D;
    std::set<std::vector<Divisor>> seen;
    for (auto& c : found)
        if (c && seen.insert(c->blocks).second)
            out.contractions.push_back(std::move(*c));
    return out;
}

/// Process-wide memo of enumerate_contr0, keyed by curve and divisor.
class ContractionCache {
public:
    static ContractionCache& instance()
    {
        static ContractionCache cache;
        return cache;
    }

    std::optional<ContractionSet> find(const std::string& key) const
    {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(const std::string& key, ContractionSet value)
    {
        std::unique_lock lock(mu_);
        map_.emplace(key, std::move(value));
    }

    std::size_t size() const
    {
        std::shared_lock lock(mu_);
        return map_.size();
    }

    void clear()
    {
        std::unique_lock lock(mu_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<std::string, ContractionSet> map_;
};

inline ContractionSet cached_contr0(const HyperellipticCurve& C, const Divisor& D, unsigned jobs = 1)
{
    const std::string key = format(C.h()) + "|" + D.to_string();
    auto& cache = ContractionCache::instance();
    if (auto hit = cache.find(key))
        return *hit;
    ContractionSet s = enumerate_contr0(C, D, jobs);
    cache.insert(key, s);
    return s;
}

} // namespace primpts

#endif // PRIMPTS_CONTRACT_ENUMERATE_HPP
