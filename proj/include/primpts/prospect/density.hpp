#ifndef PRIMPTS_PROSPECT_DENSITY_HPP
#define PRIMPTS_PROSPECT_DENSITY_HPP

#include <atomic>
#include <random>
#include <vector>

#include "primpts/contract/locus.hpp"

namespace primpts {

enum class SampleMode { Exhaustive, Seeded };

inline std::string to_string(SampleMode m) { return m == SampleMode::Exhaustive ? "Exhaustive" : "Seeded"; }

struct DensityOptions {
    SampleMode mode = SampleMode::Exhaustive;
    std::size_t samples = 1000; // Seeded only
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct DensityReport {
    Divisor D;
    long H = 0;
    SampleMode mode = SampleMode::Exhaustive;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    long total = 0; // nonzero vectors examined
    long degree_deficient = 0;
    long imprimitive = 0;
    long primitive = 0;
    long exact_degree = 0; // = imprimitive + primitive

    Rational fraction_s() const { return make_rational(degree_deficient, total); }
    Rational fraction_t() const { return make_rational(imprimitive, total); }
    Rational fraction_primitive() const { return make_rational(primitive, total); }
    Rational imprimitive_among_exact_degree() const { return make_rational(imprimitive, exact_degree); }
};

namespace detail {

/// Sorts nonzero functions of L(D) into the loci S and T and the remainder.
class LocusClassifier {
public:
    LocusClassifier(const HyperellipticCurve& C, const Divisor& D) : C_(C), D_(D), n_(D.degree())
    {
        if (D == Divisor::infinity(n_))
            decomposer_.emplace(C, n_);
        else if (!D.is_effective() || !D.is_multiplicity_one())
            fail(ErrorKind::PreconditionFailed, "density needs D multiplicity-one or supported at infinity");
        else
            contractions_ = cached_contr0(C, D).contractions;
    }

    enum class Locus { S, T, U };

    Locus classify(const CurveFunction& f) const
    {
        if (f.is_constant() || function_degree(C_, f) < n_)
            return Locus::S;
        if (decomposer_)
            return decomposer_->find(f) ? Locus::T : Locus::U;
        for (const auto& c : contractions_)
            if (factors_through(C_, f, c))
                return Locus::T;
        return Locus::U;
    }

private:
    HyperellipticCurve C_;
    Divisor D_;
    long n_;
    std::optional<PolynomialDecomposer> decomposer_;
    std::vector<Contraction> contractions_;
};

} // namespace detail

/// Classifies coefficient vectors over the Riemann-Roch basis of D with
/// entries in [-H, H].
inline DensityReport density_experiment(const HyperellipticCurve& C, const Divisor& D, long H,
                                        const DensityOptions& opt = {})
{
    if (D.degree() <= 2 * C.genus())
        fail(ErrorKind::PreconditionFailed, "density needs deg D > 2g");
    if (H < 1)
        fail(ErrorKind::InvalidInput, "coefficient height must be positive");
    const RRSpace L = riemann_roch_basis(C, D);
    const std::size_t k = L.basis.size();
    const detail::LocusClassifier cls(C, D);

    DensityReport r;
    r.D = D;
    r.H = H;
    r.mode = opt.mode;
    r.seed = opt.seed;
    const long base = 2 * H + 1;

    std::vector<std::vector<long>> sampled;
    std::size_t count = 0;
    if (opt.mode == SampleMode::Exhaustive) {
        count = 1;
        for (std::size_t i = 0; i < k; ++i)
            count *= static_cast<std::size_t>(base);
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<long> dist(-H, H);
        while (sampled.size() < opt.samples) {
            std::vector<long> v(k);
            bool nonzero = false;
            for (auto& c : v) {
                c = dist(rng);
                nonzero = nonzero || c != 0;
            }
            if (nonzero)
                sampled.push_back(std::move(v));
        }
        count = sampled.size();
    }
    r.samples = count;

    std::atomic<long> s{0}, t{0}, u{0};
    detail::parallel_for(count, opt.jobs, [&](std::size_t idx) {
        std::vector<long> v;
        if (opt.mode == SampleMode::Exhaustive) {
            v.resize(k);
            std::size_t rest = idx;
            for (std::size_t i = 0; i < k; ++i) {
                v[i] = static_cast<long>(rest % static_cast<std::size_t>(base)) - H;
                rest /= static_cast<std::size_t>(base);
            }
        } else {
            v = sampled[idx];
        }
        CurveFunction f;
        for (std::size_t i = 0; i < k; ++i)
            if (v[i] != 0)
                f = f + Rational(v[i]) * L.basis[i];
        if (f.is_zero())
            return;
        switch (cls.classify(f)) {
        case detail::LocusClassifier::Locus::S: ++s; break;
        case detail::LocusClassifier::Locus::T: ++t; break;
        case detail::LocusClassifier::Locus::U: ++u; break;
        }
    });
    r.degree_deficient = s;
    r.imprimitive = t;
    r.primitive = u;
    r.total = s + t + u;
    r.exact_degree = t + u;
    return r;
}

} // namespace primpts

#endif // PRIMPTS_PROSPECT_DENSITY_HPP
