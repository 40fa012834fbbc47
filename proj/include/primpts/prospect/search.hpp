#ifndef PRIMPTS_PROSPECT_SEARCH_HPP
#define PRIMPTS_PROSPECT_SEARCH_HPP

#include <functional>
#include <vector>

#include "primpts/contract/locus.hpp"
#include "primpts/prospect/fiber.hpp"
#include "primpts/prospect/height.hpp"

namespace primpts {

/// Primitivity of Q(X)/Q(f) witnessed by one irreducible primitive fiber.
struct GenericCertificate {
    CertMethod method = CertMethod::GenericFromSpecialization;
    CurveFunction f;
    Rational t;
    RatPolynomial fiber_poly;
    long lambda = 0;
    PrimitivityCertificate fiber_cert;
};

inline bool verify_generic_certificate(const HyperellipticCurve& C, const GenericCertificate& gc)
{
    if (gc.f.is_constant())
        return false;
    Specialization s = specialize(C, gc.f, gc.t);
    return s.status == SpecializationStatus::Irreducible && s.fiber_poly == gc.fiber_poly &&
           s.fiber_poly == gc.fiber_cert.modulus && s.fiber_poly.degree() == function_degree(C, gc.f) &&
           gc.fiber_cert.verdict == Verdict::Primitive && verify_certificate(gc.fiber_cert);
}

struct SearchOptions {
    std::size_t max_candidates = 5000;
    std::size_t t_per_candidate = 40;
    bool paranoid = false;
    std::uint64_t seed = 0;
};

struct FoundFunction {
    CurveFunction f;
    GenericCertificate certificate;
    std::size_t candidates_examined = 0;
    std::size_t skipped_degree = 0;
    std::size_t skipped_imprimitive = 0;
};

namespace detail {

/// Tails with entries in 0, 1, -1, ..., H, -H of height exactly H, most
/// significant entry first.
inline void tails_of_height(std::size_t k, long H, const std::function<bool(const std::vector<long>&)>& visit)
{
    std::vector<long> order{0};
    for (long v = 1; v <= H; ++v) {
        order.push_back(v);
        order.push_back(-v);
    }
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        std::vector<long> tail(k);
        long top = 0;
        for (std::size_t i = 0; i < k; ++i) {
            tail[i] = order[idx[i]];
            top = std::max(top, std::abs(tail[i]));
        }
        if (top == H && !visit(tail))
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] + 1 == order.size()) {
            idx[i - 1] = 0;
            --i;
        }
        if (i == 0)
            return;
        ++idx[i - 1];
    }
}

/// First t by height whose fiber is multiplicity-one, if any.
inline std::optional<Divisor> first_unramified_fiber(const HyperellipticCurve& C, const CurveFunction& f,
                                                     std::size_t tries)
{
    HeightIterator it;
    for (std::size_t i = 0; i < tries; ++i) {
        FiberDivisor fd = fiber_divisor(C, f, it.next());
        if (fd.multiplicity_one && fd.divisor.support().size() <= 12)
            return fd.divisor;
    }
    return std::nullopt;
}

} // namespace detail

/// Searches L(d*inf) by coefficient height for a primitive function of degree
/// d, certified by an irreducible primitive specialization.
inline FoundFunction find_primitive_function(const HyperellipticCurve& C, long d, const SearchOptions& opt = {})
{
    if (d <= 2 * C.genus())
        fail(ErrorKind::OutOfTheoremRange, "d = " + std::to_string(d) + " <= 2g = " + std::to_string(2 * C.genus()));
    const Divisor D = Divisor::infinity(d);
    std::vector<CurveFunction> basis = detail::infinity_basis(C, d);
    std::vector<long> pole;
    for (const auto& b : basis)
        pole.push_back(b.is_constant() ? 0 : -function_valuation(C, b, Place::infinity()));
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pole[a] > pole[b]; });
    const CurveFunction& lead = basis[order[0]];

    const PolynomialDecomposer decomposer(C, d);
    FoundFunction out;
    std::optional<FoundFunction> result;
    auto try_candidate = [&](const std::vector<long>& tail) {
        if (out.candidates_examined >= opt.max_candidates)
            return false;
        ++out.candidates_examined;
        CurveFunction f = lead;
        for (std::size_t i = 0; i < tail.size(); ++i)
            if (tail[i] != 0)
                f = f + Rational(tail[i]) * basis[order[i + 1]];
        if (function_degree(C, f) < d) {
            ++out.skipped_degree;
            return true;
        }
        if (decomposer.find(f)) {
            ++out.skipped_imprimitive;
            return true;
        }
        if (auto fib = detail::first_unramified_fiber(C, f, 8)) {
            if (imprimitive_locus_test(C, *fib, f).verdict == LocusVerdict::Imprimitive) {
                ++out.skipped_imprimitive;
                return true;
            }
        }
        HeightIterator it;
        for (std::size_t i = 0; i < opt.t_per_candidate; ++i) {
            Specialization s = specialize(C, f, it.next(), opt.paranoid, opt.seed);
            if (s.status != SpecializationStatus::Irreducible || s.cert->verdict != Verdict::Primitive)
                continue;
            out.f = f;
            out.certificate = GenericCertificate{CertMethod::GenericFromSpecialization, f, s.t, s.fiber_poly, s.lambda,
                                                 *s.cert};
            result = out;
            return false;
        }
        return true;
    };
    const std::size_t k = basis.size() - 1;
    if (try_candidate(std::vector<long>(k, 0)))
        for (long H = 1; !result && out.candidates_examined < opt.max_candidates; ++H)
            detail::tails_of_height(k, H, try_candidate);
    if (!result)
        fail(ErrorKind::SearchBudgetExhausted,
             "no certified primitive function of degree " + std::to_string(d) + " within the search budget");
    return *result;
}

} // namespace primpts

#endif // PRIMPTS_PROSPECT_SEARCH_HPP
