#ifndef PRIMPTS_PROSPECT_PROSPECT_HPP
#define PRIMPTS_PROSPECT_PROSPECT_HPP

#include <map>
#include <vector>

#include "primpts/contract/enumerate.hpp"
#include "primpts/prospect/fiber.hpp"
#include "primpts/prospect/height.hpp"

namespace primpts {

struct ProspectOptions {
    std::size_t t_count = 200;
    bool paranoid = false;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

struct PrimitivePoint {
    Rational t;
    RatPolynomial minpoly;
    PrimitivityCertificate cert;
};

struct ProspectReport {
    RatPolynomial h;
    CurveFunction f;
    long d = 0;
    std::vector<Specialization> specializations;
    std::vector<PrimitivePoint> primitive_points;
    std::map<std::string, long> counts; // per status, plus "Primitive"/"Imprimitive"
};

/// Specializes f at the first t_count rationals by height.
inline ProspectReport prospect(const HyperellipticCurve& C, const CurveFunction& f, const ProspectOptions& opt = {})
{
    ProspectReport r;
    r.h = C.h();
    r.f = f;
    r.d = function_degree(C, f);
    if (r.d < 2)
        fail(ErrorKind::PreconditionFailed, "prospect needs a function of degree at least 2");
    const auto ts = HeightIterator::first(opt.t_count);
    r.specializations.resize(ts.size());
    detail::parallel_for(ts.size(), opt.jobs, [&](std::size_t i) {
        r.specializations[i] = specialize(C, f, ts[i], opt.paranoid, opt.seed);
    });
    for (const char* k : {"Reducible", "BranchLike", "Irreducible", "DegeneratePresentation", "Primitive", "Imprimitive"})
        r.counts[k] = 0;
    for (const auto& s : r.specializations) {
        ++r.counts[to_string(s.status)];
        if (!s.cert)
            continue;
        ++r.counts[to_string(s.cert->verdict)];
        if (s.cert->verdict == Verdict::Primitive)
            r.primitive_points.push_back({s.t, s.fiber_poly, *s.cert});
    }
    return r;
}

} // namespace primpts

#endif // PRIMPTS_PROSPECT_PROSPECT_HPP
