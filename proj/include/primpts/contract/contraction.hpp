#ifndef PRIMPTS_CONTRACT_CONTRACTION_HPP
#define PRIMPTS_CONTRACT_CONTRACTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "primpts/hypcurve/divisor.hpp"
#include "primpts/hypcurve/function.hpp"

namespace primpts {

/// Closed point of the projective line: infinity or a monic irreducible q(z).
/// Rational points are the degree-one q = z - r.
struct P1Point {
    bool infinity = false;
    RatPolynomial q;

    static P1Point at_infinity() { return P1Point{true, {}}; }
    static P1Point rational(const Rational& r) { return P1Point{false, RatPolynomial{-r, Rational(1)}}; }

    int degree() const { return infinity ? 1 : q.degree(); }
    bool is_rational() const { return infinity || q.degree() == 1; }
    Rational value() const { return -q[0]; }

    std::string to_string() const
    {
        if (infinity)
            return "inf";
        if (q.degree() == 1)
            return primpts::to_string(value());
        return format(q, "z");
    }

    friend bool operator==(const P1Point& a, const P1Point& b) { return a.infinity == b.infinity && a.q == b.q; }
    friend bool operator<(const P1Point& a, const P1Point& b)
    {
        if (a.infinity != b.infinity)
            return b.infinity;
        return poly_less(a.q, b.q);
    }
};

/// A map g: X -> P^1 with D = g^*(D').
struct Contraction {
    CurveFunction g;
    long e = 0;
    std::vector<std::pair<P1Point, long>> target_divisor;
    Divisor zeros;  // g^*(0)
    Divisor poles;  // g^*(inf)
    std::vector<Divisor> blocks; // g^*(q) for each q in D', sorted
    bool pullback_verified = false;

    long target_degree() const
    {
        long d = 0;
        for (const auto& [p, m] : target_divisor)
            d += m * p.degree();
        return d;
    }
};

struct ContractionSet {
    Divisor divisor;
    std::vector<Contraction> contractions;
};

} // namespace primpts

#endif // PRIMPTS_CONTRACT_CONTRACTION_HPP
