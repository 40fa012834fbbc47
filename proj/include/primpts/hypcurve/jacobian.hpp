#ifndef PRIMPTS_HYPCURVE_JACOBIAN_HPP
#define PRIMPTS_HYPCURVE_JACOBIAN_HPP

#include <map>
#include <string>

#include "primpts/hypcurve/valuation.hpp"

namespace primpts {

/// Semi-reduced divisor (u, v): u monic, deg v < deg u, u | v^2 - h.
struct Mumford {
    RatPolynomial u = RatPolynomial::constant(Rational(1));
    RatPolynomial v;

    bool is_identity() const { return u.degree() == 0; }
    friend bool operator==(const Mumford& a, const Mumford& b) { return a.u == b.u && a.v == b.v; }
    std::string to_string() const { return "(" + format(u) + ", " + format(v) + ")"; }
};

inline bool is_valid_mumford(const HyperellipticCurve& C, const Mumford& D)
{
    return D.u.degree() >= 0 && D.u.leading() == 1 && D.v.degree() < D.u.degree() &&
           divides(D.u, D.v * D.v - C.h());
}

/// Cantor composition; the result is semi-reduced but not reduced.
inline Mumford cantor_compose(const HyperellipticCurve& C, const Mumford& D1, const Mumford& D2)
{
    auto g1 = ext_gcd(D1.u, D2.u);
    auto g2 = ext_gcd(g1.gcd, D1.v + D2.v);
    const RatPolynomial& d = g2.gcd;
    RatPolynomial s1 = g2.s * g1.s, s2 = g2.s * g1.t, s3 = g2.t;
    Mumford out;
    out.u = exact_div(D1.u * D2.u, d * d).monic();
    RatPolynomial num = s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + C.h());
    out.v = exact_div(num, d) % out.u;
    return out;
}

/// Reduction until deg u <= g.
inline Mumford cantor_reduce(const HyperellipticCurve& C, Mumford D)
{
    D.v = D.v % D.u;
    while (D.u.degree() > C.genus()) {
        RatPolynomial u2 = exact_div(C.h() - D.v * D.v, D.u).monic();
        RatPolynomial v2 = (-D.v) % u2;
        D.u = std::move(u2);
        D.v = std::move(v2);
    }
    if (D.u.degree() == 0)
        D.v = RatPolynomial{};
    return D;
}

inline Mumford cantor_add(const HyperellipticCurve& C, const Mumford& a, const Mumford& b)
{
    return cantor_reduce(C, cantor_compose(C, a, b));
}

/// Mumford representative of the class of A - deg(A)*inf, where A is the
/// affine part of D. Inert places and conjugate pairs are pullbacks from the
/// x-line and drop out; a ramified place keeps its multiplicity mod 2.
inline Mumford mumford_of(const HyperellipticCurve& C, const Divisor& D)
{
    std::map<RatPolynomial, std::map<Place, long>, PolyLess> by_u;
    for (const auto& [P, m] : D.entries())
        if (!P.is_infinity())
            by_u[P.u][P] = m;
    Mumford acc;
    for (const auto& [u, places] : by_u) {
        Mumford piece;
        const Place& first = places.begin()->first;
        if (first.kind == PlaceKind::Inert)
            continue;
        if (first.kind == PlaceKind::Ramified) {
            if (places.begin()->second % 2 == 0)
                continue;
            piece.u = u;
        } else {
            Place p = first;
            long net = places.begin()->second;
            Place q = conjugate(p);
            auto it = places.find(q);
            if (it != places.end())
                net -= it->second;
            if (net == 0)
                continue;
            if (net < 0) {
                p = q;
                net = -net;
            }
            piece.u = pow(u, static_cast<unsigned>(net));
            piece.v = lift_square_root(C.h(), u, p.v, net);
        }
        acc = cantor_compose(C, acc, piece);
    }
    return acc;
}

/// Reduced representative of the class of a degree-0 divisor.
inline Mumford cantor_reduce(const HyperellipticCurve& C, const Divisor& D)
{
    if (D.degree() != 0)
        fail(ErrorKind::InvalidInput, "divisor class reduction needs degree 0, got " + std::to_string(D.degree()));
    return cantor_reduce(C, mumford_of(C, D));
}

inline bool is_principal(const HyperellipticCurve& C, const Divisor& D) { return cantor_reduce(C, D).is_identity(); }

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_JACOBIAN_HPP
