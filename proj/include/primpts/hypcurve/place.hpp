#ifndef PRIMPTS_HYPCURVE_PLACE_HPP
#define PRIMPTS_HYPCURVE_PLACE_HPP

#include <string>
#include <vector>

#include "primpts/exactalg/factor.hpp"
#include "primpts/hypcurve/curve.hpp"
#include "primpts/numfield/trager.hpp"

namespace primpts {

enum class PlaceKind { Infinity, Split, Ramified, Inert };

inline std::string to_string(PlaceKind k)
{
    switch (k) {
    case PlaceKind::Infinity: return "Infinity";
    case PlaceKind::Split: return "Split";
    case PlaceKind::Ramified: return "Ramified";
    case PlaceKind::Inert: return "Inert";
    }
    return "Unknown";
}

/// A closed point of the curve. Affine places lie over the monic irreducible
/// u(x); a split place also carries v with deg v < deg u and v^2 = h mod u.
struct Place {
    PlaceKind kind = PlaceKind::Infinity;
    RatPolynomial u;
    RatPolynomial v;

    static Place infinity() { return Place{}; }
    bool is_infinity() const { return kind == PlaceKind::Infinity; }

    int degree() const
    {
        switch (kind) {
        case PlaceKind::Infinity: return 1;
        case PlaceKind::Inert: return 2 * u.degree();
        default: return u.degree();
        }
    }

    /// Ramification index over the x-line.
    int ramification() const { return kind == PlaceKind::Ramified || kind == PlaceKind::Infinity ? 2 : 1; }

    std::string to_string() const
    {
        switch (kind) {
        case PlaceKind::Infinity: return "inf";
        case PlaceKind::Split: return "place(u=" + format(u) + ",v=" + format(v) + ")";
        default: return "place(u=" + format(u) + ")";
        }
    }

    friend bool operator==(const Place& a, const Place& b)
    {
        return a.kind == b.kind && a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    /// Infinity first, then by u, then kind, then v.
    friend bool operator<(const Place& a, const Place& b)
    {
        if (a.is_infinity() != b.is_infinity())
            return a.is_infinity();
        if (a.u != b.u)
            return poly_less(a.u, b.u);
        if (a.kind != b.kind)
            return a.kind < b.kind;
        if (a.v == b.v)
            return false;
        // the root with positive leading coefficient sorts first
        const int sa = a.v.is_zero() ? 0 : sgn(a.v.leading());
        const int sb = b.v.is_zero() ? 0 : sgn(b.v.leading());
        if (sa != sb)
            return sa > sb;
        return poly_less(a.v, b.v);
    }
};

/// The conjugate of a place under y -> -y.
inline Place conjugate(const Place& p)
{
    if (p.kind != PlaceKind::Split)
        return p;
    Place q = p;
    q.v = (-p.v) % p.u;
    return q;
}

/// All places above the closed point u of the x-line.
inline std::vector<Place> places_over_x(const HyperellipticCurve& C, const RatPolynomial& u0)
{
    if (u0.degree() < 1)
        fail(ErrorKind::InvalidInput, "places_over_x needs a nonconstant u");
    const RatPolynomial u = u0.monic();
    if (u.degree() > 1 && !is_irreducible(u))
        fail(ErrorKind::InvalidInput, "u = " + format(u) + " is reducible");
    if (divides(u, C.h()))
        return {Place{PlaceKind::Ramified, u, {}}};
    std::optional<RatPolynomial> root;
    if (u.degree() == 1) {
        Rational r;
        if (rational_sqrt(C.h()(-u[0]), r))
            root = RatPolynomial::constant(r);
    } else {
        NumberField K = NumberField::unchecked(u);
        NFPolynomial y2{-K.element(C.h()), K.zero(), K.one()};
        auto fl = trager_factor(y2, K);
        if (fl.factors.size() == 2)
            root = (-fl.factors[0].first[0]).rep();
    }
    if (!root)
        return {Place{PlaceKind::Inert, u, {}}};
    Place a{PlaceKind::Split, u, *root};
    Place b = conjugate(a);
    if (b < a)
        std::swap(a, b);
    return {a, b};
}

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_PLACE_HPP
