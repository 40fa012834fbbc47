#ifndef PRIMPTS_HYPCURVE_CURVE_HPP
#define PRIMPTS_HYPCURVE_CURVE_HPP

#include <string>

#include "primpts/error.hpp"
#include "primpts/exactalg/polynomial.hpp"

namespace primpts {

/// y^2 = h(x) with h squarefree of odd degree 2g+1 (one place at infinity).
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(const RatPolynomial& h) : h_(h)
    {
        if (h.degree() < 1 || h.degree() % 2 == 0)
            fail(ErrorKind::UnsupportedModel, "h must have odd degree, got " + std::to_string(h.degree()));
        if (!is_squarefree(h))
            fail(ErrorKind::SingularModel, "h = " + format(h) + " is not squarefree");
        genus_ = (h.degree() - 1) / 2;
    }

    const RatPolynomial& h() const { return h_; }
    int genus() const { return genus_; }
    /// Pole order of y at infinity.
    int y_pole() const { return 2 * genus_ + 1; }

    friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) { return a.h_ == b.h_; }
    friend bool operator!=(const HyperellipticCurve& a, const HyperellipticCurve& b) { return !(a == b); }

private:
    RatPolynomial h_;
    int genus_ = 0;
};

inline HyperellipticCurve curve_new(const RatPolynomial& h) { return HyperellipticCurve(h); }

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_CURVE_HPP
