#ifndef PRIMPTS_NUMFIELD_NUMBER_FIELD_HPP
#define PRIMPTS_NUMFIELD_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "primpts/error.hpp"
#include "primpts/exactalg/factor.hpp"
#include "primpts/exactalg/polynomial.hpp"

namespace primpts {

namespace detail {
struct NumberFieldData {
    RatPolynomial modulus;
    int degree;
};
} // namespace detail

class FieldElement;

/// Q[x]/(m) for a monic irreducible m.
class NumberField {
public:
    /// Certifies irreducibility; a reducible modulus raises NotAField.
    explicit NumberField(const RatPolynomial& m)
    {
        if (m.degree() < 1)
            fail(ErrorKind::NotAField, "modulus must be nonconstant");
        RatPolynomial mm = m.monic();
        if (!is_irreducible(mm))
            fail(ErrorKind::NotAField, "modulus " + format(mm) + " is reducible");
        d_ = std::make_shared<const detail::NumberFieldData>(detail::NumberFieldData{mm, mm.degree()});
    }

    /// For moduli already known to be irreducible (e.g. factors just computed).
    static NumberField unchecked(const RatPolynomial& m)
    {
        NumberField f;
        RatPolynomial mm = m.monic();
        f.d_ = std::make_shared<const detail::NumberFieldData>(detail::NumberFieldData{mm, mm.degree()});
        return f;
    }

    const RatPolynomial& modulus() const { return d_->modulus; }
    int degree() const { return d_->degree; }

    FieldElement element(const RatPolynomial& rep) const;
    FieldElement from_coeffs(std::vector<Rational> coeffs) const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement theta() const;
    FieldElement zero() const;
    FieldElement one() const;

    friend bool operator==(const NumberField& a, const NumberField& b)
    {
        return a.d_ == b.d_ || a.d_->modulus == b.d_->modulus;
    }
    friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

    const std::shared_ptr<const detail::NumberFieldData>& data() const { return d_; }

private:
    NumberField() = default;
    explicit NumberField(std::shared_ptr<const detail::NumberFieldData> d) : d_(std::move(d)) {}
    friend class FieldElement;
    std::shared_ptr<const detail::NumberFieldData> d_;
};

/// Element of a number field in the power basis. A default-constructed or
/// rational-constructed element is "detached": a rational constant that adopts
/// the field of whatever it is combined with.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(int v) : rep_(RatPolynomial::constant(Rational(v))) {}
    FieldElement(long v) : rep_(RatPolynomial::constant(Rational(v))) {}
    FieldElement(const Rational& v) : rep_(RatPolynomial::constant(v)) {}
    FieldElement(std::shared_ptr<const detail::NumberFieldData> f, RatPolynomial rep) : f_(std::move(f))
    {
        rep_ = f_ ? rep % f_->modulus : std::move(rep);
    }

    bool attached() const { return static_cast<bool>(f_); }
    NumberField field() const
    {
        if (!f_)
            fail(ErrorKind::InvalidInput, "detached field element has no owner");
        return NumberField(f_);
    }
    const RatPolynomial& rep() const { return rep_; }

    /// Exactly degree-many coordinates in the basis 1, theta, ..., theta^(d-1).
    std::vector<Rational> coeffs() const
    {
        if (!f_)
            fail(ErrorKind::InvalidInput, "detached field element has no coordinates");
        std::vector<Rational> c(static_cast<std::size_t>(f_->degree));
        for (std::size_t i = 0; i < rep_.size(); ++i)
            c[i] = rep_[i];
        return c;
    }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_value() const { return rep_.coeff(0); }

    FieldElement& operator+=(const FieldElement& o)
    {
        adopt(o);
        rep_ += o.rep_;
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o)
    {
        adopt(o);
        rep_ -= o.rep_;
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o)
    {
        adopt(o);
        if (rep_.degree() <= 0 || o.rep_.degree() <= 0) {
            rep_ = rep_ * o.rep_;
            return *this;
        }
        rep_ = (rep_ * o.rep_) % f_->modulus;
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o)
    {
        FieldElement inv = o.inverse();
        return *this *= inv;
    }

    FieldElement inverse() const
    {
        if (rep_.is_zero())
            fail(ErrorKind::DivisionByZero, "inverse of zero field element");
        if (rep_.degree() == 0)
            return FieldElement(f_, RatPolynomial::constant(1 / rep_[0]));
        return FieldElement(f_, inverse_mod(rep_, f_->modulus));
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(FieldElement a, const Rational& s)
    {
        a.rep_ *= s;
        return a;
    }
    friend FieldElement operator*(const Rational& s, FieldElement a) { return a * s; }
    friend FieldElement operator+(FieldElement a, const Rational& s)
    {
        a.rep_ += RatPolynomial::constant(s);
        return a;
    }
    friend FieldElement operator-(FieldElement a)
    {
        a.rep_ = -a.rep_;
        return a;
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        if (a.f_ && b.f_ && a.f_ != b.f_ && a.f_->modulus != b.f_->modulus)
            return false;
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement pow(unsigned long e) const
    {
        FieldElement r(f_, RatPolynomial::constant(Rational(1)));
        FieldElement b = *this;
        while (e) {
            if (e & 1u)
                r *= b;
            e >>= 1u;
            if (e)
                b *= b;
        }
        return r;
    }

    std::string to_string() const { return format(rep_, "t"); }

private:
    void adopt(const FieldElement& o)
    {
        if (!o.f_)
            return;
        if (!f_) {
            f_ = o.f_;
            return;
        }
        if (f_ != o.f_ && f_->modulus != o.f_->modulus)
            fail(ErrorKind::InvalidInput, "arithmetic between elements of different number fields");
    }

    std::shared_ptr<const detail::NumberFieldData> f_;
    RatPolynomial rep_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }

inline FieldElement NumberField::element(const RatPolynomial& rep) const { return FieldElement(d_, rep); }
inline FieldElement NumberField::from_coeffs(std::vector<Rational> coeffs) const
{
    return FieldElement(d_, RatPolynomial(std::move(coeffs)));
}
inline FieldElement NumberField::from_rational(const Rational& r) const
{
    return FieldElement(d_, RatPolynomial::constant(r));
}
inline FieldElement NumberField::theta() const { return FieldElement(d_, RatPolynomial::x()); }
inline FieldElement NumberField::zero() const { return FieldElement(d_, RatPolynomial{}); }
inline FieldElement NumberField::one() const { return from_rational(1); }

enum class FieldOp { Add, Mul, Inv };

/// Single entry point for the field operations; b is ignored for Inv.
inline FieldElement nf_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op)
{
    if (a.attached() && b.attached() && a.field() != b.field())
        fail(ErrorKind::InvalidInput, "operands belong to different number fields");
    switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Inv: return a.inverse();
    }
    fail(ErrorKind::InvalidInput, "unknown field operation");
}

/// Minimal polynomial over Q of an element, by the first linear dependence
/// among its powers.
inline RatPolynomial minimal_polynomial(const FieldElement& a)
{
    if (!a.attached() || a.is_rational())
        return RatPolynomial{-a.rational_value(), Rational(1)};
    const int d = a.field().degree();
    // Incremental elimination over the coordinate vectors of 1, a, a^2, ...
    std::vector<std::vector<Rational>> rows;      // reduced coordinate rows
    std::vector<std::vector<Rational>> combos;    // expression in powers
    std::vector<int> pivot_of;
    FieldElement power = a.field().one();
    for (int k = 0; k <= d; ++k) {
        std::vector<Rational> v = power.coeffs();
        std::vector<Rational> c(static_cast<std::size_t>(d + 1));
        c[static_cast<std::size_t>(k)] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto piv = static_cast<std::size_t>(pivot_of[r]);
            if (sgn(v[piv]) == 0)
                continue;
            Rational f = v[piv];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= f * rows[r][j];
            for (std::size_t j = 0; j < c.size(); ++j)
                c[j] -= f * combos[r][j];
        }
        int piv = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sgn(v[j]) != 0) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) {
            c.resize(static_cast<std::size_t>(k + 1));
            return RatPolynomial(std::move(c)).monic();
        }
        Rational inv = 1 / v[static_cast<std::size_t>(piv)];
        for (auto& e : v)
            e *= inv;
        for (auto& e : c)
            e *= inv;
        rows.push_back(std::move(v));
        combos.push_back(std::move(c));
        pivot_of.push_back(piv);
        power *= a;
    }
    fail(ErrorKind::InvalidInput, "minimal polynomial search exceeded field degree");
}

} // namespace primpts

#endif // PRIMPTS_NUMFIELD_NUMBER_FIELD_HPP
