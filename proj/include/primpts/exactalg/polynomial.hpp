#ifndef PRIMPTS_EXACTALG_POLYNOMIAL_HPP
#define PRIMPTS_EXACTALG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primpts/error.hpp"
#include "primpts/exactalg/rational.hpp"

namespace primpts {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

namespace detail {
template <class T>
bool coeff_is_zero(const T& v)
{
    return is_zero(v);
}
} // namespace detail

/// Dense univariate polynomial over a field T, ascending coefficients, no
/// trailing zeros. T must provide field arithmetic, construction from int and
/// an ADL-visible is_zero.
template <class T>
class Polynomial {
public:
    using coeff_type = T;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(const T& v, std::size_t k)
    {
        std::vector<T> c(k + 1, T(0));
        c[k] = v;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }
    const T& leading() const
    {
        if (c_.empty())
            fail(ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
        return c_.back();
    }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<T>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s)
    {
        for (auto& v : c_)
            v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (primpts_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.c_.size() != b.c_.size())
            return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Horner evaluation at a point of any ring that accepts T scalars.
    template <class U>
    U evaluate(const U& at) const
    {
        U acc = at * T(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * at + c_[i];
        return acc;
    }
    T operator()(const T& at) const
    {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * at + c_[i];
        return acc;
    }

    /// this(q(x))
    Polynomial compose(const Polynomial& q) const
    {
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * q + constant(c_[i]);
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<T> r(c_.size() - 1, T(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    Polynomial monic() const
    {
        if (is_zero())
            return {};
        T inv = T(1) / leading();
        return *this * inv;
    }

    /// x^k * this
    Polynomial shift_up(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    /// this mod x^k
    Polynomial truncate(std::size_t k) const
    {
        if (c_.size() <= k)
            return *this;
        return Polynomial(std::vector<T>(c_.begin(), c_.begin() + static_cast<long>(k)));
    }

private:
    static bool primpts_is_zero(const T& v) { return detail::coeff_is_zero(v); }
    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPolynomial = Polynomial<Rational>;

template <class T>
struct DivMod {
    Polynomial<T> quotient;
    Polynomial<T> remainder;
};

template <class T>
DivMod<T> divmod(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (b.is_zero())
        fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial<T>{}, a};
    std::vector<T> r = a.coeffs();
    const int db = b.degree();
    std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    T inv = T(1) / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        T coef = r[static_cast<std::size_t>(i)] * inv;
        if (detail::coeff_is_zero(coef))
            continue;
        q[static_cast<std::size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= coef * b[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

template <class T>
Polynomial<T> operator/(const Polynomial<T>& a, const Polynomial<T>& b)
{
    return divmod(a, b).quotient;
}
template <class T>
Polynomial<T> operator%(const Polynomial<T>& a, const Polynomial<T>& b)
{
    return divmod(a, b).remainder;
}

/// Division that must be exact; otherwise InvalidInput.
template <class T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b)
{
    auto qr = divmod(a, b);
    if (!qr.remainder.is_zero())
        fail(ErrorKind::InvalidInput, "inexact polynomial division");
    return qr.quotient;
}

template <class T>
bool divides(const Polynomial<T>& d, const Polynomial<T>& a)
{
    return (a % d).is_zero();
}

/// Monic gcd. gcd(0, 0) is an error.
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b)
{
    if (a.is_zero() && b.is_zero())
        fail(ErrorKind::InvalidInput, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class T>
struct ExtGcd {
    Polynomial<T> gcd; // monic
    Polynomial<T> s;   // s*a + t*b = gcd
    Polynomial<T> t;
};

template <class T>
ExtGcd<T> ext_gcd(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (a.is_zero() && b.is_zero())
        fail(ErrorKind::InvalidInput, "extended gcd of two zero polynomials");
    Polynomial<T> r0 = a, r1 = b;
    Polynomial<T> s0 = Polynomial<T>::constant(T(1)), s1;
    Polynomial<T> t0, t1 = Polynomial<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto qr = divmod(r0, r1);
        Polynomial<T> s2 = s0 - qr.quotient * s1;
        Polynomial<T> t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    T inv = T(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Inverse of a modulo m; DivisionByZero when not coprime.
template <class T>
Polynomial<T> inverse_mod(const Polynomial<T>& a, const Polynomial<T>& m)
{
    Polynomial<T> ar = a % m;
    if (ar.is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero residue");
    auto eg = ext_gcd(ar, m);
    if (eg.gcd.degree() != 0)
        fail(ErrorKind::DivisionByZero, "residue not invertible");
    return eg.s % m;
}

template <class T>
Polynomial<T> pow(const Polynomial<T>& base, unsigned e)
{
    Polynomial<T> r = Polynomial<T>::constant(T(1));
    Polynomial<T> b = base;
    while (e) {
        if (e & 1u)
            r *= b;
        e >>= 1u;
        if (e)
            b *= b;
    }
    return r;
}

/// Monic product of the distinct irreducible factors (characteristic zero).
template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& p)
{
    if (p.is_zero())
        fail(ErrorKind::InvalidInput, "squarefree part of zero");
    if (p.degree() == 0)
        return Polynomial<T>::constant(T(1));
    return (p / poly_gcd(p, p.derivative())).monic();
}

template <class T>
bool is_squarefree(const Polynomial<T>& p)
{
    if (p.degree() <= 0)
        return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

/// Yun's algorithm: p = lc * prod_i f_i^i, f_i monic squarefree and coprime.
/// Returns the (f_i, i) with deg f_i > 0.
template <class T>
std::vector<std::pair<Polynomial<T>, int>> squarefree_decomposition(const Polynomial<T>& p)
{
    if (p.is_zero())
        fail(ErrorKind::InvalidInput, "squarefree decomposition of zero");
    std::vector<std::pair<Polynomial<T>, int>> out;
    if (p.degree() == 0)
        return out;
    Polynomial<T> f = p.monic();
    Polynomial<T> df = f.derivative();
    Polynomial<T> a = poly_gcd(f, df);
    Polynomial<T> b = f / a;
    Polynomial<T> c = df / a;
    Polynomial<T> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial<T> g = poly_gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

/// Resultant with the Sylvester-determinant sign convention.
template <class T>
T resultant(const Polynomial<T>& a0, const Polynomial<T>& b0)
{
    if (a0.is_zero() || b0.is_zero())
        fail(ErrorKind::InvalidInput, "resultant of zero polynomial");
    Polynomial<T> a = a0, b = b0;
    T acc(1);
    for (;;) {
        const int m = a.degree(), n = b.degree();
        if (n == 0) {
            T r = acc;
            for (int i = 0; i < m; ++i)
                r *= b.leading();
            return r;
        }
        if (m == 0) {
            T r = acc;
            for (int i = 0; i < n; ++i)
                r *= a.leading();
            return r;
        }
        if (m < n) {
            if ((m * n) % 2)
                acc = -acc;
            std::swap(a, b);
            continue;
        }
        // res(a,b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r), r = a mod b
        Polynomial<T> r = a % b;
        if (r.is_zero())
            return T(0);
        if ((m * n) % 2)
            acc = -acc;
        for (int i = 0; i < m - r.degree(); ++i)
            acc *= b.leading();
        a = std::move(b);
        b = std::move(r);
    }
}

/// Deterministic total order: by degree, then ascending coefficient vectors.
inline bool poly_less(const RatPolynomial& a, const RatPolynomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

struct PolyLess {
    bool operator()(const RatPolynomial& a, const RatPolynomial& b) const { return poly_less(a, b); }
};

inline Integer poly_height(const RatPolynomial& p)
{
    Integer h = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = height(c);
        if (v > h)
            h = v;
    }
    return h;
}

/// Human-readable form, highest degree first, e.g. "x^2 - 3/2*x + 1".
inline std::string format(const RatPolynomial& p, const std::string& var = "x")
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p[static_cast<std::size_t>(i)];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0)
                os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) { return os << format(p); }

/// Ascending exact-rational strings, e.g. x^3+1 -> ["1","0","0","1"].
inline std::vector<std::string> to_strings(const RatPolynomial& p)
{
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs())
        out.push_back(c.get_str());
    return out;
}

inline RatPolynomial from_strings(const std::vector<std::string>& s)
{
    std::vector<Rational> c;
    c.reserve(s.size());
    for (const auto& v : s)
        c.push_back(parse_rational(v));
    return RatPolynomial(std::move(c));
}

inline RatPolynomial rat_poly(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

/// Writes p = content * prim with prim in Z[x] primitive and positive leading
/// coefficient.
inline std::pair<Rational, std::vector<Integer>> primitive_integer_part(const RatPolynomial& p)
{
    if (p.is_zero())
        fail(ErrorKind::InvalidInput, "primitive part of zero");
    Integer den = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    z.reserve(p.size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (z.back() < 0)
        g = -g;
    for (auto& v : z)
        v /= g;
    return {make_rational(g, den), std::move(z)};
}

namespace detail {

/// Pseudo-remainder of integer polynomials: lc(b)^(deg a - deg b + 1) * a mod b.
inline std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b)
{
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() > db && !a.empty()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& v : a)
            v *= lb;
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] -= la * b[j];
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

inline std::vector<Integer> integer_primitive(std::vector<Integer> a)
{
    Integer g = 0;
    for (const auto& v : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (a.back() < 0)
        g = -g;
    for (auto& v : a)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return a;
}

} // namespace detail

/// Monic gcd over Q by the primitive remainder sequence in Z[x], which keeps
/// coefficient growth in check.
inline RatPolynomial poly_gcd(const RatPolynomial& a0, const RatPolynomial& b0)
{
    if (a0.is_zero() && b0.is_zero())
        fail(ErrorKind::InvalidInput, "gcd of two zero polynomials");
    if (a0.is_zero() || b0.is_zero())
        return (a0.is_zero() ? b0 : a0).monic();
    std::vector<Integer> a = primitive_integer_part(a0).second;
    std::vector<Integer> b = primitive_integer_part(b0).second;
    if (a.size() < b.size())
        std::swap(a, b);
    while (b.size() > 1) {
        std::vector<Integer> r = detail::pseudo_remainder(std::move(a), b);
        a = std::move(b);
        if (r.empty())
            break;
        b = detail::integer_primitive(std::move(r));
    }
    if (b.size() == 1)
        return RatPolynomial::constant(Rational(1));
    std::vector<Rational> c(a.begin(), a.end());
    return RatPolynomial(std::move(c)).monic();
}

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
inline RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j)
                break;
        }
    RatPolynomial acc;
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * RatPolynomial{-xs[k], Rational(1)} + RatPolynomial::constant(dd[k]);
    }
    return acc;
}

} // namespace primpts

#endif // PRIMPTS_EXACTALG_POLYNOMIAL_HPP
