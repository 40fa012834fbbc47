#ifndef PRIMPTS_EXACTALG_MODP_HPP
#define PRIMPTS_EXACTALG_MODP_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "primpts/error.hpp"
#include "primpts/exactalg/rational.hpp"

namespace primpts {

/// Polynomial over F_p for a word-size prime p, ascending residues.
class ModpPolynomial {
public:
    using u64 = std::uint64_t;

    ModpPolynomial() = default;
    ModpPolynomial(u64 p, std::vector<u64> c) : p_(p), c_(std::move(c))
    {
        for (auto& v : c_)
            v %= p_;
        trim();
    }

    static ModpPolynomial from_integers(const std::vector<Integer>& c, u64 p)
    {
        std::vector<u64> r;
        r.reserve(c.size());
        for (const auto& v : c)
            r.push_back(mpz_fdiv_ui(v.get_mpz_t(), p));
        return ModpPolynomial(p, std::move(r));
    }
    static ModpPolynomial from_signed(u64 p, std::initializer_list<long> c)
    {
        std::vector<u64> r;
        for (long v : c) {
            long m = v % static_cast<long>(p);
            if (m < 0)
                m += static_cast<long>(p);
            r.push_back(static_cast<u64>(m));
        }
        return ModpPolynomial(p, std::move(r));
    }
    static ModpPolynomial constant(u64 p, u64 v) { return ModpPolynomial(p, {v}); }
    static ModpPolynomial x(u64 p) { return ModpPolynomial(p, {0, 1}); }

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    u64 leading() const { return c_.empty() ? 0 : c_.back(); }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u64>& coeffs() const { return c_; }

    static u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
    static u64 pow(u64 a, u64 e, u64 p)
    {
        u64 r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1u)
                r = mul(r, a, p);
            a = mul(a, a, p);
            e >>= 1u;
        }
        return r;
    }
    static u64 inv(u64 a, u64 p)
    {
        if (a % p == 0)
            fail(ErrorKind::DivisionByZero, "inverse of zero mod p");
        return pow(a, p - 2, p);
    }

    friend ModpPolynomial operator+(const ModpPolynomial& a, const ModpPolynomial& b)
    {
        std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return ModpPolynomial(a.p_, std::move(r));
    }
    friend ModpPolynomial operator-(const ModpPolynomial& a, const ModpPolynomial& b)
    {
        std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return ModpPolynomial(a.p_, std::move(r));
    }
    friend ModpPolynomial operator*(const ModpPolynomial& a, const ModpPolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return ModpPolynomial(a.p_, {});
        std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i])
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
                // keep well below overflow for large degrees
                if (acc[i + j] >> 120)
                    acc[i + j] %= a.p_;
            }
        }
        std::vector<u64> r(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i)
            r[i] = static_cast<u64>(acc[i] % a.p_);
        return ModpPolynomial(a.p_, std::move(r));
    }
    ModpPolynomial scaled(u64 s) const
    {
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = mul(c_[i], s, p_);
        return ModpPolynomial(p_, std::move(r));
    }
    friend bool operator==(const ModpPolynomial& a, const ModpPolynomial& b)
    {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    ModpPolynomial monic() const
    {
        if (is_zero())
            return *this;
        return scaled(inv(leading(), p_));
    }

    ModpPolynomial derivative() const
    {
        std::vector<u64> r;
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(mul(c_[i], i % p_, p_));
        return ModpPolynomial(p_, std::move(r));
    }

    /// Valid only when every exponent with nonzero coefficient is divisible by p.
    ModpPolynomial pth_root() const
    {
        std::vector<u64> r;
        for (std::size_t i = 0; i < c_.size(); i += p_)
            r.push_back(c_[i]);
        return ModpPolynomial(p_, std::move(r));
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i)
            s += (i ? "," : "") + std::to_string(c_[i]);
        return s + "] mod " + std::to_string(p_);
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    u64 p_ = 2;
    std::vector<u64> c_;
};

struct ModpDivMod {
    ModpPolynomial quotient;
    ModpPolynomial remainder;
};

inline ModpDivMod divmod(const ModpPolynomial& a, const ModpPolynomial& b)
{
    using u64 = ModpPolynomial::u64;
    const u64 p = a.modulus();
    if (b.is_zero())
        fail(ErrorKind::DivisionByZero, "division by zero polynomial mod p");
    if (a.degree() < b.degree())
        return {ModpPolynomial(p, {}), a};
    std::vector<u64> r = a.coeffs();
    const int db = b.degree();
    std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const u64 inv = ModpPolynomial::inv(b.leading(), p);
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        u64 coef = ModpPolynomial::mul(r[static_cast<std::size_t>(i)], inv, p);
        if (!coef)
            continue;
        q[static_cast<std::size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - db + j)];
            slot = (slot + p - ModpPolynomial::mul(coef, bc[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {ModpPolynomial(p, std::move(q)), ModpPolynomial(p, std::move(r))};
}

inline ModpPolynomial operator%(const ModpPolynomial& a, const ModpPolynomial& b) { return divmod(a, b).remainder; }
inline ModpPolynomial operator/(const ModpPolynomial& a, const ModpPolynomial& b) { return divmod(a, b).quotient; }

inline ModpPolynomial poly_gcd(ModpPolynomial a, ModpPolynomial b)
{
    while (!b.is_zero()) {
        ModpPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct ModpExtGcd {
    ModpPolynomial gcd, s, t;
};

inline ModpExtGcd ext_gcd(const ModpPolynomial& a, const ModpPolynomial& b)
{
    const auto p = a.modulus();
    ModpPolynomial r0 = a, r1 = b;
    ModpPolynomial s0 = ModpPolynomial::constant(p, 1), s1(p, {});
    ModpPolynomial t0(p, {}), t1 = ModpPolynomial::constant(p, 1);
    while (!r1.is_zero()) {
        auto qr = divmod(r0, r1);
        ModpPolynomial s2 = s0 - qr.quotient * s1;
        ModpPolynomial t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    auto inv = ModpPolynomial::inv(r0.leading(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m, e an arbitrary-precision exponent.
inline ModpPolynomial powmod(const ModpPolynomial& base, const Integer& e, const ModpPolynomial& m)
{
    ModpPolynomial r = ModpPolynomial::constant(base.modulus(), 1) % m;
    ModpPolynomial b = base % m;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * b) % m;
    }
    return r;
}

struct ModpFactorList {
    ModpPolynomial::u64 unit = 1;
    std::vector<std::pair<ModpPolynomial, int>> factors; // monic irreducible, multiplicity
};

namespace detail {

inline std::vector<std::pair<ModpPolynomial, int>> squarefree_modp(const ModpPolynomial& f)
{
    // f monic
    std::vector<std::pair<ModpPolynomial, int>> out;
    const auto p = f.modulus();
    if (f.degree() <= 0)
        return out;
    ModpPolynomial c = poly_gcd(f, f.derivative());
    ModpPolynomial w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        ModpPolynomial y = poly_gcd(w, c);
        ModpPolynomial fac = w / y;
        if (fac.degree() > 0)
            out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_modp(c.monic().pth_root()))
            out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<ModpPolynomial, int>> distinct_degree(ModpPolynomial f)
{
    std::vector<std::pair<ModpPolynomial, int>> out;
    const auto p = f.modulus();
    const ModpPolynomial x = ModpPolynomial::x(p);
    ModpPolynomial h = x;
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
        ModpPolynomial g = poly_gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f.monic(), f.degree());
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting.
inline void equal_degree(const ModpPolynomial& g, int d, std::mt19937_64& rng, std::vector<ModpPolynomial>& out)
{
    const int n = g.degree();
    if (n == d) {
        out.push_back(g.monic());
        return;
    }
    const auto p = g.modulus();
    std::uniform_int_distribution<ModpPolynomial::u64> coin(0, p - 1);
    Integer exponent;
    if (p != 2) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
        exponent = (exponent - 1) / 2;
    }
    for (;;) {
        std::vector<ModpPolynomial::u64> rc(static_cast<std::size_t>(n));
        for (auto& v : rc)
            v = coin(rng);
        ModpPolynomial a(p, std::move(rc));
        if (a.degree() < 1)
            continue;
        ModpPolynomial b(p, {});
        if (p == 2) {
            ModpPolynomial term = a % g;
            b = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            b = powmod(a, exponent, g) - ModpPolynomial::constant(p, 1);
        }
        ModpPolynomial c = poly_gcd(b, g);
        if (c.degree() > 0 && c.degree() < n) {
            equal_degree(c, d, rng, out);
            equal_degree(g / c, d, rng, out);
            return;
        }
    }
}

inline bool modp_less(const ModpPolynomial& a, const ModpPolynomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

} // namespace detail

/// Complete factorization over F_p. Randomized splitting is driven by seed.
inline ModpFactorList factor_mod_p(const ModpPolynomial& f, std::uint64_t seed = 0)
{
    const auto p = f.modulus();
    if (!is_prime(p))
        fail(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " is not prime");
    if (f.is_zero())
        fail(ErrorKind::InvalidInput, "factorization of zero polynomial");
    ModpFactorList out;
    out.unit = f.leading();
    std::mt19937_64 rng(seed);
    for (auto& [piece, mult] : detail::squarefree_modp(f.monic())) {
        for (auto& [block, d] : detail::distinct_degree(piece)) {
            std::vector<ModpPolynomial> irr;
            detail::equal_degree(block, d, rng, irr);
            for (auto& g : irr)
                out.factors.emplace_back(g, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first)
            return a.second < b.second;
        return detail::modp_less(a.first, b.first);
    });
    return out;
}

} // namespace primpts

#endif // PRIMPTS_EXACTALG_MODP_HPP
