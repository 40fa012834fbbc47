#ifndef PRIMPTS_EXACTALG_RATIONAL_HPP
#define PRIMPTS_EXACTALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "primpts/error.hpp"

namespace primpts {

// GMP keeps mpq_class canonical after every arithmetic operation; values
// built from a raw numerator/denominator pair go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "p/q", with optional sign. Accepts the unicode minus sign.
inline Rational parse_rational(std::string_view text)
{
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
        } else if (c != ' ') {
            s.push_back(static_cast<char>(c));
        }
    }
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    if (s.empty())
        fail(ErrorKind::InvalidInput, "empty rational literal");
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && d[0] == '-')
            d.remove_prefix(1);
        if (d.empty())
            return false;
        for (char ch : d)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        fail(ErrorKind::InvalidInput, "malformed rational literal '" + std::string(text) + "'");
    return make_rational(Integer(num), Integer(den));
}

/// max(|numerator|, denominator)
inline Integer height(const Rational& r)
{
    Integer n = abs(r.get_num());
    return n > r.get_den() ? n : r.get_den();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact square root of a rational if it is a perfect square.
inline bool rational_sqrt(const Rational& r, Rational& out)
{
    if (r < 0)
        return false;
    if (r == 0) {
        out = 0;
        return true;
    }
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    out = make_rational(n, d);
    return true;
}

inline Rational rational_pow(const Rational& base, unsigned long e)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace primpts

#endif // PRIMPTS_EXACTALG_RATIONAL_HPP
