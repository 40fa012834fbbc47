#ifndef PRIMPTS_CLI_PARSE_HPP
#define PRIMPTS_CLI_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "primpts/hypcurve/function.hpp"
#include "primpts/hypcurve/place.hpp"
#include "primpts/hypcurve/divisor.hpp"

namespace primpts::cli {

class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : Error(ErrorKind::InvalidInput, "at position " + std::to_string(pos) + ": " + what), pos_(pos)
    {
    }
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

struct FunctionExpr {
    std::string source;
    RatPolynomial a, b;

    CurveFunction function() const { return CurveFunction(a, b); }
};

namespace detail {

/// Recursive-descent parser for polynomial expressions in x and y; products
/// reduce y^2 to h(x) when a curve is given.
class ExprParser {
public:
    ExprParser(std::string_view text, const HyperellipticCurve* C, std::size_t offset = 0)
        : s_(text), C_(C), offset_(offset)
    {
    }

    CurveFunction parse_all()
    {
        CurveFunction v = expr();
        skip();
        if (i_ != s_.size())
            error("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

    CurveFunction expr()
    {
        skip();
        CurveFunction acc;
        bool neg = false;
        if (peek('+') || peek('-'))
            neg = s_[i_++] == '-';
        acc = term();
        if (neg)
            acc = -acc;
        for (;;) {
            skip();
            if (peek('+')) {
                ++i_;
                acc = acc + term();
            } else if (peek('-')) {
                ++i_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    std::size_t position() const { return offset_ + i_; }

private:
    [[noreturn]] void error(const std::string& what) const { throw ParseError(offset_ + i_, what); }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

    CurveFunction multiply(const CurveFunction& a, const CurveFunction& b) const
    {
        if (C_)
            return mul(*C_, a, b);
        return CurveFunction(a.a * b.a, RatPolynomial{});
    }

    CurveFunction term()
    {
        CurveFunction acc = power();
        for (;;) {
            skip();
            if (peek('*')) {
                ++i_;
                acc = multiply(acc, power());
            } else if (peek('/')) {
                const std::size_t at = i_;
                ++i_;
                CurveFunction d = power();
                if (!d.is_constant() || d.is_zero()) {
                    i_ = at;
                    error("division only by nonzero constants");
                }
                acc = (1 / d.constant_value()) * acc;
            } else if (i_ < s_.size() && (s_[i_] == '(' || s_[i_] == 'x' || s_[i_] == 'y')) {
                acc = multiply(acc, power());
            } else {
                return acc;
            }
        }
    }

    CurveFunction power()
    {
        CurveFunction base = atom();
        skip();
        if (!peek('^'))
            return base;
        ++i_;
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            error("expected a nonnegative integer exponent");
        if (i_ - start > 4)
            error("exponent too large");
        const long e = std::stol(std::string(s_.substr(start, i_ - start)));
        CurveFunction r = CurveFunction::constant(1);
        for (long k = 0; k < e; ++k)
            r = multiply(r, base);
        return r;
    }

    CurveFunction atom()
    {
        skip();
        if (i_ >= s_.size())
            error("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            CurveFunction v = expr();
            skip();
            if (!peek(')'))
                error("expected ')'");
            ++i_;
            return v;
        }
        if (c == 'x') {
            ++i_;
            return CurveFunction::x();
        }
        if (c == 'y') {
            if (!C_)
                error("'y' is not allowed here");
            ++i_;
            return CurveFunction::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return CurveFunction::constant(Rational(Integer(std::string(s_.substr(start, i_ - start)))));
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const HyperellipticCurve* C_;
    std::size_t offset_;
    std::size_t i_ = 0;
};

} // namespace detail

/// Parses sums of terms c*x^i and c*x^i*y with exact rational c, reducing
/// powers of y on C.
inline FunctionExpr parse_function_expr(std::string_view text, const HyperellipticCurve& C)
{
    CurveFunction f = detail::ExprParser(text, &C).parse_all();
    return FunctionExpr{std::string(text), f.a, f.b};
}

/// A polynomial in x alone.
inline RatPolynomial parse_polynomial(std::string_view text)
{
    return detail::ExprParser(text, nullptr).parse_all().a;
}

/// Divisors such as "4*inf", "place(u=x-2,v=3) + place(u=x+2)", "2*place(u=x+1) - inf".
/// Without v the place is ramified when u | h and inert otherwise.
inline Divisor parse_divisor(std::string_view text, const HyperellipticCurve& C)
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto expect = [&](std::string_view tok) {
        skip();
        if (text.substr(i, tok.size()) != tok)
            throw ParseError(i, "expected '" + std::string(tok) + "'");
        i += tok.size();
    };
    // argument text up to the next top-level ',' or ')'
    auto argument = [&] {
        skip();
        const std::size_t start = i;
        int depth = 0;
        while (i < text.size() && !(depth == 0 && (text[i] == ',' || text[i] == ')'))) {
            depth += text[i] == '(' ? 1 : text[i] == ')' ? -1 : 0;
            ++i;
        }
        return std::pair<std::size_t, std::string_view>{start, text.substr(start, i - start)};
    };

    Divisor D;
    bool first = true;
    for (;;) {
        skip();
        if (i >= text.size()) {
            if (first)
                throw ParseError(i, "empty divisor");
            break;
        }
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError(i, "expected '+' or '-'");
        }
        first = false;
        long k = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i - start > 9)
                throw ParseError(start, "multiplicity too large");
            k = std::stol(std::string(text.substr(start, i - start)));
            expect("*");
            skip();
        }
        if (text.substr(i, 3) == "inf") {
            i += 3;
            D.add(Place::infinity(), sign * k);
            continue;
        }
        const std::size_t place_at = i;
        expect("place(");
        expect("u=");
        auto [u_at, u_text] = argument();
        RatPolynomial u = detail::ExprParser(u_text, nullptr, u_at).parse_all().a;
        std::optional<RatPolynomial> v;
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            expect("v=");
            auto [v_at, v_text] = argument();
            v = detail::ExprParser(v_text, nullptr, v_at).parse_all().a;
        }
        expect(")");
        if (u.degree() < 1)
            throw ParseError(u_at, "u must be nonconstant");
        std::vector<Place> over;
        try {
            over = places_over_x(C, u);
        } catch (const Error& e) {
            throw ParseError(u_at, e.what());
        }
        std::optional<Place> chosen;
        if (v) {
            RatPolynomial um = u.monic();
            RatPolynomial vr = *v % um;
            for (const auto& p : over)
                if (p.kind == PlaceKind::Split && p.v == vr)
                    chosen = p;
            if (!chosen)
                throw ParseError(place_at, "no split place over " + format(um) + " with v = " + format(vr));
        } else {
            if (over.size() != 1)
                throw ParseError(place_at, "u = " + format(u.monic()) + " splits; give v");
            chosen = over.front();
        }
        D.add(*chosen, sign * k);
    }
    return D;
}

} // namespace primpts::cli

#endif // PRIMPTS_CLI_PARSE_HPP
