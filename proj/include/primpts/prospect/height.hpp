#ifndef PRIMPTS_PROSPECT_HEIGHT_HPP
#define PRIMPTS_PROSPECT_HEIGHT_HPP

#include <numeric>
#include <vector>

#include "primpts/exactalg/rational.hpp"

namespace primpts {

/// Nonzero rationals by height max(|p|, q): within a height the positive
/// values H/q (q ascending) then p/H (p ascending), followed by their negatives.
class HeightIterator {
public:
    Rational next()
    {
        while (pos_ >= batch_.size())
            fill();
        return batch_[pos_++];
    }

    static std::vector<Rational> first(std::size_t n)
    {
        HeightIterator it;
        std::vector<Rational> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(it.next());
        return out;
    }

private:
    void fill()
    {
        ++height_;
        batch_.clear();
        pos_ = 0;
        const long H = height_;
        std::vector<Rational> pos;
        pos.push_back(make_rational(H, 1));
        for (long q = 2; q < H; ++q)
            if (std::gcd(H, q) == 1)
                pos.push_back(make_rational(H, q));
        for (long p = 1; p < H; ++p)
            if (std::gcd(p, H) == 1)
                pos.push_back(make_rational(p, H));
        batch_ = pos;
        for (const auto& r : pos)
            batch_.push_back(-r);
    }

    long height_ = 0;
    std::vector<Rational> batch_;
    std::size_t pos_ = 0;
};

} // namespace primpts

#endif // PRIMPTS_PROSPECT_HEIGHT_HPP
