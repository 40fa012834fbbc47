#ifndef PRIMPTS_HYPCURVE_DIVISOR_HPP
#define PRIMPTS_HYPCURVE_DIVISOR_HPP

#include <map>
#include <string>
#include <vector>

#include "primpts/hypcurve/place.hpp"

namespace primpts {

/// Finite formal sum of places with nonzero multiplicities.
class Divisor {
public:
    Divisor() = default;
    Divisor(const Place& p, long mult) { add(p, mult); }

    static Divisor infinity(long mult) { return Divisor(Place::infinity(), mult); }

    void add(const Place& p, long mult)
    {
        if (mult == 0)
            return;
        long& m = entries_[p];
        m += mult;
        if (m == 0)
            entries_.erase(p);
    }

    long multiplicity(const Place& p) const
    {
        auto it = entries_.find(p);
        return it == entries_.end() ? 0 : it->second;
    }
    long at_infinity() const { return multiplicity(Place::infinity()); }

    const std::map<Place, long>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    long degree() const
    {
        long d = 0;
        for (const auto& [p, m] : entries_)
            d += m * p.degree();
        return d;
    }
    bool is_effective() const
    {
        for (const auto& [p, m] : entries_)
            if (m < 0)
                return false;
        return true;
    }
    bool is_multiplicity_one() const
    {
        for (const auto& [p, m] : entries_)
            if (m != 1)
                return false;
        return true;
    }

    std::vector<Place> support() const
    {
        std::vector<Place> s;
        for (const auto& [p, m] : entries_)
            s.push_back(p);
        return s;
    }

    /// Parts with positive and negative multiplicity, both effective.
    Divisor positive_part() const
    {
        Divisor d;
        for (const auto& [p, m] : entries_)
            if (m > 0)
                d.add(p, m);
        return d;
    }
    Divisor negative_part() const
    {
        Divisor d;
        for (const auto& [p, m] : entries_)
            if (m < 0)
                d.add(p, -m);
        return d;
    }

    bool operator<=(const Divisor& o) const { return (o - *this).is_effective(); }

    Divisor& operator+=(const Divisor& o)
    {
        for (const auto& [p, m] : o.entries_)
            add(p, m);
        return *this;
    }
    Divisor& operator-=(const Divisor& o)
    {
        for (const auto& [p, m] : o.entries_)
            add(p, -m);
        return *this;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(long k, const Divisor& d)
    {
        Divisor r;
        for (const auto& [p, m] : d.entries_)
            r.add(p, k * m);
        return r;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
    friend bool operator<(const Divisor& a, const Divisor& b) { return a.entries_ < b.entries_; }

    std::string to_string() const
    {
        if (entries_.empty())
            return "0";
        std::string s;
        for (const auto& [p, m] : entries_) {
            if (!s.empty())
                s += m < 0 ? " - " : " + ";
            else if (m < 0)
                s += "-";
            long am = m < 0 ? -m : m;
            if (am != 1)
                s += std::to_string(am) + "*";
            s += p.to_string();
        }
        return s;
    }

private:
    std::map<Place, long> entries_;
};

/// x^*(u): every place above u with its ramification multiplicity.
inline Divisor x_fiber(const HyperellipticCurve& C, const RatPolynomial& u)
{
    Divisor d;
    for (const auto& p : places_over_x(C, u))
        d.add(p, p.kind == PlaceKind::Ramified ? 2 : 1);
    return d;
}

} // namespace primpts

#endif // PRIMPTS_HYPCURVE_DIVISOR_HPP
