#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pack8 {

using Rat = mpq_class;

// Closed interval with exact rational endpoints. Every operation returns an
// enclosure of the exact image of its argument intervals.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(const Rat& x) : lo(x), hi(x) {}
    Interval(const Rat& l, const Rat& h);

    static Interval hull(const Interval& a, const Interval& b);

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool is_point() const { return lo == hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    Interval operator-() const { return {-hi, -lo}; }
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // requires 0 not in o
    Interval square() const;

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Exact rational from a decimal literal like "0.86638" or "-1.5e-3".
Rat rat_from_decimal(const std::string& s);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// Directed rounding to the dyadic grid 2^-bits (floor/ceil).
Rat dyadic_floor(const Rat& x, int bits);
Rat dyadic_ceil(const Rat& x, int bits);
Interval outward_dyadic(const Interval& x, int bits);

double to_double(const Rat& x);

}  // namespace pack8
