#include "pack8/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace pack8 {

Interval::Interval(const Rat& l, const Rat& h) : lo(l), hi(h) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval Interval::operator*(const Interval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

Interval Interval::operator/(const Interval& o) const {
    if (o.lo <= 0 && o.hi >= 0) throw std::domain_error("interval division by zero-containing interval");
    Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

Interval Interval::square() const {
    if (lo >= 0) return {lo * lo, hi * hi};
    if (hi <= 0) return {hi * hi, lo * lo};
    return {Rat(0), std::max(lo * lo, hi * hi)};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval{lo, hi};
}

Rat rat_from_decimal(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(t.substr(epos + 1));
        t = t.substr(0, epos);
    }
    auto dot = t.find('.');
    std::string digits = t;
    if (dot != std::string::npos) {
        digits = t.substr(0, dot) + t.substr(dot + 1);
        exp10 -= static_cast<long>(t.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal: " + s);
    Rat x(mpz_class(digits, 10));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
        x *= p10;
    else
        x /= p10;
    x.canonicalize();
    return neg ? Rat(-x) : x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat x(s);
    x.canonicalize();
    return x;
}

Rat dyadic_floor(const Rat& x, int bits) {
    mpz_class scaled = (x.get_num() << bits) / x.get_den();
    // Division truncates toward zero; fix up negatives.
    if (x < 0 && Rat(scaled, mpz_class(1) << bits) != x) scaled -= 1;
    Rat out(scaled, mpz_class(1) << bits);
    out.canonicalize();
    return out;
}

Rat dyadic_ceil(const Rat& x, int bits) { return -dyadic_floor(-x, bits); }

Interval outward_dyadic(const Interval& x, int bits) {
    return {dyadic_floor(x.lo, bits), dyadic_ceil(x.hi, bits)};
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace pack8
