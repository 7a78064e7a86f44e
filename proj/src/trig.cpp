#include "pack8/trig.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pack8 {

namespace {

constexpr mpfr_prec_t kPrec = 160;

struct Mp {
    mpfr_t x;
    Mp() { mpfr_init2(x, kPrec); }
    explicit Mp(const Rat& q, mpfr_rnd_t rnd) {
        mpfr_init2(x, kPrec);
        mpfr_set_q(x, q.get_mpq_t(), rnd);
    }
    ~Mp() { mpfr_clear(x); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
};

Rat to_rat(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rat out;
    if (e >= 0) {
        out = Rat(mant * (mpz_class(1) << e));
    } else {
        out = Rat(mant, mpz_class(1) << (-e));
    }
    out.canonicalize();
    return out;
}

using Unary = int (*)(mpfr_t, const mpfr_t, mpfr_rnd_t);

// f(q) rounded down/up, with the argument conversion rounded in the direction
// that keeps the bound valid for a monotone piece: `arg_rnd` must move the
// argument toward smaller f.
Rat eval_down(Unary f, const Rat& q, mpfr_rnd_t arg_rnd) {
    Mp a(q, arg_rnd);
    Mp r;
    f(r.x, a.x, MPFR_RNDD);
    return to_rat(r.x);
}

Rat eval_up(Unary f, const Rat& q, mpfr_rnd_t arg_rnd) {
    Mp a(q, arg_rnd);
    Mp r;
    f(r.x, a.x, MPFR_RNDU);
    return to_rat(r.x);
}

std::string describe(const Interval& x) {
    std::ostringstream os;
    os << "[" << x.lo.get_str() << ", " << x.hi.get_str() << "] ~ [" << to_double(x.lo) << ", "
       << to_double(x.hi) << "]";
    return os.str();
}

[[noreturn]] void domain_violation(const char* fn, const Interval& x) {
    throw std::domain_error(std::string(fn) + " domain violation on " + describe(x));
}

}  // namespace

Interval pi_interval() {
    static const Interval cached = [] {
        Mp lo, hi;
        mpfr_const_pi(lo.x, MPFR_RNDD);
        mpfr_const_pi(hi.x, MPFR_RNDU);
        return Interval{to_rat(lo.x), to_rat(hi.x)};
    }();
    return cached;
}

Interval pi_times(long k) {
    Interval pi = pi_interval();
    return (k >= 0) ? Interval{pi.lo * k, pi.hi * k} : Interval{pi.hi * k, pi.lo * k};
}

Interval icos(const Interval& x) {
    if (x.lo < pi_times(-4).lo || x.hi > pi_times(4).hi) domain_violation("cos", x);
    std::vector<Rat> los, his;
    // Endpoint candidates: bracket the conversion both ways.
    for (const Rat& e : {x.lo, x.hi}) {
        los.push_back(std::min(eval_down(mpfr_cos, e, MPFR_RNDD), eval_down(mpfr_cos, e, MPFR_RNDU)));
        his.push_back(std::max(eval_up(mpfr_cos, e, MPFR_RNDD), eval_up(mpfr_cos, e, MPFR_RNDU)));
    }
    // Critical points k*pi possibly inside.
    for (long k = -4; k <= 4; ++k) {
        Interval kp = pi_times(k);
        if (x.lo <= kp.hi && x.hi >= kp.lo) {
            if (k % 2 == 0)
                his.push_back(Rat(1));
            else
                los.push_back(Rat(-1));
        }
    }
    Rat lo = *std::min_element(los.begin(), los.end());
    Rat hi = *std::max_element(his.begin(), his.end());
    return {std::max(lo, Rat(-1)), std::min(hi, Rat(1))};
}

Interval isin(const Interval& x) {
    if (x.lo < pi_times(-4).lo || x.hi > pi_times(4).hi) domain_violation("sin", x);
    std::vector<Rat> los, his;
    for (const Rat& e : {x.lo, x.hi}) {
        los.push_back(std::min(eval_down(mpfr_sin, e, MPFR_RNDD), eval_down(mpfr_sin, e, MPFR_RNDU)));
        his.push_back(std::max(eval_up(mpfr_sin, e, MPFR_RNDD), eval_up(mpfr_sin, e, MPFR_RNDU)));
    }
    // Critical points pi/2 + k*pi.
    for (long k = -4; k <= 4; ++k) {
        Interval half = pi_interval();
        Interval kp{half.lo / 2 + pi_times(k).lo, half.hi / 2 + pi_times(k).hi};
        if (x.lo <= kp.hi && x.hi >= kp.lo) {
            if (((k % 2) + 2) % 2 == 0)
                his.push_back(Rat(1));
            else
                los.push_back(Rat(-1));
        }
    }
    Rat lo = *std::min_element(los.begin(), los.end());
    Rat hi = *std::max_element(his.begin(), his.end());
    return {std::max(lo, Rat(-1)), std::min(hi, Rat(1))};
}

Interval itan(const Interval& x) {
    Interval half_pi{pi_interval().lo / 2, pi_interval().hi / 2};
    if (!(x.lo > -half_pi.lo && x.hi < half_pi.lo)) domain_violation("tan", x);
    // Increasing on the branch.
    return {eval_down(mpfr_tan, x.lo, MPFR_RNDD), eval_up(mpfr_tan, x.hi, MPFR_RNDU)};
}

Interval isec(const Interval& x) {
    Interval c = icos(x);
    if (c.lo <= 0) domain_violation("sec", x);
    return Interval{Rat(1)} / c;
}

Interval icot(const Interval& x) {
    if (!(x.lo > 0 && x.hi < pi_interval().lo)) domain_violation("cot", x);
    // Decreasing on (0, pi).
    return {eval_down(mpfr_cot, x.hi, MPFR_RNDU), eval_up(mpfr_cot, x.lo, MPFR_RNDD)};
}

Interval icot2(const Interval& x) { return icot(x).square(); }

Interval iacos(const Interval& x) {
    if (x.lo < -1 || x.hi > 1) domain_violation("arccos", x);
    // Decreasing; clamp converted arguments into [-1, 1].
    auto eval = [](const Rat& q, mpfr_rnd_t arg_rnd, mpfr_rnd_t res_rnd) {
        Mp a(q, arg_rnd);
        if (mpfr_cmp_si(a.x, 1) > 0) mpfr_set_si(a.x, 1, MPFR_RNDN);
        if (mpfr_cmp_si(a.x, -1) < 0) mpfr_set_si(a.x, -1, MPFR_RNDN);
        Mp r;
        mpfr_acos(r.x, a.x, res_rnd);
        return to_rat(r.x);
    };
    return {eval(x.hi, MPFR_RNDU, MPFR_RNDD), eval(x.lo, MPFR_RNDD, MPFR_RNDU)};
}

Interval iatan(const Interval& x) {
    return {eval_down(mpfr_atan, x.lo, MPFR_RNDD), eval_up(mpfr_atan, x.hi, MPFR_RNDU)};
}

Interval isqrt(const Interval& x) {
    if (x.lo < 0) domain_violation("sqrt", x);
    auto eval = [](const Rat& q, mpfr_rnd_t arg_rnd, mpfr_rnd_t res_rnd) {
        Mp a(q, arg_rnd);
        if (mpfr_sgn(a.x) < 0) mpfr_set_zero(a.x, 1);
        Mp r;
        mpfr_sqrt(r.x, a.x, res_rnd);
        return to_rat(r.x);
    };
    return {eval(x.lo, MPFR_RNDD, MPFR_RNDD), eval(x.hi, MPFR_RNDU, MPFR_RNDU)};
}

Interval itrig(TrigFn f, const Interval& x) {
    switch (f) {
        case TrigFn::kSin: return isin(x);
        case TrigFn::kCos: return icos(x);
        case TrigFn::kTan: return itan(x);
        case TrigFn::kSec: return isec(x);
        case TrigFn::kCot2: return icot2(x);
        case TrigFn::kArccos: return iacos(x);
        case TrigFn::kArctan: return iatan(x);
    }
    throw std::logic_error("unreachable");
}

std::optional<Interval> cos_preimage_within(const Interval& domain, const Interval& cosbox) {
    auto cb = intersect(cosbox, Interval{Rat(-1), Rat(1)});
    if (!cb) return std::nullopt;
    // On [0, pi]: preimage is [acos(hi), acos(lo)]; on [pi, 2pi] it mirrors to
    // [2pi - acos(lo), 2pi - acos(hi)]. Take the hull of the per-branch
    // intersections with the domain.
    Interval base = iacos(*cb);
    Interval two_pi = pi_times(2);
    Interval mirrored{two_pi.lo - base.hi, two_pi.hi - base.lo};
    std::optional<Interval> out;
    for (const Interval& branch : {base, mirrored}) {
        if (auto part = intersect(branch, domain)) {
            out = out ? Interval::hull(*out, *part) : *part;
        }
    }
    return out;
}

}  // namespace pack8
