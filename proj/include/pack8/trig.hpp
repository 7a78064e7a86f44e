#pragma once

#include "pack8/interval.hpp"

namespace pack8 {

// Sound enclosures of transcendental functions over rational intervals,
// evaluated in MPFR with directed rounding (monotone pieces at the
// correctly-directed endpoints, critical points added as candidates whenever
// the argument interval may contain one).

Interval pi_interval();       // tight enclosure of pi
Interval pi_times(long k);    // enclosure of k*pi

enum class TrigFn { kSin, kCos, kTan, kSec, kCot2, kArccos, kArctan };

// Dispatcher with domain checks; throws std::domain_error with the offending
// interval printed when the argument leaves the function's domain.
Interval itrig(TrigFn f, const Interval& x);

Interval icos(const Interval& x);   // x within [-4pi, 4pi]
Interval isin(const Interval& x);   // x within [-4pi, 4pi]
Interval itan(const Interval& x);   // x within (-pi/2, pi/2)
Interval isec(const Interval& x);   // x within (-pi/2, pi/2)
Interval icot(const Interval& x);   // x within (0, pi)
Interval icot2(const Interval& x);  // x within (0, pi)
Interval iacos(const Interval& x);  // x within [-1, 1]
Interval iatan(const Interval& x);
Interval isqrt(const Interval& x);  // x >= 0

// Hull of { t in domain : cos(t) in cosbox }, for domain within [0, 2pi].
// Empty when no solution exists.
std::optional<Interval> cos_preimage_within(const Interval& domain, const Interval& cosbox);

}  // namespace pack8
