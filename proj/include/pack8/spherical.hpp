#pragma once

#include <optional>
#include <vector>

#include "pack8/interval.hpp"
#include "pack8/trig.hpp"

namespace pack8 {

// Elimination signals are values: nullopt means the constrained set is empty
// for every parameter choice in the boxes (prune), while domain bugs throw.

// Enclosure of the angle opposite side a in a spherical triangle with sides
// (a, b, c): cos(a) = cos(b)cos(c) + sin(b)sin(c)cos(theta).
std::optional<Interval> law_of_cosines_angle(const Interval& a, const Interval& b,
                                             const Interval& c);

// Enclosure of the side opposite the angle theta between sides b and c.
std::optional<Interval> law_of_cosines_side(const Interval& b, const Interval& c,
                                            const Interval& theta);

// Interior angle of a regular spherical n-gon with side psi; monotone
// increasing in psi. nullopt when no such polygon exists for any psi in the
// box.
std::optional<Interval> alpha_n(int n, const Interval& psi);

// Adjacent interior angle of a spherical rhombus with side psi:
// tan(theta/2) tan(theta'/2) = sec(psi).
Interval rhombus_adjacent(const Interval& theta, const Interval& psi);

// Tighten the interior angles of an equilateral spherical polygon of
// `face_len` sides of length psi by fan triangulation from every starting
// vertex. Output is contained in the input coordinate-wise; nullopt is the
// elimination signal.
std::optional<std::vector<Interval>> polygon_propagate(int face_len, const Interval& psi,
                                                       const std::vector<Interval>& angles);

// Tighten (alpha, gamma, beta) for a 4-edge path between antipodal points:
// cos(alpha) + cos(gamma) = -2 cot^2(psi), cos(beta) <= 1 - 2 cot^2(psi).
// Angles live in (0, pi].
struct PathAngles {
    Interval alpha, gamma, beta;
};
std::optional<PathAngles> path_angle_relation(const Interval& alpha, const Interval& beta,
                                              const Interval& gamma, const Interval& psi);

}  // namespace pack8
