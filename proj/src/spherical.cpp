#include "pack8/spherical.hpp"

#include <stdexcept>

namespace pack8 {

namespace {

// Intersect x with enclosure e; nullopt propagates emptiness.
bool shrink(std::optional<Interval>& x, const std::optional<Interval>& e) {
    if (!x) return false;
    if (!e) {
        x = std::nullopt;
        return false;
    }
    x = intersect(*x, *e);
    return x.has_value();
}

}  // namespace

std::optional<Interval> law_of_cosines_angle(const Interval& a, const Interval& b,
                                             const Interval& c) {
    Interval num = icos(a) - icos(b) * icos(c);
    Interval den = isin(b) * isin(c);
    if (den.lo <= 0) throw std::domain_error("law_of_cosines_angle: side not in (0, pi)");
    auto cos_theta = intersect(num / den, Interval{Rat(-1), Rat(1)});
    if (!cos_theta) return std::nullopt;
    return iacos(*cos_theta);
}

std::optional<Interval> law_of_cosines_side(const Interval& b, const Interval& c,
                                            const Interval& theta) {
    Interval cos_d = icos(b) * icos(c) + isin(b) * isin(c) * icos(theta);
    auto clipped = intersect(cos_d, Interval{Rat(-1), Rat(1)});
    if (!clipped) return std::nullopt;
    return iacos(*clipped);
}

namespace {

// cos^2(alpha_n/2) = (cos psi - cos(2pi/n)) / (1 + cos psi), at one point.
std::optional<Interval> alpha_n_point(int n, const Rat& psi) {
    Interval k;  // cos(2pi/n), exact where rational
    switch (n) {
        case 3: k = Interval{Rat(-1, 2)}; break;
        case 4: k = Interval{Rat(0)}; break;
        case 6: k = Interval{Rat(1, 2)}; break;
        default: k = icos(pi_times(2) / Interval{Rat(n)});
    }
    Interval c = icos(Interval{psi});
    Interval num = c - k;
    if (num.hi < 0) return std::nullopt;  // side too long for this n-gon
    if (num.lo < 0) num.lo = 0;
    Interval arg = num / (Interval{Rat(1)} + c);
    if (arg.hi > 1) arg.hi = 1;
    Interval half = iacos(isqrt(arg));
    return Interval{half.lo * 2, half.hi * 2};
}

}  // namespace

std::optional<Interval> alpha_n(int n, const Interval& psi) {
    if (n < 3) throw std::invalid_argument("alpha_n: n >= 3 required");
    Interval half_pi{pi_interval().lo / 2, pi_interval().hi / 2};
    if (!(psi.lo > 0 && psi.hi <= half_pi.hi))
        throw std::domain_error("alpha_n: psi must lie in (0, pi/2]");
    // Monotone increasing in psi, so endpoint evaluation is tight and avoids
    // the dependency loss of evaluating the formula over the whole box.
    auto lo = alpha_n_point(n, psi.lo);
    if (!lo) return std::nullopt;  // infeasible even at the shortest side
    auto hi = alpha_n_point(n, psi.hi);
    // Infeasible only at the long end: the angle approaches pi there.
    Rat top = hi ? hi->hi : pi_interval().hi;
    return Interval{lo->lo, top};
}

Interval rhombus_adjacent(const Interval& theta, const Interval& psi) {
    // theta' = 2 atan(sec(psi) cot(theta/2)); cot instead of 1/tan so that
    // theta = pi (the generic corner upper bound) stays inside the domain.
    Interval half{theta.lo / 2, theta.hi / 2};
    Interval t = icot(half);
    if (t.lo < 0) t.lo = 0;  // theta <= pi
    Interval a = iatan(isec(psi) * t);
    return {a.lo * 2, a.hi * 2};
}

std::optional<std::vector<Interval>> polygon_propagate(int face_len, const Interval& psi,
                                                       const std::vector<Interval>& angles) {
    if (face_len < 3 || face_len > 6) throw std::invalid_argument("polygon_propagate: 3..6 sides");
    if (static_cast<int>(angles.size()) != face_len)
        throw std::invalid_argument("polygon_propagate: angle count mismatch");

    std::vector<std::optional<Interval>> th(angles.begin(), angles.end());

    if (face_len == 3) {
        auto a3 = alpha_n(3, psi);
        if (!a3) return std::nullopt;
        for (auto& t : th)
            if (!shrink(t, a3)) return std::nullopt;
    } else if (face_len == 4) {
        for (int round = 0; round < 2; ++round) {
            // Opposite interior angles of a spherical rhombus are equal.
            for (int i = 0; i < 2; ++i) {
                auto both = intersect(*th[i], *th[i + 2]);
                if (!both) return std::nullopt;
                th[i] = both;
                th[i + 2] = both;
            }
            // Adjacent angles via the rhombus identity.
            for (int i = 0; i < 4; ++i) {
                if (!shrink(th[(i + 1) % 4], rhombus_adjacent(*th[i], psi))) return std::nullopt;
            }
        }
    } else {
        int n = face_len;
        Interval pi = pi_interval();
        // Fan from each starting vertex. Triangle k spans (v0, vk, vk+1) with
        // diagonals D[k] = dist(v0, vk); all vertices are packing points and
        // pairwise non-antipodal, so psi.lo <= D <= pi - psi.lo.
        for (int start = 0; start < n; ++start) {
            auto theta_at = [&](int i) -> std::optional<Interval>& { return th[(start + i) % n]; };
            std::vector<std::optional<Interval>> D(n);
            D[1] = Interval{psi.lo, psi.hi};
            D[n - 1] = Interval{psi.lo, psi.hi};
            for (int k = 2; k < n - 1; ++k) D[k] = Interval{psi.lo, pi.hi - psi.lo};
            std::vector<std::optional<Interval>> A(n - 1), B(n - 1), C(n - 1);
            Interval full{Rat(0), pi.hi};
            for (int k = 1; k <= n - 2; ++k) {
                A[k] = full;
                B[k] = full;
                C[k] = full;
            }
            // Angle decomposition along the fan.
            for (int sweep = 0; sweep < 3; ++sweep) {
                if (!shrink(A[1], theta_at(1))) return std::nullopt;
                if (!shrink(theta_at(1), A[1])) return std::nullopt;
                if (!shrink(B[n - 2], theta_at(n - 1))) return std::nullopt;
                if (!shrink(theta_at(n - 1), B[n - 2])) return std::nullopt;
                for (int k = 2; k <= n - 2; ++k) {
                    // theta at v_k splits as B[k-1] + A[k].
                    if (!shrink(theta_at(k), *B[k - 1] + *A[k])) return std::nullopt;
                    if (!shrink(A[k], *theta_at(k) - *B[k - 1])) return std::nullopt;
                    if (!shrink(B[k - 1], *theta_at(k) - *A[k])) return std::nullopt;
                }
                // theta at v0 = sum of C_k.
                Interval csum = *C[1];
                for (int k = 2; k <= n - 2; ++k) csum = csum + *C[k];
                if (!shrink(theta_at(0), csum)) return std::nullopt;
                for (int j = 1; j <= n - 2; ++j) {
                    Interval rest{Rat(0), Rat(0)};
                    bool first = true;
                    for (int k = 1; k <= n - 2; ++k) {
                        if (k == j) continue;
                        rest = first ? *C[k] : rest + *C[k];
                        first = false;
                    }
                    if (!shrink(C[j], *theta_at(0) - rest)) return std::nullopt;
                }
                // Law-of-cosines contractions per fan triangle.
                for (int k = 1; k <= n - 2; ++k) {
                    if (!shrink(A[k], law_of_cosines_angle(*D[k + 1], *D[k], psi)))
                        return std::nullopt;
                    if (!shrink(B[k], law_of_cosines_angle(*D[k], *D[k + 1], psi)))
                        return std::nullopt;
                    if (!shrink(C[k], law_of_cosines_angle(psi, *D[k], *D[k + 1])))
                        return std::nullopt;
                    if (!shrink(D[k + 1], law_of_cosines_side(*D[k], psi, *A[k])))
                        return std::nullopt;
                    if (!shrink(D[k], law_of_cosines_side(*D[k + 1], psi, *B[k])))
                        return std::nullopt;
                }
            }
        }
    }

    std::vector<Interval> out;
    out.reserve(face_len);
    for (auto& t : th) out.push_back(*t);
    return out;
}

std::optional<PathAngles> path_angle_relation(const Interval& alpha, const Interval& beta,
                                              const Interval& gamma, const Interval& psi) {
    Interval k = -(icot2(psi) * Interval{Rat(2)});  // -2 cot^2(psi)
    std::optional<Interval> a = alpha, b = beta, g = gamma;
    Interval unit{Rat(-1), Rat(1)};
    for (int round = 0; round < 2; ++round) {
        // cos(alpha) = k - cos(gamma) and symmetrically.
        auto ca = intersect(k - icos(*g), unit);
        if (!ca) return std::nullopt;
        if (!shrink(a, iacos(*ca))) return std::nullopt;
        auto cg = intersect(k - icos(*a), unit);
        if (!cg) return std::nullopt;
        if (!shrink(g, iacos(*cg))) return std::nullopt;
    }
    // cos(beta) <= 1 + k.
    Interval ub = Interval{Rat(1)} + k;
    if (ub.hi < -1) return std::nullopt;
    if (ub.hi < 1) {
        Interval lower = iacos(Interval{ub.hi});
        if (!shrink(b, Interval{lower.lo, pi_interval().hi})) return std::nullopt;
    }
    return PathAngles{*a, *g, *b};
}

}  // namespace pack8
