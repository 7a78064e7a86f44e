#include <mpfr.h>

#include <random>

#include "doctest.h"
#include "pack8/interval.hpp"
#include "pack8/spherical.hpp"
#include "pack8/trig.hpp"

using namespace pack8;

namespace {

// High-precision point oracle, independent of the enclosure path: evaluates
// at 256 bits with both rounding directions.
Interval oracle_eval(TrigFn f, const Rat& x) {
    mpfr_t a, lo, hi;
    mpfr_init2(a, 256);
    mpfr_init2(lo, 256);
    mpfr_init2(hi, 256);
    auto run = [&](mpfr_t out, mpfr_rnd_t rnd) {
        mpfr_set_q(a, x.get_mpq_t(), rnd);
        switch (f) {
            case TrigFn::kSin: mpfr_sin(out, a, rnd); break;
            case TrigFn::kCos: mpfr_cos(out, a, rnd); break;
            case TrigFn::kTan: mpfr_tan(out, a, rnd); break;
            case TrigFn::kSec: mpfr_sec(out, a, rnd); break;
            case TrigFn::kCot2: mpfr_cot(out, a, rnd); break;
            case TrigFn::kArccos: mpfr_acos(out, a, rnd); break;
            case TrigFn::kArctan: mpfr_atan(out, a, rnd); break;
        }
    };
    run(lo, MPFR_RNDD);
    run(hi, MPFR_RNDU);
    mpz_class m;
    auto to_rat = [&](mpfr_t v) {
        if (mpfr_zero_p(v)) return Rat(0);
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v);
        Rat r = e >= 0 ? Rat(m * (mpz_class(1) << e)) : Rat(m, mpz_class(1) << (-e));
        r.canonicalize();
        return r;
    };
    Rat rlo = to_rat(lo), rhi = to_rat(hi);
    if (rlo > rhi) std::swap(rlo, rhi);
    Interval out{rlo, rhi};
    if (f == TrigFn::kCot2) out = out.square();  // squared after the directed cot
    mpfr_clear(a);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

Rat random_rat(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    double x = d(rng);
    // exact dyadic from the double
    return dyadic_floor(rat_from_decimal(std::to_string(x)), 60);
}

const Interval kPsi8{rat_from_decimal("0.86638"), rat_from_decimal("0.9273")};

}  // namespace

TEST_CASE("interval arithmetic basics") {
    Interval a{Rat(-1), Rat(2)}, b{Rat(3), Rat(4)};
    CHECK((a * b).lo == Rat(-4));
    CHECK((a * b).hi == Rat(8));
    CHECK(a.square().lo == Rat(0));
    CHECK(a.square().hi == Rat(4));
    CHECK(rat_from_decimal("0.86638") == Rat(43319, 50000));
    CHECK(rat_from_decimal("-1.5e-3") == Rat(-3, 2000));
    CHECK(dyadic_floor(Rat(1, 3), 4) == Rat(5, 16));
    CHECK(dyadic_ceil(Rat(1, 3), 4) == Rat(3, 8));
    CHECK(dyadic_floor(Rat(-1, 3), 4) == Rat(-3, 8));
}

TEST_CASE("cos of a point and of [0, pi]") {
    Interval zero{Rat(0)};
    Interval c = icos(zero);
    CHECK(c.lo == Rat(1));
    CHECK(c.hi == Rat(1));
    Interval span{Rat(0), pi_interval().hi};
    Interval d = icos(span);
    CHECK(d.lo == Rat(-1));
    CHECK(d.hi == Rat(1));
}

TEST_CASE("cot^2 over the psi8 window contains the midpoint oracle value") {
    Interval enc = icot2(kPsi8);
    Interval point = oracle_eval(TrigFn::kCot2, kPsi8.mid());
    CHECK(enc.lo <= point.lo);
    CHECK(enc.hi >= point.hi);
    // The window is (0, pi/2), so cot^2 is decreasing: sanity range.
    CHECK(enc.lo > Rat(2, 5));
    CHECK(enc.hi < Rat(4, 5));
}

TEST_CASE("interval soundness fuzzing for each trig op") {
    std::mt19937_64 rng(2024);
    struct Case {
        TrigFn f;
        double lo, hi;
    };
    const Case cases[] = {
        {TrigFn::kSin, 0.0, 6.28},   {TrigFn::kCos, 0.0, 6.28},  {TrigFn::kTan, -1.5, 1.5},
        {TrigFn::kSec, -1.5, 1.5},   {TrigFn::kCot2, 0.05, 3.0}, {TrigFn::kArccos, -1.0, 1.0},
        {TrigFn::kArctan, -10.0, 10.0}};
    for (const auto& c : cases) {
        for (int t = 0; t < 10000; ++t) {
            Rat a = random_rat(rng, c.lo, c.hi);
            Rat b = random_rat(rng, c.lo, c.hi);
            if (a > b) std::swap(a, b);
            Interval box{a, b};
            Interval enc;
            try {
                enc = itrig(c.f, box);
            } catch (const std::domain_error&) {
                continue;  // fuzz box left the domain (tan/sec near poles)
            }
            std::uniform_real_distribution<double> d(0.0, 1.0);
            Rat p = a + dyadic_floor(Rat(d(rng) * 1024), 0) * (b - a) / 1024;
            Interval truth = oracle_eval(c.f, p);
            CHECK(enc.lo <= truth.lo);
            CHECK(enc.hi >= truth.hi);
        }
    }
}

TEST_CASE("law of cosines: octant triangle") {
    Interval right{pi_interval().lo / 2, pi_interval().hi / 2};
    auto theta = law_of_cosines_angle(right, right, right);
    REQUIRE(theta.has_value());
    CHECK(theta->contains(right));
    CHECK(theta->width() < Rat(1, 1000000));
}

TEST_CASE("law of cosines on equilateral sides matches the alpha_3 closed form") {
    auto theta = law_of_cosines_angle(kPsi8, kPsi8, kPsi8);
    auto a3 = alpha_n(3, kPsi8);
    REQUIRE(theta.has_value());
    REQUIRE(a3.has_value());
    CHECK(intersect(*theta, *a3).has_value());
    // Point check at the midpoint.
    Interval point{kPsi8.mid()};
    auto tp = law_of_cosines_angle(point, point, point);
    auto ap = alpha_n(3, point);
    CHECK(intersect(*tp, *ap).has_value());
}

TEST_CASE("law of cosines: flat triangle encloses pi") {
    Interval half{Rat(1, 2)};
    Interval one{Rat(1)};
    auto theta = law_of_cosines_angle(one, half, half);
    REQUIRE(theta.has_value());
    CHECK(theta->hi >= pi_interval().lo);
    CHECK(theta->lo <= pi_interval().hi);
}

TEST_CASE("alpha_3 over the psi8 window matches the recomputed bounds") {
    auto a3 = alpha_n(3, kPsi8);
    REQUIRE(a3.has_value());
    // Recomputed from the bounds: alpha_3 in [1.16684730..., 1.18640116...].
    // The published 5-digit prints are rounded inward at the top end.
    CHECK(a3->lo > rat_from_decimal("1.1668473"));
    CHECK(a3->lo < rat_from_decimal("1.1668474"));
    CHECK(a3->hi > rat_from_decimal("1.1864011"));
    CHECK(a3->hi < rat_from_decimal("1.1864012"));
}

TEST_CASE("alpha_3 at pi/2 is pi/2") {
    Interval right{pi_interval().lo / 2, pi_interval().hi / 2};
    auto a = alpha_n(3, right);
    REQUIRE(a.has_value());
    CHECK(a->contains(right));
    CHECK(a->width() < Rat(1, 1000000));
}

TEST_CASE("alpha_4 at the cube edge length is 2pi/3") {
    Interval edge = iacos(Interval{Rat(1, 3)});
    auto a = alpha_n(4, edge);
    REQUIRE(a.has_value());
    Interval two_thirds{pi_times(2).lo / 3, pi_times(2).hi / 3};
    CHECK(a->contains(two_thirds));
    CHECK(a->width() < Rat(1, 1000000));
}

TEST_CASE("alpha_n monotone increasing in psi and infeasible when too long") {
    auto lo = alpha_n(5, Interval{rat_from_decimal("0.87")});
    auto hi = alpha_n(5, Interval{rat_from_decimal("0.92")});
    REQUIRE(lo.has_value());
    REQUIRE(hi.has_value());
    CHECK(lo->hi < hi->lo);
    CHECK(!alpha_n(6, Interval{rat_from_decimal("1.2")}).has_value());
}

TEST_CASE("rhombus identity: square case and planar limit") {
    // Square case: tan^2(theta/2) = sec(psi).
    Interval psi{rat_from_decimal("0.9")};
    Interval root = isqrt(isec(psi));
    Interval star = iatan(root);
    Interval theta{star.lo * 2, star.hi * 2};
    Interval again = rhombus_adjacent(theta, psi);
    CHECK(intersect(again, theta).has_value());
    CHECK(again.width() < Rat(1, 100000));
    // Planar limit: psi -> 0 gives theta' -> pi - theta.
    Interval tiny{rat_from_decimal("0.0001")};
    Interval t{Rat(1)};
    Interval adj = rhombus_adjacent(t, tiny);
    Interval expect = pi_interval() - t;
    CHECK(intersect(adj, Interval{expect.lo - Rat(1, 1000), expect.hi + Rat(1, 1000)}).has_value());
}

TEST_CASE("rhombus adjacent angle: pointwise oracle inside enclosure") {
    std::mt19937_64 rng(7);
    auto a3 = alpha_n(3, kPsi8);
    REQUIRE(a3.has_value());
    Interval enc = rhombus_adjacent(*a3, kPsi8);
    for (int t = 0; t < 200; ++t) {
        Rat theta = a3->lo + (a3->hi - a3->lo) * Rat(static_cast<int>(rng() % 1025), 1024);
        Rat psi = kPsi8.lo + (kPsi8.hi - kPsi8.lo) * Rat(static_cast<int>(rng() % 1025), 1024);
        // Oracle: theta' = 2*atan(sec(psi)/tan(theta/2)) at high precision.
        Interval s = oracle_eval(TrigFn::kSec, psi);
        Interval tn = oracle_eval(TrigFn::kTan, theta / 2);
        Interval at = iatan(s / tn);
        CHECK(enc.lo <= at.lo * 2);
        CHECK(enc.hi >= at.hi * 2);
    }
}

TEST_CASE("polygon propagation: triangle pins all angles to alpha_3") {
    std::vector<Interval> angles(3, Interval{Rat(1), Rat(3)});
    auto out = polygon_propagate(3, kPsi8, angles);
    REQUIRE(out.has_value());
    auto a3 = alpha_n(3, kPsi8);
    for (const auto& t : *out) {
        CHECK(t.lo >= a3->lo);
        CHECK(t.hi <= a3->hi);
    }
    // Disjoint corner box is an elimination signal.
    angles[0] = Interval{rat_from_decimal("1.3"), rat_from_decimal("3.1")};
    CHECK(!polygon_propagate(3, kPsi8, angles).has_value());
}

TEST_CASE("polygon propagation: quadrilateral intersects opposite angles") {
    std::vector<Interval> angles{Interval{Rat(1), Rat(2)}, Interval{Rat(1), Rat(3)},
                                 Interval{rat_from_decimal("1.5"), rat_from_decimal("2.5")},
                                 Interval{Rat(1), Rat(3)}};
    auto out = polygon_propagate(4, kPsi8, angles);
    REQUIRE(out.has_value());
    CHECK((*out)[0].lo >= rat_from_decimal("1.5"));
    CHECK((*out)[2].hi <= Rat(2));
    CHECK((*out)[0].lo == (*out)[2].lo);
    CHECK((*out)[0].hi == (*out)[2].hi);
}

TEST_CASE("polygon propagation: regular pentagon is a near-fixpoint") {
    Interval psi{kPsi8.mid()};
    auto a5 = alpha_n(5, psi);
    REQUIRE(a5.has_value());
    std::vector<Interval> angles(5, *a5);
    auto out = polygon_propagate(5, psi, angles);
    REQUIRE(out.has_value());
    // The true regular angle survives in every coordinate.
    for (const auto& t : *out) {
        CHECK(t.lo <= a5->hi);
        CHECK(t.hi >= a5->lo);
    }
}

TEST_CASE("polygon propagation: hexagon with an impossible corner eliminates") {
    // All six corners pinned near pi forces an angle sum a spherical hexagon
    // of this side length cannot attain.
    std::vector<Interval> angles(6, Interval{rat_from_decimal("3.10"), rat_from_decimal("3.14")});
    CHECK(!polygon_propagate(6, kPsi8, angles).has_value());
}

TEST_CASE("path angle relation: right-angle washout and tightening") {
    // psi slightly below pi/2: cot^2 ~ 0, so gamma ~ pi - alpha.
    Interval psi{rat_from_decimal("1.57"), rat_from_decimal("1.5707")};
    Interval alpha{rat_from_decimal("1.0"), rat_from_decimal("1.2")};
    Interval full{rat_from_decimal("0.001"), pi_interval().hi};
    auto out = path_angle_relation(alpha, full, full, psi);
    REQUIRE(out.has_value());
    Interval expect = pi_interval() - alpha;
    CHECK(out->gamma.lo <= expect.lo + Rat(1, 100));
    CHECK(out->gamma.hi >= expect.hi - Rat(1, 100));
    CHECK(out->gamma.width() < Rat(3, 10));
}

TEST_CASE("path angle relation: psi8 window bounds beta") {
    Interval full{rat_from_decimal("0.001"), pi_interval().hi};
    auto out = path_angle_relation(full, full, full, kPsi8);
    REQUIRE(out.has_value());
    // cos(beta) <= 1 - 2cot^2(psi) < 0 on the window, so beta > pi/2.
    CHECK(out->beta.lo > pi_interval().lo / 2);
    // Oracle spot check: at psi midpoint, beta >= acos(1 - 2cot^2(psi)).
    Interval k = oracle_eval(TrigFn::kCot2, kPsi8.mid());
    Interval bound = iacos(Interval{Rat(1) - 2 * k.hi, Rat(1) - 2 * k.lo});
    CHECK(out->beta.lo <= bound.hi);
}

TEST_CASE("path angle relation: pinned angles eliminate when infeasible") {
    Interval pi_point{pi_interval().lo, pi_interval().hi};
    Interval full{rat_from_decimal("0.001"), pi_interval().hi};
    // alpha = gamma = pi gives cos sum -2, but -2cot^2(psi8) is ~ -1.2.
    CHECK(!path_angle_relation(pi_point, full, pi_point, kPsi8).has_value());
}

TEST_CASE("monotone narrowing: propagation never widens") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<Interval> angles;
        for (int i = 0; i < n; ++i) {
            Rat a = Rat(1) + Rat(static_cast<int>(rng() % 100), 100);
            Rat b = a + Rat(static_cast<int>(rng() % 100), 200);
            angles.push_back(Interval{a, std::min(b, pi_interval().lo)});
        }
        auto out = polygon_propagate(n, kPsi8, angles);
        if (!out) continue;
        for (int i = 0; i < n; ++i) {
            CHECK((*out)[i].lo >= angles[i].lo);
            CHECK((*out)[i].hi <= angles[i].hi);
        }
    }
}
