#include <doctest.h>

#include <cmath>

#include "olad/errors.hpp"
#include "olad/latency.hpp"

using namespace olad;

namespace {
// delta 100 ms, scrubber adds 100 ms, T^c 10 Gbps, T^D 40 Gbps
const LatencyParams kDefaults{100.0, 100.0, 0.04, 2.0, 10.0, 40.0};
}

TEST_CASE("baseline latency") {
    CHECK(latency_baseline(5.0, kDefaults) == 100.0);
    CHECK(latency_baseline(47.0, kDefaults) == 470.0); // 100 * 47/10
    CHECK(latency_baseline(10.0, kDefaults) == 100.0); // knee, flat branch
}

TEST_CASE("scrubber latency starts at delta + epsilon") {
    CHECK(latency_scrubber(20.0, kDefaults) == 200.0);
    CHECK(latency_scrubber(107.0, kDefaults) == 535.0); // 200 * 107/40
    CHECK(latency_scrubber(40.0, kDefaults) == 200.0);  // knee
}

TEST_CASE("spiffy latency: detour cost and expansion knee") {
    LatencyParams p = kDefaults;
    p.apl = 0.04;
    CHECK(latency_spiffy(15.0, 10.0, p) == 104.0);
    p.apl = 0.24;
    CHECK(latency_spiffy(15.0, 10.0, p) == 124.0);
    // knee at 2 * 10 = 20 Gbps; 124 * 107/20
    CHECK(latency_spiffy(107.0, 10.0, p) ==
          doctest::Approx(663.4).epsilon(1e-12));
    CHECK(latency_spiffy(20.0, 10.0, p) == 124.0);
}

TEST_CASE("olad latency: trusted share pulls the average toward delta") {
    SUBCASE("f=0.4 against the scrubber") {
        const double l = latency_olad({7.0, 100.0, 0.4}, kDefaults,
                                      OladVariant::Direct, 10.0);
        CHECK(std::abs(l - 361.0) < 1.0);
    }
    SUBCASE("f=0.8 against the scrubber") {
        const double l = latency_olad({7.0, 100.0, 0.8}, kDefaults,
                                      OladVariant::Direct, 10.0);
        CHECK(std::abs(l - 187.0) < 1.0);
    }
    SUBCASE("f=1: everything trusted, baseline delay") {
        CHECK(latency_olad({7.0, 100.0, 1.0}, kDefaults, OladVariant::Direct,
                           10.0) == 100.0);
    }
    SUBCASE("indirect variant weighs in the spiffy path") {
        LatencyParams p = kDefaults;
        p.apl = 0.24;
        const double spiffy = latency_spiffy(107.0, 10.0, p);
        const double l =
            latency_olad({7.0, 100.0, 0.4}, p, OladVariant::Indirect, 10.0);
        CHECK(l == doctest::Approx((100.0 * 2.8 + spiffy * 4.2) / 7.0)
                       .epsilon(1e-9));
    }
    SUBCASE("undefined without legit traffic") {
        CHECK_THROWS_AS(latency_olad({0.0, 50.0, 0.5}, kDefaults,
                                     OladVariant::Direct, 10.0),
                        ValidationError);
    }
}

TEST_CASE("relative latency reduction against the plain scrubber") {
    const double scrubber = latency_scrubber(107.0, kDefaults);
    const double at_04 = latency_olad({7.0, 100.0, 0.4}, kDefaults,
                                      OladVariant::Direct, 10.0);
    const double at_08 = latency_olad({7.0, 100.0, 0.8}, kDefaults,
                                      OladVariant::Direct, 10.0);
    // 32.52% and 65.05%
    CHECK(std::abs(100.0 * (scrubber - at_04) / scrubber - 32.5) < 1.0);
    CHECK(std::abs(100.0 * (scrubber - at_08) / scrubber - 65.0) < 1.0);
}

TEST_CASE("every latency curve is exactly continuous at its knee") {
    // Also on off-default parameters where the ratio t/capacity is inexact.
    for (double cap : {10.0, 40.0, 0.3, 7.7, 123.456}) {
        LatencyParams p = kDefaults;
        p.victim_capacity_gbps = cap;
        p.scrubber_capacity_gbps = cap;
        const double just_above = std::nextafter(cap, 1e300);
        CHECK(latency_baseline(cap, p) == p.delta_ms);
        CHECK(latency_baseline(just_above, p) >= p.delta_ms);
        CHECK(latency_baseline(just_above, p) ==
              doctest::Approx(p.delta_ms).epsilon(1e-12));
        CHECK(latency_scrubber(cap, p) == p.delta_ms + p.epsilon_ms);
        CHECK(latency_scrubber(just_above, p) ==
              doctest::Approx(p.delta_ms + p.epsilon_ms).epsilon(1e-12));
        const double knee = p.scaling_factor * cap;
        const double above_knee = std::nextafter(knee, 1e300);
        CHECK(latency_spiffy(knee, cap, p) ==
              p.delta_ms + p.delta_ms * p.apl);
        CHECK(latency_spiffy(above_knee, cap, p) ==
              doctest::Approx(p.delta_ms + p.delta_ms * p.apl).epsilon(1e-12));
    }
}

TEST_CASE("latency is nondecreasing in total demand") {
    double prev_base = 0.0, prev_scrub = 0.0, prev_spiffy = 0.0;
    for (int t = 0; t <= 300; ++t) {
        const double total = t;
        const double base = latency_baseline(total, kDefaults);
        const double scrub = latency_scrubber(total, kDefaults);
        const double spiffy = latency_spiffy(total, 10.0, kDefaults);
        CHECK(base >= prev_base);
        CHECK(scrub >= prev_scrub);
        CHECK(spiffy >= prev_spiffy);
        prev_base = base;
        prev_scrub = scrub;
        prev_spiffy = spiffy;
    }
}

TEST_CASE("olad latency sits between delta and the defense latency") {
    for (int k = 1; k <= 9; ++k) {
        const double f = k / 10.0;
        const TrafficMix mix{7.0, 100.0, f};
        const double l =
            latency_olad(mix, kDefaults, OladVariant::Direct, 10.0);
        const double defense = latency_scrubber(107.0, kDefaults);
        CHECK(l >= kDefaults.delta_ms);
        CHECK(l <= defense);
        // strict once the defense path is congested and slower
        CHECK(l > kDefaults.delta_ms);
        CHECK(l < defense);
    }
}

TEST_CASE("olad latency is affine in f with slope delta - defense") {
    const double l1 = latency_olad({7.0, 100.0, 0.2}, kDefaults,
                                   OladVariant::Direct, 10.0);
    const double l2 = latency_olad({7.0, 100.0, 0.5}, kDefaults,
                                   OladVariant::Direct, 10.0);
    const double l3 = latency_olad({7.0, 100.0, 0.8}, kDefaults,
                                   OladVariant::Direct, 10.0);
    // equally spaced f values, equally spaced latencies
    CHECK(l2 - l1 == doctest::Approx(l3 - l2).epsilon(1e-9));
    const double defense = latency_scrubber(107.0, kDefaults);
    const double slope = (l2 - l1) / 0.3;
    CHECK(slope == doctest::Approx(kDefaults.delta_ms - defense).epsilon(1e-9));
    CHECK(slope <= 0.0);
}

TEST_CASE("parameter validation") {
    LatencyParams p = kDefaults;
    p.delta_ms = 0.0;
    CHECK_THROWS_AS(latency_baseline(1.0, p), ValidationError);
    p = kDefaults;
    p.apl = 1.5;
    CHECK_THROWS_AS(latency_spiffy(1.0, 10.0, p), ValidationError);
    p = kDefaults;
    p.scaling_factor = 0.5;
    CHECK_THROWS_AS(latency_spiffy(1.0, 10.0, p), ValidationError);
    CHECK_THROWS_AS(latency_baseline(-1.0, kDefaults), ValidationError);
    CHECK_THROWS_AS(latency_spiffy(1.0, 0.0, kDefaults), ValidationError);
}
