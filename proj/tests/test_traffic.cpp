#include <doctest.h>

#include <cmath>
#include <set>

#include "olad/errors.hpp"
#include "olad/traffic.hpp"

using namespace olad;

TEST_CASE("derived aggregates match the partition definitions") {
    SUBCASE("f=0 makes everything suspicious") {
        const TrafficAggregates q = derive_quantities({7.0, 0.0, 0.0});
        CHECK(q.trusted_gbps == 0.0);
        CHECK(q.susp_benign_gbps == 7.0);
        CHECK(q.suspicious_gbps == 7.0);
        CHECK(q.total_gbps == 7.0);
    }
    SUBCASE("strong attack, 40% trusted") {
        const TrafficAggregates q = derive_quantities({7.0, 100.0, 0.4});
        CHECK(q.trusted_gbps == doctest::Approx(2.8).epsilon(1e-12));
        CHECK(q.susp_benign_gbps == doctest::Approx(4.2).epsilon(1e-12));
        CHECK(q.suspicious_gbps == doctest::Approx(104.2).epsilon(1e-12));
        CHECK(q.total_gbps == 107.0);
    }
    SUBCASE("moderate attack, 80% trusted") {
        const TrafficAggregates q = derive_quantities({7.0, 40.0, 0.8});
        CHECK(q.trusted_gbps == doctest::Approx(5.6).epsilon(1e-12));
        CHECK(q.susp_benign_gbps == doctest::Approx(1.4).epsilon(1e-12));
        CHECK(q.suspicious_gbps == doctest::Approx(41.4).epsilon(1e-12));
        CHECK(q.total_gbps == 47.0);
    }
}

TEST_CASE("mix validation") {
    CHECK_THROWS_AS(derive_quantities({-1.0, 0.0, 0.5}), ValidationError);
    CHECK_THROWS_AS(derive_quantities({1.0, -2.0, 0.5}), ValidationError);
    CHECK_THROWS_AS(derive_quantities({1.0, 0.0, 1.5}), ValidationError);
    CHECK_THROWS_AS(derive_quantities({1.0, 0.0, -0.1}), ValidationError);
}

TEST_CASE("partition identity is exact on dyadic grids") {
    // f = k/16 and integer demands keep every product representable, so
    // the identity trusted + susp_benign + attack == total has no rounding
    // slack at all.
    for (int legit = 0; legit <= 20; legit += 5) {
        for (int attack = 0; attack <= 200; attack += 25) {
            for (int k = 0; k <= 16; ++k) {
                const TrafficMix mix{static_cast<double>(legit),
                                     static_cast<double>(attack), k / 16.0};
                const TrafficAggregates q = derive_quantities(mix);
                CHECK(q.trusted_gbps + q.susp_benign_gbps + mix.attack_gbps ==
                      q.total_gbps);
                CHECK(q.trusted_gbps + q.suspicious_gbps == q.total_gbps);
            }
        }
    }
}

TEST_CASE("partition identity within rounding on arbitrary mixes") {
    for (double f = 0.0; f <= 1.0; f += 0.01) {
        const TrafficAggregates q = derive_quantities({7.3, 41.7, f});
        CHECK(q.trusted_gbps + q.susp_benign_gbps + 41.7 ==
              doctest::Approx(q.total_gbps).epsilon(1e-12));
    }
}

TEST_CASE("trusted share grows and suspicious share shrinks with f") {
    double prev_trusted = -1.0;
    double prev_susp = 1e300;
    for (int k = 0; k <= 100; ++k) {
        const TrafficAggregates q = derive_quantities({7.0, 40.0, k / 100.0});
        CHECK(q.trusted_gbps >= prev_trusted);
        CHECK(q.suspicious_gbps <= prev_susp);
        prev_trusted = q.trusted_gbps;
        prev_susp = q.suspicious_gbps;
    }
}

TEST_CASE("expand_flows splits demand evenly") {
    SUBCASE("link-flood sizing: 10k bots at 10 Mbps") {
        const FlowSet set = expand_flows({10.0, 100.0, 0.0}, 100, 10000, false);
        REQUIRE(set.flows.size() == 10100);
        for (int i = 0; i < 100; ++i) {
            CHECK(set.flows[i].cls == FlowClass::Legit);
            CHECK(set.flows[i].rate_mbps == doctest::Approx(100.0));
            CHECK(set.flows[i].rate_adaptive);
            CHECK_FALSE(set.flows[i].detected);
        }
        for (int i = 100; i < 10100; ++i) {
            CHECK(set.flows[i].cls == FlowClass::Bot);
            CHECK(set.flows[i].rate_mbps == doctest::Approx(10.0));
            CHECK_FALSE(set.flows[i].rate_adaptive);
            CHECK_FALSE(set.flows[i].detected);
        }
    }
    SUBCASE("empty mix, empty set") {
        CHECK(expand_flows({0.0, 0.0, 0.0}, 0, 0, false).flows.empty());
    }
    SUBCASE("seven legit senders at 1 Gbps each") {
        const FlowSet set = expand_flows({7.0, 0.0, 0.0}, 7, 0, false);
        REQUIRE(set.flows.size() == 7);
        for (const Flow& f : set.flows)
            CHECK(f.rate_mbps == doctest::Approx(1000.0));
    }
    SUBCASE("zero counts with nonzero demand are unrepresentable") {
        CHECK_THROWS_AS(expand_flows({7.0, 0.0, 0.0}, 0, 5, false),
                        ValidationError);
        CHECK_THROWS_AS(expand_flows({0.0, 5.0, 0.0}, 3, 0, false),
                        ValidationError);
        CHECK_THROWS_AS(expand_flows({1.0, 1.0, 0.0}, -1, 2, false),
                        ValidationError);
    }
    SUBCASE("adaptive flag lands on bots only") {
        const FlowSet set = expand_flows({1.0, 1.0, 0.0}, 2, 3, true);
        CHECK(set.flows[0].rate_adaptive); // legit senders always adapt
        CHECK(set.flows[2].rate_adaptive);
    }
}

TEST_CASE("expand_flows round-trips the aggregate demands") {
    const int legit_counts[] = {1, 3, 7, 100};
    const int bot_counts[] = {1, 9, 1000, 10000};
    const double demands[] = {0.5, 1.0, 7.0, 10.0, 100.0};
    for (int lc : legit_counts)
        for (int bc : bot_counts)
            for (double legit : demands)
                for (double attack : demands) {
                    const TrafficMix mix{legit, attack, 0.3};
                    const FlowSet set = expand_flows(mix, lc, bc, false);
                    CHECK(std::abs(aggregate_rate_gbps(set, FlowClass::Legit) -
                                   legit) < 1e-9);
                    CHECK(std::abs(aggregate_rate_gbps(set, FlowClass::Bot) -
                                   attack) < 1e-9);
                    std::set<std::uint32_t> ids;
                    for (const Flow& f : set.flows) ids.insert(f.id);
                    CHECK(ids.size() == set.flows.size());
                }
}
