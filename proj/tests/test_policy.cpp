#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "airan/sched/policy.hpp"
#include "helpers.hpp"

using namespace airan;
using testutil::one_node_site;
using testutil::rv;

TEST_CASE("policy splits capacity into RAN reserve and AI quota") {
    SiteSnapshot snap = one_node_site("s1", 2000, 1000);
    Intent intent;
    intent.ran_headroom_fraction = 0.1;
    const auto result = sched::compute_policy(snap, intent, 4, 10.0);
    CHECK_FALSE(result.alarm);
    CHECK(result.policy.ran_reserve == rv(1200));
    CHECK(result.policy.ai_quota == rv(800));
    CHECK(result.policy.version == 5);
    CHECK(result.policy.site_id == "s1");
}

TEST_CASE("zero demand and zero headroom give AI the full capacity") {
    SiteSnapshot snap = one_node_site("s1", 2000, 0);
    const auto result = sched::compute_policy(snap, Intent{}, 0, 0.0);
    CHECK(result.policy.ai_quota == rv(2000));
    CHECK(result.policy.ran_reserve == ResourceVector{});
}

TEST_CASE("RAN demand above capacity flags an alarm and zeroes the quota") {
    SiteSnapshot snap = one_node_site("s1", 2000, 0);
    snap.ran_demand = rv(2200);
    const auto result = sched::compute_policy(snap, Intent{}, 7, 1.0);
    CHECK(result.alarm);
    CHECK(result.policy.ai_quota == ResourceVector{});
    CHECK(result.policy.version == 8);
}

TEST_CASE("reserve plus quota always fits total capacity") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        SiteSnapshot snap = one_node_site("s1", 1 + static_cast<std::int64_t>(rng() % 4000));
        snap.ran_demand = testutil::random_rv(rng, 0, 3000);
        Intent intent;
        intent.ran_headroom_fraction =
            static_cast<double>(rng() % 101) / 100.0;
        const auto result = sched::compute_policy(snap, intent, 0, 0.0);
        const auto total = snap.total_capacity();
        CHECK(rv_add(result.policy.ran_reserve, result.policy.ai_quota)
                  .fits_in(total));
    }
}

TEST_CASE("raising the headroom fraction never raises the AI quota") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 500; ++i) {
        SiteSnapshot snap = one_node_site("s1", 1 + static_cast<std::int64_t>(rng() % 4000));
        snap.ran_demand = testutil::random_rv(rng, 0, 2000);
        Intent lo, hi;
        lo.ran_headroom_fraction = static_cast<double>(rng() % 50) / 100.0;
        hi.ran_headroom_fraction =
            lo.ran_headroom_fraction + static_cast<double>(rng() % 50) / 100.0;
        const auto a = sched::compute_policy(snap, lo, 0, 0.0);
        const auto b = sched::compute_policy(snap, hi, 0, 0.0);
        CHECK(b.policy.ai_quota.fits_in(a.policy.ai_quota));
    }
}
