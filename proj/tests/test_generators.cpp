#include <catch2/catch_amalgamated.hpp>

#include "airan/sim/generators.hpp"
#include "sim_fixtures.hpp"

using namespace airan;
using namespace airan::sim;
using testutil::rv;

namespace {

bool events_equal(const std::vector<GenEvent>& a, const std::vector<GenEvent>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].time != b[i].time || a[i].kind != b[i].kind ||
            a[i].site != b[i].site || a[i].ran_demand != b[i].ran_demand ||
            a[i].descriptor.id != b[i].descriptor.id ||
            a[i].workload_id != b[i].workload_id ||
            a[i].est_duration != b[i].est_duration)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("deterministic chatbot at 2 per second for 3 seconds yields 6 sessions") {
    ChatbotParams p;
    p.site = "s1";
    p.arrival_rate = 2.0;
    p.deterministic_arrivals = true;
    p.deterministic_service = true;
    p.service_mean = 1.0;
    p.min_grant = p.preferred_grant = p.max_grant = rv(100);
    const auto events = generate_events(p, 7, 3.0, 0);
    int arrivals = 0;
    for (const auto& e : events)
        if (e.kind == GenEvent::Kind::RtArrive) ++arrivals;
    CHECK(arrivals == 6);
    // Each arrival pairs with a completion exactly one service time later.
    REQUIRE(events.size() == 12);
    CHECK(events[0].time == 0.5);
    CHECK(events[1].kind == GenEvent::Kind::RtComplete);
    CHECK(events[1].time == 1.5);
}

TEST_CASE("constant DU trace at full load is base plus slope times 1.5 Gbps") {
    DuTraceParams p;
    p.site = "s1";
    p.base_accel_milli = 200;
    p.per_gbps_accel_milli = 800;
    p.peak_dl_mbps = 1500.0;
    p.trace = {{0.0, 1.0}};
    p.sample_period = 1.0;
    const auto events = generate_events(p, 7, 5.0, 0);
    REQUIRE(events.size() == 6);  // t = 0..5 inclusive
    for (const auto& e : events) {
        CHECK(e.kind == GenEvent::Kind::RanDemand);
        CHECK(e.ran_demand.accel_milli == 200 + 800 * 3 / 2);
    }
}

TEST_CASE("the built-in diurnal pattern starts at base and peaks mid-period") {
    DuTraceParams p;
    p.site = "s1";
    p.base_accel_milli = 200;
    p.per_gbps_accel_milli = 800;
    p.diurnal_period = 100.0;
    CHECK(p.demand_accel_at(0.0) == 200);
    CHECK(p.demand_accel_at(50.0) == 1400);
    CHECK(p.demand_accel_at(100.0) == 200);
}

TEST_CASE("equal seeds reproduce event streams; indices decorrelate them") {
    ChatbotParams chat;
    chat.site = "s1";
    chat.arrival_rate = 1.0;
    chat.min_grant = chat.preferred_grant = chat.max_grant = rv(100);
    BatchMixParams batch;

    for (std::size_t index : {std::size_t{0}, std::size_t{3}}) {
        CHECK(events_equal(generate_events(chat, 99, 50.0, index),
                           generate_events(chat, 99, 50.0, index)));
        CHECK(events_equal(generate_events(batch, 99, 50.0, index),
                           generate_events(batch, 99, 50.0, index)));
    }
    CHECK_FALSE(events_equal(generate_events(chat, 99, 50.0, 0),
                             generate_events(chat, 99, 50.0, 1)));
    CHECK_FALSE(events_equal(generate_events(chat, 99, 50.0, 0),
                             generate_events(chat, 100, 50.0, 0)));
}

TEST_CASE("batch mix draws sizes and priorities inside the configured bounds") {
    BatchMixParams p;
    p.arrival_rate = 1.0;
    p.min_accel = 100;
    p.max_accel = 800;
    p.max_priority = 3;
    const auto events = generate_events(p, 5, 100.0, 2);
    REQUIRE(!events.empty());
    for (const auto& e : events) {
        REQUIRE(e.kind == GenEvent::Kind::BatchSubmit);
        const auto demand = e.descriptor.min_demand();
        CHECK(demand.accel_milli >= 100);
        CHECK(demand.accel_milli <= 800);
        CHECK(e.descriptor.priority >= 0);
        CHECK(e.descriptor.priority <= 3);
        CHECK(e.descriptor.est_duration >= p.min_duration);
        CHECK(e.descriptor.est_duration <= p.max_duration);
    }
}
