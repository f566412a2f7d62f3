#pragma once

#include <random>
#include <string>
#include <vector>

#include "airan/sim/scenario.hpp"

namespace airan::sim {

// One pre-materialized generator event. Completion events are conditional:
// the harness honors them only if the matching admission succeeded.
struct GenEvent {
    enum class Kind { RanDemand, RtArrive, RtComplete, BatchSubmit };

    SimTime time = 0.0;
    Kind kind = Kind::RanDemand;
    std::string site;
    std::string tenant;
    ResourceVector ran_demand;        // RanDemand
    WorkloadDescriptor descriptor;    // RtArrive / BatchSubmit
    std::string workload_id;          // RtComplete
    SimTime est_duration = 0.0;
};

inline std::mt19937_64 generator_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(index) + 1};
    return std::mt19937_64(seq);
}

namespace detail {

inline std::vector<GenEvent> du_events(const DuTraceParams& p, SimTime duration,
                                       std::size_t index) {
    std::vector<GenEvent> events;
    for (SimTime t = 0.0; t <= duration; t += p.sample_period) {
        GenEvent e;
        e.time = t;
        e.kind = GenEvent::Kind::RanDemand;
        e.site = p.site;
        e.ran_demand.accel_milli = p.demand_accel_at(t);
        events.push_back(std::move(e));
    }
    (void)index;
    return events;
}

inline std::vector<GenEvent> chatbot_events(const ChatbotParams& p,
                                            std::uint64_t seed, SimTime duration,
                                            std::size_t index) {
    std::vector<GenEvent> events;
    auto rng = generator_rng(seed, index);
    std::exponential_distribution<double> interarrival(p.arrival_rate);
    std::exponential_distribution<double> service(1.0 / p.service_mean);

    SimTime t = 0.0;
    for (std::uint64_t n = 1;; ++n) {
        t += p.deterministic_arrivals ? 1.0 / p.arrival_rate : interarrival(rng);
        if (t > duration) break;
        const SimTime hold =
            p.deterministic_service ? p.service_mean : service(rng);

        GenEvent arrive;
        arrive.time = t;
        arrive.kind = GenEvent::Kind::RtArrive;
        arrive.site = p.site;
        arrive.tenant = p.tenant;
        arrive.est_duration = hold;
        WorkloadDescriptor& w = arrive.descriptor;
        w.id = "chat-" + std::to_string(index) + "-" + std::to_string(n);
        w.tenant = p.tenant;
        w.cls = WorkloadClass::AI_REALTIME;
        w.elasticity = Elastic{p.min_grant, p.preferred_grant, p.max_grant};
        w.priority = p.priority;
        w.target = SiteTarget{p.site};
        w.est_duration = hold;

        GenEvent done;
        done.time = t + hold;
        done.kind = GenEvent::Kind::RtComplete;
        done.site = p.site;
        done.workload_id = w.id;
        events.push_back(std::move(arrive));
        events.push_back(std::move(done));
    }
    return events;
}

inline std::vector<GenEvent> batch_events(const BatchMixParams& p,
                                          std::uint64_t seed, SimTime duration,
                                          std::size_t index) {
    std::vector<GenEvent> events;
    auto rng = generator_rng(seed, index);
    std::exponential_distribution<double> interarrival(p.arrival_rate);
    std::uniform_int_distribution<std::int64_t> accel(p.min_accel, p.max_accel);
    std::uniform_real_distribution<double> dur(p.min_duration, p.max_duration);
    std::uniform_int_distribution<int> prio(0, p.max_priority);

    SimTime t = 0.0;
    for (std::uint64_t n = 1;; ++n) {
        t += interarrival(rng);
        if (t > duration) break;
        GenEvent e;
        e.time = t;
        e.kind = GenEvent::Kind::BatchSubmit;
        e.tenant = p.tenant;
        e.est_duration = dur(rng);
        WorkloadDescriptor& w = e.descriptor;
        w.id = "batch-" + std::to_string(index) + "-" + std::to_string(n);
        w.tenant = p.tenant;
        w.cls = WorkloadClass::AI_BATCH;
        w.elasticity = NonElastic{ResourceVector{accel(rng)}};
        w.priority = prio(rng);
        w.est_duration = e.est_duration;
        events.push_back(std::move(e));
    }
    return events;
}

}  // namespace detail

// Pre-materializes the event stream of one generator. The stream is a pure
// function of (seed, generator index, duration).
inline std::vector<GenEvent> generate_events(const GeneratorSpec& spec,
                                             std::uint64_t seed,
                                             SimTime duration,
                                             std::size_t index) {
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DuTraceParams>)
                return detail::du_events(p, duration, index);
            else if constexpr (std::is_same_v<T, ChatbotParams>)
                return detail::chatbot_events(p, seed, duration, index);
            else
                return detail::batch_events(p, seed, duration, index);
        },
        spec);
}

}  // namespace airan::sim
