#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "airan/core/json.hpp"
#include "airan/o2/link.hpp"
#include "airan/site/site.hpp"
#include "airan/smo/smo.hpp"

namespace airan::sim {

// ---- Generator parameter records ----

// GPU-based DU whose compute demand is affine in offered traffic:
// demand(t) = base + per_gbps * offered_gbps(t), capped at site capacity.
struct DuTraceParams {
    std::string site;
    int num_users = 15;
    double peak_dl_mbps = 1500.0;
    std::int64_t base_accel_milli = 200;
    std::int64_t per_gbps_accel_milli = 800;
    SimTime sample_period = 1.0;
    // Piecewise-constant offered-traffic fractions of peak; empty means the
    // built-in diurnal pattern.
    std::vector<std::pair<SimTime, double>> trace;
    SimTime diurnal_period = 100.0;

    double fraction_at(SimTime t) const {
        if (trace.empty()) {
            constexpr double kPi = 3.14159265358979323846;
            return 0.5 - 0.5 * std::cos(2.0 * kPi * t / diurnal_period);
        }
        double f = trace.front().second;
        for (const auto& [time, frac] : trace) {
            if (time > t) break;
            f = frac;
        }
        return f;
    }

    std::int64_t demand_accel_at(SimTime t) const {
        const double gbps = fraction_at(t) * peak_dl_mbps / 1000.0;
        return base_accel_milli +
               static_cast<std::int64_t>(
                   std::llround(gbps * static_cast<double>(per_gbps_accel_milli)));
    }
};

inline void to_json(Json& j, const DuTraceParams& p) {
    j = Json{{"site", p.site},
             {"num_users", p.num_users},
             {"peak_dl_mbps", p.peak_dl_mbps},
             {"base_accel_milli", p.base_accel_milli},
             {"per_gbps_accel_milli", p.per_gbps_accel_milli},
             {"sample_period", p.sample_period},
             {"trace", p.trace},
             {"diurnal_period", p.diurnal_period}};
}
inline void from_json(const Json& j, DuTraceParams& p) {
    p = {};
    j.at("site").get_to(p.site);
    p.num_users = j.value("num_users", 15);
    p.peak_dl_mbps = j.value("peak_dl_mbps", 1500.0);
    p.base_accel_milli = j.value("base_accel_milli", std::int64_t{200});
    p.per_gbps_accel_milli = j.value("per_gbps_accel_milli", std::int64_t{800});
    p.sample_period = j.value("sample_period", 1.0);
    if (j.contains("trace")) j.at("trace").get_to(p.trace);
    p.diurnal_period = j.value("diurnal_period", 100.0);
}

// LLM chatbot sessions submitted on the real-time path, modeled purely as a
// demand profile: seeded arrivals, an elastic per-session grant, and a
// deterministic or exponential session length.
struct ChatbotParams {
    std::string site;
    std::string tenant = "ai-dev";
    double arrival_rate = 0.5;  // sessions per sim-second
    bool deterministic_arrivals = false;
    ResourceVector min_grant;
    ResourceVector preferred_grant;
    ResourceVector max_grant;
    bool deterministic_service = false;
    double service_mean = 10.0;
    int priority = 1;
};

inline void to_json(Json& j, const ChatbotParams& p) {
    j = Json{{"site", p.site},
             {"tenant", p.tenant},
             {"arrival_rate", p.arrival_rate},
             {"deterministic_arrivals", p.deterministic_arrivals},
             {"min_grant", p.min_grant},
             {"preferred_grant", p.preferred_grant},
             {"max_grant", p.max_grant},
             {"deterministic_service", p.deterministic_service},
             {"service_mean", p.service_mean},
             {"priority", p.priority}};
}
inline void from_json(const Json& j, ChatbotParams& p) {
    p = {};
    j.at("site").get_to(p.site);
    p.tenant = j.value("tenant", std::string{"ai-dev"});
    p.arrival_rate = j.value("arrival_rate", 0.5);
    p.deterministic_arrivals = j.value("deterministic_arrivals", false);
    j.at("min_grant").get_to(p.min_grant);
    j.at("preferred_grant").get_to(p.preferred_grant);
    j.at("max_grant").get_to(p.max_grant);
    p.deterministic_service = j.value("deterministic_service", false);
    p.service_mean = j.value("service_mean", 10.0);
    p.priority = j.value("priority", 1);
}

// Background batch jobs with randomized sizes and durations.
struct BatchMixParams {
    std::string tenant = "ai-dev";
    double arrival_rate = 0.1;
    std::int64_t min_accel = 100;
    std::int64_t max_accel = 800;
    double min_duration = 5.0;
    double max_duration = 60.0;
    int max_priority = 3;
};

inline void to_json(Json& j, const BatchMixParams& p) {
    j = Json{{"tenant", p.tenant},
             {"arrival_rate", p.arrival_rate},
             {"min_accel", p.min_accel},
             {"max_accel", p.max_accel},
             {"min_duration", p.min_duration},
             {"max_duration", p.max_duration},
             {"max_priority", p.max_priority}};
}
inline void from_json(const Json& j, BatchMixParams& p) {
    p = {};
    p.tenant = j.value("tenant", std::string{"ai-dev"});
    p.arrival_rate = j.value("arrival_rate", 0.1);
    p.min_accel = j.value("min_accel", std::int64_t{100});
    p.max_accel = j.value("max_accel", std::int64_t{800});
    p.min_duration = j.value("min_duration", 5.0);
    p.max_duration = j.value("max_duration", 60.0);
    p.max_priority = j.value("max_priority", 3);
}

using GeneratorSpec = std::variant<DuTraceParams, ChatbotParams, BatchMixParams>;

inline void to_json(Json& j, const GeneratorSpec& g) {
    std::visit(
        [&](const auto& p) {
            j = p;
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DuTraceParams>)
                j["kind"] = "DU_TRACE";
            else if constexpr (std::is_same_v<T, ChatbotParams>)
                j["kind"] = "CHATBOT";
            else
                j["kind"] = "BATCH_MIX";
        },
        g);
}
inline void from_json(const Json& j, GeneratorSpec& g) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "DU_TRACE")
        g = j.get<DuTraceParams>();
    else if (kind == "CHATBOT")
        g = j.get<ChatbotParams>();
    else if (kind == "BATCH_MIX")
        g = j.get<BatchMixParams>();
    else
        throw std::invalid_argument("unknown generator kind: " + kind);
}

struct LinkSpec {
    std::string site;
    o2::LinkConfig config;
};

inline void to_json(Json& j, const LinkSpec& l) {
    j = Json{{"site", l.site},
             {"bandwidth_bytes_per_s", l.config.bandwidth_bytes_per_s},
             {"propagation_delay", l.config.propagation_delay},
             {"ran_queue_cap", l.config.ran_queue_cap},
             {"ai_queue_cap", l.config.ai_queue_cap}};
}
inline void from_json(const Json& j, LinkSpec& l) {
    l = {};
    j.at("site").get_to(l.site);
    l.config.name = "link-" + l.site;
    l.config.bandwidth_bytes_per_s = j.value("bandwidth_bytes_per_s", 1e7);
    l.config.propagation_delay = j.value("propagation_delay", 0.001);
    l.config.ran_queue_cap = j.value("ran_queue_cap", std::size_t{1024});
    l.config.ai_queue_cap = j.value("ai_queue_cap", std::size_t{1024});
}

struct Scenario {
    std::uint64_t seed = 1;
    SimTime duration = 0.0;
    SimTime epoch_period = 1.0;
    SimTime telemetry_period = 0.5;
    Intent intent;
    std::vector<smo::TenantRecord> tenants;
    std::vector<site::SiteConfig> sites;
    std::vector<LinkSpec> links;
    std::vector<GeneratorSpec> generators;

    // First violated constraint, or an empty string when well-formed.
    std::string check() const {
        if (!(duration > 0.0)) return "duration must be positive";
        if (sites.empty()) return "at least one site required";
        auto site_known = [&](const std::string& id) {
            for (const auto& s : sites)
                if (s.site_id == id) return true;
            return false;
        };
        for (const auto& l : links)
            if (!site_known(l.site)) return "link references unknown site " + l.site;
        auto tenant_known = [&](const std::string& t) {
            for (const auto& rec : tenants)
                if (rec.tenant == t) return true;
            return false;
        };
        for (const auto& g : generators) {
            if (const auto* du = std::get_if<DuTraceParams>(&g)) {
                if (!site_known(du->site))
                    return "DU_TRACE references unknown site " + du->site;
                if (du->sample_period <= 0.0) return "DU_TRACE sample period must be positive";
            } else if (const auto* cb = std::get_if<ChatbotParams>(&g)) {
                if (!site_known(cb->site))
                    return "CHATBOT references unknown site " + cb->site;
                if (!tenant_known(cb->tenant))
                    return "CHATBOT references unknown tenant " + cb->tenant;
                if (cb->arrival_rate <= 0.0) return "CHATBOT arrival rate must be positive";
            } else if (const auto* bm = std::get_if<BatchMixParams>(&g)) {
                if (!tenant_known(bm->tenant))
                    return "BATCH_MIX references unknown tenant " + bm->tenant;
                if (bm->arrival_rate <= 0.0) return "BATCH_MIX arrival rate must be positive";
            }
        }
        return {};
    }
};

inline void to_json(Json& j, const Scenario& s) {
    j = Json{{"seed", s.seed},
             {"duration", s.duration},
             {"epoch_period", s.epoch_period},
             {"telemetry_period", s.telemetry_period},
             {"intent", s.intent},
             {"tenants", s.tenants},
             {"sites", s.sites},
             {"links", s.links},
             {"generators", s.generators}};
}
inline void from_json(const Json& j, Scenario& s) {
    s = {};
    s.seed = j.value("seed", std::uint64_t{1});
    j.at("duration").get_to(s.duration);
    s.epoch_period = j.value("epoch_period", 1.0);
    s.telemetry_period = j.value("telemetry_period", 0.5);
    j.at("intent").get_to(s.intent);
    if (j.contains("tenants")) j.at("tenants").get_to(s.tenants);
    j.at("sites").get_to(s.sites);
    if (j.contains("links")) j.at("links").get_to(s.links);
    if (j.contains("generators")) j.at("generators").get_to(s.generators);
}

}  // namespace airan::sim
