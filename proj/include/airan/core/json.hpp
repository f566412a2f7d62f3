#pragma once

// Canonical structured-text serialization of the core domain types. Field
// names mirror the struct members so documents are self-describing; scenario
// files, telemetry logs, and wire payloads all use this schema.

#include <json.hpp>

#include "airan/core/job.hpp"
#include "airan/core/resource.hpp"
#include "airan/core/snapshot.hpp"
#include "airan/core/workload.hpp"

namespace airan {

using Json = nlohmann::json;

inline void to_json(Json& j, const ResourceVector& v) {
    j = Json{{"accel_milli", v.accel_milli},
             {"cpu_milli", v.cpu_milli},
             {"mem_mb", v.mem_mb},
             {"storage_gb", v.storage_gb},
             {"net_mbps", v.net_mbps}};
}

inline void from_json(const Json& j, ResourceVector& v) {
    v = {};
    v.accel_milli = j.value("accel_milli", std::int64_t{0});
    v.cpu_milli = j.value("cpu_milli", std::int64_t{0});
    v.mem_mb = j.value("mem_mb", std::int64_t{0});
    v.storage_gb = j.value("storage_gb", std::int64_t{0});
    v.net_mbps = j.value("net_mbps", std::int64_t{0});
}

NLOHMANN_JSON_SERIALIZE_ENUM(WorkloadClass, {
    {WorkloadClass::RAN, "RAN"},
    {WorkloadClass::AI_REALTIME, "AI_REALTIME"},
    {WorkloadClass::AI_BATCH, "AI_BATCH"},
})

inline void to_json(Json& j, const Elasticity& e) {
    if (auto* ne = std::get_if<NonElastic>(&e)) {
        j = Json{{"kind", "non_elastic"}, {"demand", ne->demand}};
    } else {
        const auto& el = std::get<Elastic>(e);
        j = Json{{"kind", "elastic"},
                 {"min", el.min},
                 {"preferred", el.preferred},
                 {"max", el.max}};
    }
}

inline void from_json(const Json& j, Elasticity& e) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "non_elastic") {
        e = NonElastic{j.at("demand").get<ResourceVector>()};
    } else if (kind == "elastic") {
        e = Elastic{j.at("min").get<ResourceVector>(),
                    j.at("preferred").get<ResourceVector>(),
                    j.at("max").get<ResourceVector>()};
    } else {
        throw Json::other_error::create(501, "unknown elasticity kind: " + kind, &j);
    }
}

inline void to_json(Json& j, const PlacementTarget& t) {
    if (std::holds_alternative<AnySite>(t)) {
        j = Json{{"kind", "any"}};
    } else if (auto* s = std::get_if<SiteTarget>(&t)) {
        j = Json{{"kind", "site"}, {"site_id", s->site_id}};
    } else {
        j = Json{{"kind", "region"}, {"region", std::get<RegionTarget>(t).region}};
    }
}

inline void from_json(const Json& j, PlacementTarget& t) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "any") {
        t = AnySite{};
    } else if (kind == "site") {
        t = SiteTarget{j.at("site_id").get<std::string>()};
    } else if (kind == "region") {
        t = RegionTarget{j.at("region").get<std::string>()};
    } else {
        throw Json::other_error::create(501, "unknown target kind: " + kind, &j);
    }
}

inline void to_json(Json& j, const WorkloadDescriptor& w) {
    j = Json{{"id", w.id},
             {"tenant", w.tenant},
             {"class", w.cls},
             {"elasticity", w.elasticity},
             {"target", w.target},
             {"priority", w.priority},
             {"est_duration", w.est_duration}};
    if (w.deadline) j["deadline"] = *w.deadline;
}

inline void from_json(const Json& j, WorkloadDescriptor& w) {
    w = {};
    j.at("id").get_to(w.id);
    j.at("tenant").get_to(w.tenant);
    j.at("class").get_to(w.cls);
    j.at("elasticity").get_to(w.elasticity);
    if (j.contains("target")) j.at("target").get_to(w.target);
    w.priority = j.value("priority", 0);
    w.est_duration = j.value("est_duration", 0.0);
    if (j.contains("deadline")) w.deadline = j.at("deadline").get<SimTime>();
}

NLOHMANN_JSON_SERIALIZE_ENUM(JobState, {
    {JobState::Submitted, "Submitted"},
    {JobState::Validated, "Validated"},
    {JobState::Queued, "Queued"},
    {JobState::Scheduled, "Scheduled"},
    {JobState::Deploying, "Deploying"},
    {JobState::Running, "Running"},
    {JobState::Completed, "Completed"},
    {JobState::Preempted, "Preempted"},
    {JobState::Terminated, "Terminated"},
    {JobState::Rejected, "Rejected"},
    {JobState::Failed, "Failed"},
})

inline void to_json(Json& j, const Placement& p) {
    j = Json{{"site_id", p.site_id}, {"node_id", p.node_id}, {"granted", p.granted}};
}
inline void from_json(const Json& j, Placement& p) {
    j.at("site_id").get_to(p.site_id);
    j.at("node_id").get_to(p.node_id);
    j.at("granted").get_to(p.granted);
}

inline void to_json(Json& j, const HistoryEntry& h) {
    j = Json{{"time", h.time},
             {"from", h.from},
             {"to", h.to},
             {"reason", h.reason}};
}
inline void from_json(const Json& j, HistoryEntry& h) {
    j.at("time").get_to(h.time);
    j.at("from").get_to(h.from);
    j.at("to").get_to(h.to);
    h.reason = j.value("reason", std::string{});
}

inline void to_json(Json& j, const JobRecord& r) {
    j = Json{{"workload", r.workload}, {"state", r.state}, {"history", r.history}};
    if (r.placement) j["placement"] = *r.placement;
}
inline void from_json(const Json& j, JobRecord& r) {
    r = {};
    j.at("workload").get_to(r.workload);
    j.at("state").get_to(r.state);
    if (j.contains("history")) j.at("history").get_to(r.history);
    if (j.contains("placement")) r.placement = j.at("placement").get<Placement>();
}

inline void to_json(Json& j, const Intent& in) {
    j = Json{{"ran_headroom_fraction", in.ran_headroom_fraction},
             {"max_rt_admission_latency", in.max_rt_admission_latency},
             {"ai_enabled_sites", in.ai_enabled_sites}};
}
inline void from_json(const Json& j, Intent& in) {
    in = {};
    in.ran_headroom_fraction = j.value("ran_headroom_fraction", 0.0);
    in.max_rt_admission_latency = j.value("max_rt_admission_latency", 0.010);
    if (j.contains("ai_enabled_sites"))
        j.at("ai_enabled_sites").get_to(in.ai_enabled_sites);
}

inline void to_json(Json& j, const NodeInfo& n) {
    j = Json{{"node_id", n.node_id}, {"capacity", n.capacity}};
}
inline void from_json(const Json& j, NodeInfo& n) {
    j.at("node_id").get_to(n.node_id);
    j.at("capacity").get_to(n.capacity);
}

inline void to_json(Json& j, const AllocationEntry& a) {
    j = Json{{"workload_id", a.workload_id},
             {"class", a.cls},
             {"priority", a.priority},
             {"granted", a.granted},
             {"admitted_at", a.admitted_at}};
}
inline void from_json(const Json& j, AllocationEntry& a) {
    a = {};
    j.at("workload_id").get_to(a.workload_id);
    if (j.contains("class")) j.at("class").get_to(a.cls);
    a.priority = j.value("priority", 0);
    j.at("granted").get_to(a.granted);
    a.admitted_at = j.value("admitted_at", 0.0);
}

inline void to_json(Json& j, const NodeAllocations& n) {
    j = Json{{"node_id", n.node_id}, {"entries", n.entries}};
}
inline void from_json(const Json& j, NodeAllocations& n) {
    j.at("node_id").get_to(n.node_id);
    j.at("entries").get_to(n.entries);
}

inline void to_json(Json& j, const SiteSnapshot& s) {
    Json ran = Json::array();
    for (const auto& [node, v] : s.ran_allocated)
        ran.push_back(Json{{"node_id", node}, {"granted", v}});
    j = Json{{"site_id", s.site_id},
             {"region", s.region},
             {"nodes", s.nodes},
             {"allocations", s.allocations},
             {"ran_allocated", ran},
             {"policy_version", s.policy_version},
             {"ran_demand", s.ran_demand},
             {"timestamp", s.timestamp},
             {"alarm", s.alarm}};
}
inline void from_json(const Json& j, SiteSnapshot& s) {
    s = {};
    j.at("site_id").get_to(s.site_id);
    s.region = j.value("region", std::string{});
    if (j.contains("nodes")) j.at("nodes").get_to(s.nodes);
    if (j.contains("allocations")) j.at("allocations").get_to(s.allocations);
    if (j.contains("ran_allocated"))
        for (const auto& e : j.at("ran_allocated"))
            s.ran_allocated.emplace_back(e.at("node_id").get<std::string>(),
                                         e.at("granted").get<ResourceVector>());
    s.policy_version = j.value("policy_version", std::int64_t{0});
    if (j.contains("ran_demand")) j.at("ran_demand").get_to(s.ran_demand);
    s.timestamp = j.value("timestamp", 0.0);
    s.alarm = j.value("alarm", false);
}

inline void to_json(Json& j, const TelemetryReport& r) {
    j = Json{{"snapshot", r.snapshot}};
}
inline void from_json(const Json& j, TelemetryReport& r) {
    j.at("snapshot").get_to(r.snapshot);
}

}  // namespace airan
