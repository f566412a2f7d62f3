#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "airan/core/job.hpp"
#include "airan/core/json.hpp"
#include "airan/core/snapshot.hpp"
#include "airan/sched/policy.hpp"

namespace airan::sched {

struct PlannedPlacement {
    std::string workload_id;
    std::string site_id;
    std::string node_id;
    ResourceVector granted;
    bool operator==(const PlannedPlacement&) const = default;
};

struct SkippedJob {
    std::string workload_id;
    std::string reason;
    bool operator==(const SkippedJob&) const = default;
};

struct PlacementPlan {
    std::vector<PlannedPlacement> placements;
    std::vector<SkippedJob> skipped;
};

inline void to_json(Json& j, const PlannedPlacement& p) {
    j = Json{{"workload_id", p.workload_id},
             {"site_id", p.site_id},
             {"node_id", p.node_id},
             {"granted", p.granted}};
}
inline void from_json(const Json& j, PlannedPlacement& p) {
    j.at("workload_id").get_to(p.workload_id);
    j.at("site_id").get_to(p.site_id);
    j.at("node_id").get_to(p.node_id);
    j.at("granted").get_to(p.granted);
}
inline void to_json(Json& j, const SkippedJob& s) {
    j = Json{{"workload_id", s.workload_id}, {"reason", s.reason}};
}
inline void from_json(const Json& j, SkippedJob& s) {
    j.at("workload_id").get_to(s.workload_id);
    j.at("reason").get_to(s.reason);
}
inline void to_json(Json& j, const PlacementPlan& p) {
    j = Json{{"placements", p.placements}, {"skipped", p.skipped}};
}
inline void from_json(const Json& j, PlacementPlan& p) {
    p = {};
    if (j.contains("placements")) j.at("placements").get_to(p.placements);
    if (j.contains("skipped")) j.at("skipped").get_to(p.skipped);
}

namespace detail {

// Mutable working copy of one site's capacity situation during planning.
struct SiteWork {
    const SiteSnapshot* snapshot = nullptr;
    const SharingPolicy* policy = nullptr;
    std::map<std::string, ResourceVector> node_free;  // free for AI
    ResourceVector quota_room;  // ai_quota minus current AI allocation
};

// Largest grant for `w` that fits `avail`: preferred when it fits, else the
// component-wise clamp of preferred to avail. Feasible iff >= min.
inline std::optional<ResourceVector> feasible_grant(const WorkloadDescriptor& w,
                                                    const ResourceVector& avail) {
    const ResourceVector& pref = w.preferred_demand();
    ResourceVector grant = pref.fits_in(avail) ? pref : rv_min(pref, avail);
    if (!w.is_elastic() && grant != pref) return std::nullopt;
    if (!w.min_demand().fits_in(grant)) return std::nullopt;
    return grant;
}

}  // namespace detail

// Queue ordering: priority desc, earliest deadline, then FIFO. `queue` is
// assumed FIFO-ordered on input; the sort is stable.
inline std::vector<const JobRecord*> batch_order(
    const std::vector<const JobRecord*>& queue) {
    std::vector<const JobRecord*> order = queue;
    std::stable_sort(order.begin(), order.end(),
                     [](const JobRecord* a, const JobRecord* b) {
                         if (a->workload.priority != b->workload.priority)
                             return a->workload.priority > b->workload.priority;
                         const double da = a->workload.deadline.value_or(
                             std::numeric_limits<double>::infinity());
                         const double db = b->workload.deadline.value_or(
                             std::numeric_limits<double>::infinity());
                         return da < db;
                     });
    return order;
}

// Best-fit batch placement. Jobs are processed in queue order; each lands on
// the eligible node with the lowest post-placement remaining-capacity score
// (components normalized by node capacity, equal weights), ties broken by
// lowest (site_id, node_id). Elastic jobs get preferred when it fits, else
// the largest feasible grant >= min. The plan never exceeds any ai_quota.
inline PlacementPlan place_batch(
    const std::vector<const JobRecord*>& queue,
    const std::vector<const SiteSnapshot*>& snapshots,
    const std::vector<const SharingPolicy*>& policies) {
    std::map<std::string, detail::SiteWork> sites;
    for (const auto* snap : snapshots) {
        detail::SiteWork w;
        w.snapshot = snap;
        for (const auto& n : snap->nodes)
            w.node_free[n.node_id] = snap->node_free(n.node_id);
        sites[snap->site_id] = w;
    }
    for (const auto* pol : policies) {
        auto it = sites.find(pol->site_id);
        if (it == sites.end()) continue;
        it->second.policy = pol;
        it->second.quota_room = rv_sub_saturating(
            pol->ai_quota, it->second.snapshot->total_ai_allocated());
    }

    PlacementPlan plan;
    for (const JobRecord* job : batch_order(queue)) {
        const WorkloadDescriptor& w = job->workload;

        double best_score = std::numeric_limits<double>::infinity();
        detail::SiteWork* best_site = nullptr;
        std::string best_node;
        ResourceVector best_grant;

        for (auto& [site_id, work] : sites) {
            if (!work.policy) continue;  // cold site: no quota for AI
            if (!target_matches(w.target, site_id, work.snapshot->region))
                continue;
            for (const auto& node : work.snapshot->nodes) {
                const ResourceVector avail =
                    rv_min(work.node_free[node.node_id], work.quota_room);
                auto grant = detail::feasible_grant(w, avail);
                if (!grant) continue;
                const ResourceVector remaining =
                    rv_sub_saturating(work.node_free[node.node_id], *grant);
                const double score = rv_scalarize(remaining, node.capacity);
                const bool better =
                    score < best_score ||
                    (score == best_score && best_site &&
                     std::tie(site_id, node.node_id) <
                         std::tie(best_site->snapshot->site_id, best_node));
                if (better) {
                    best_score = score;
                    best_site = &work;
                    best_node = node.node_id;
                    best_grant = *grant;
                }
            }
        }

        if (!best_site) {
            plan.skipped.push_back({w.id, "insufficient-capacity"});
            continue;
        }
        best_site->node_free[best_node] =
            rv_sub_saturating(best_site->node_free[best_node], best_grant);
        best_site->quota_room = rv_sub_saturating(best_site->quota_room, best_grant);
        plan.placements.push_back(
            {w.id, best_site->snapshot->site_id, best_node, best_grant});
    }
    return plan;
}

}  // namespace airan::sched
