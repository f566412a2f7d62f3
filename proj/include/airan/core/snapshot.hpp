#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "airan/core/resource.hpp"
#include "airan/core/workload.hpp"

namespace airan {

// Operator-level requirements consumed by the orchestrator.
struct Intent {
    double ran_headroom_fraction = 0.0;   // 0..1, reserved for RAN growth
    SimTime max_rt_admission_latency = 0.010;
    std::set<std::string> ai_enabled_sites;

    bool valid() const {
        return ran_headroom_fraction >= 0.0 && ran_headroom_fraction <= 1.0;
    }
};

struct NodeInfo {
    std::string node_id;
    ResourceVector capacity;
    bool operator==(const NodeInfo&) const = default;
};

struct AllocationEntry {
    std::string workload_id;
    WorkloadClass cls = WorkloadClass::AI_BATCH;
    int priority = 0;
    ResourceVector granted;
    SimTime admitted_at = 0.0;
    bool operator==(const AllocationEntry&) const = default;
};

struct NodeAllocations {
    std::string node_id;
    std::vector<AllocationEntry> entries;
    bool operator==(const NodeAllocations&) const = default;
};

// The orchestrator's per-site view of the distributed infrastructure.
// `allocations` holds AI-class grants; the RAN share is tracked separately
// per node because RAN demand is a divisible load, not a set of workloads.
struct SiteSnapshot {
    std::string site_id;
    std::string region;
    std::vector<NodeInfo> nodes;
    std::vector<NodeAllocations> allocations;
    std::vector<std::pair<std::string, ResourceVector>> ran_allocated;
    std::int64_t policy_version = 0;
    ResourceVector ran_demand;
    SimTime timestamp = 0.0;
    bool alarm = false;

    bool operator==(const SiteSnapshot&) const = default;

    ResourceVector total_capacity() const {
        ResourceVector total;
        for (const auto& n : nodes) total = rv_add(total, n.capacity);
        return total;
    }

    ResourceVector total_ai_allocated() const {
        ResourceVector total;
        for (const auto& na : allocations)
            for (const auto& e : na.entries) total = rv_add(total, e.granted);
        return total;
    }

    ResourceVector total_ran_allocated() const {
        ResourceVector total;
        for (const auto& [node, v] : ran_allocated) total = rv_add(total, v);
        return total;
    }

    const NodeInfo* find_node(const std::string& node_id) const {
        for (const auto& n : nodes)
            if (n.node_id == node_id) return &n;
        return nullptr;
    }

    ResourceVector node_ai_allocated(const std::string& node_id) const {
        ResourceVector total;
        for (const auto& na : allocations)
            if (na.node_id == node_id)
                for (const auto& e : na.entries) total = rv_add(total, e.granted);
        return total;
    }

    ResourceVector node_ran_allocated(const std::string& node_id) const {
        for (const auto& [node, v] : ran_allocated)
            if (node == node_id) return v;
        return {};
    }

    ResourceVector node_free(const std::string& node_id) const {
        const NodeInfo* n = find_node(node_id);
        if (!n) return {};
        return rv_sub_saturating(
            n->capacity,
            rv_add(node_ai_allocated(node_id), node_ran_allocated(node_id)));
    }
};

// Southbound monitoring record: a snapshot as seen from the site itself.
struct TelemetryReport {
    SiteSnapshot snapshot;
    bool operator==(const TelemetryReport&) const = default;
};

}  // namespace airan
