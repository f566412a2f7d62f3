#pragma once

#include <optional>
#include <string>
#include <variant>

#include "airan/core/resource.hpp"

namespace airan {

using SimTime = double;

enum class WorkloadClass { RAN, AI_REALTIME, AI_BATCH };

inline const char* to_string(WorkloadClass c) {
    switch (c) {
        case WorkloadClass::RAN: return "RAN";
        case WorkloadClass::AI_REALTIME: return "AI_REALTIME";
        case WorkloadClass::AI_BATCH: return "AI_BATCH";
    }
    return "?";
}

struct NonElastic {
    ResourceVector demand;
    bool operator==(const NonElastic&) const = default;
};

struct Elastic {
    ResourceVector min;
    ResourceVector preferred;
    ResourceVector max;
    bool operator==(const Elastic&) const = default;
};

using Elasticity = std::variant<NonElastic, Elastic>;

struct AnySite {
    bool operator==(const AnySite&) const = default;
};
struct SiteTarget {
    std::string site_id;
    bool operator==(const SiteTarget&) const = default;
};
struct RegionTarget {
    std::string region;
    bool operator==(const RegionTarget&) const = default;
};

using PlacementTarget = std::variant<AnySite, SiteTarget, RegionTarget>;

constexpr int kMaxPriority = 7;  // RAN tier; AI tiers 0-7, RAN always 7

struct WorkloadDescriptor {
    std::string id;
    std::string tenant;
    WorkloadClass cls = WorkloadClass::AI_BATCH;
    Elasticity elasticity = NonElastic{};
    PlacementTarget target = AnySite{};
    int priority = 0;
    std::optional<SimTime> deadline;  // absolute, AI_BATCH only
    SimTime est_duration = 0.0;

    bool operator==(const WorkloadDescriptor&) const = default;

    bool is_elastic() const { return std::holds_alternative<Elastic>(elasticity); }

    // Minimum acceptable grant.
    const ResourceVector& min_demand() const {
        if (auto* e = std::get_if<Elastic>(&elasticity)) return e->min;
        return std::get<NonElastic>(elasticity).demand;
    }
    // Grant the workload asks for when capacity is plentiful.
    const ResourceVector& preferred_demand() const {
        if (auto* e = std::get_if<Elastic>(&elasticity)) return e->preferred;
        return std::get<NonElastic>(elasticity).demand;
    }
    // Upper bound used for ceiling checks.
    const ResourceVector& max_demand() const {
        if (auto* e = std::get_if<Elastic>(&elasticity)) return e->max;
        return std::get<NonElastic>(elasticity).demand;
    }

    // Structural invariants; returns an empty string when well-formed,
    // otherwise a short description of the first violation.
    std::string check() const {
        if (id.empty()) return "empty id";
        if (tenant.empty()) return "empty tenant";
        if (priority < 0 || priority > kMaxPriority) return "priority out of range";
        if (auto* e = std::get_if<Elastic>(&elasticity)) {
            if (!e->min.non_negative() || !e->preferred.non_negative() ||
                !e->max.non_negative())
                return "negative resource component";
            if (!e->min.fits_in(e->preferred)) return "min exceeds preferred";
            if (!e->preferred.fits_in(e->max)) return "preferred exceeds max";
        } else {
            if (!std::get<NonElastic>(elasticity).demand.non_negative())
                return "negative resource component";
        }
        if (cls == WorkloadClass::RAN) {
            if (is_elastic()) return "RAN workload must be non-elastic";
            if (priority != kMaxPriority) return "RAN workload must be priority 7";
        }
        if (cls == WorkloadClass::AI_REALTIME) {
            if (std::holds_alternative<AnySite>(target))
                return "real-time workload needs a site or region target";
            if (deadline) return "deadline is batch-only";
        }
        if (cls == WorkloadClass::RAN && deadline) return "deadline is batch-only";
        if (est_duration < 0) return "negative duration";
        return {};
    }
};

inline bool target_matches(const PlacementTarget& target,
                           const std::string& site_id,
                           const std::string& region) {
    if (std::holds_alternative<AnySite>(target)) return true;
    if (auto* s = std::get_if<SiteTarget>(&target)) return s->site_id == site_id;
    return std::get<RegionTarget>(target).region == region;
}

}  // namespace airan
