#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "airan/core/json.hpp"
#include "airan/core/snapshot.hpp"

namespace airan::sched {

// Per-site split of capacity into a RAN reserve and an AI quota, issued by
// the orchestrator and shipped to the site over AI-O2.
struct SharingPolicy {
    std::string site_id;
    std::int64_t version = 0;
    ResourceVector ran_reserve;  // withheld from AI
    ResourceVector ai_quota;     // max simultaneous AI grant at the site
    bool preemption_enabled = true;
    SimTime issued_at = 0.0;

    bool operator==(const SharingPolicy&) const = default;
};

inline void to_json(Json& j, const SharingPolicy& p) {
    j = Json{{"site_id", p.site_id},
             {"version", p.version},
             {"ran_reserve", p.ran_reserve},
             {"ai_quota", p.ai_quota},
             {"preemption_enabled", p.preemption_enabled},
             {"issued_at", p.issued_at}};
}
inline void from_json(const Json& j, SharingPolicy& p) {
    p = {};
    j.at("site_id").get_to(p.site_id);
    j.at("version").get_to(p.version);
    j.at("ran_reserve").get_to(p.ran_reserve);
    j.at("ai_quota").get_to(p.ai_quota);
    p.preemption_enabled = j.value("preemption_enabled", true);
    p.issued_at = j.value("issued_at", 0.0);
}

struct PolicyResult {
    SharingPolicy policy;
    bool alarm = false;  // ran_demand alone exceeds site capacity
};

// ran_reserve = ran_demand + headroom * capacity, clipped to capacity;
// ai_quota = capacity - ran_reserve (saturating). If RAN demand alone does
// not fit the site, the policy ships a zero AI quota and the issue is
// flagged as an infrastructure alarm.
inline PolicyResult compute_policy(const SiteSnapshot& snapshot,
                                   const Intent& intent,
                                   std::int64_t previous_version,
                                   SimTime now) {
    const ResourceVector capacity = snapshot.total_capacity();

    PolicyResult result;
    result.policy.site_id = snapshot.site_id;
    result.policy.version = previous_version + 1;
    result.policy.issued_at = now;

    if (!snapshot.ran_demand.fits_in(capacity)) {
        result.policy.ran_reserve = capacity;
        result.policy.ai_quota = ResourceVector{};
        result.alarm = true;
        return result;
    }

    ResourceVector reserve;
    for (int i = 0; i < ResourceVector::kComponents; ++i) {
        const auto cap = capacity.component(i);
        auto headroom = static_cast<std::int64_t>(
            std::llround(intent.ran_headroom_fraction * static_cast<double>(cap)));
        reserve.component(i) =
            std::min(cap, snapshot.ran_demand.component(i) + headroom);
    }
    result.policy.ran_reserve = reserve;
    result.policy.ai_quota = rv_sub_saturating(capacity, reserve);
    return result;
}

}  // namespace airan::sched
