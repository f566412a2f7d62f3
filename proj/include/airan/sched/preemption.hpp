#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "airan/core/snapshot.hpp"

namespace airan::sched {

// Raised when even evicting every AI workload cannot satisfy a RAN demand
// increase. RAN shortfall is alarm-level, never silent.
class InfrastructureAlarm : public std::runtime_error {
public:
    explicit InfrastructureAlarm(const std::string& what)
        : std::runtime_error(what) {}
};

// AI victims for a RAN demand increase `needed` that free capacity cannot
// absorb. Candidates are ordered by (priority asc, admission-time desc,
// granted-scalarization desc) and taken as the minimal-length prefix whose
// released resources, together with free capacity, cover `needed`. RAN
// workloads are never candidates.
inline std::vector<std::string> select_preemption_victims(
    const SiteSnapshot& snapshot, const ResourceVector& needed) {
    const ResourceVector capacity = snapshot.total_capacity();
    ResourceVector free = rv_sub_saturating(
        capacity,
        rv_add(snapshot.total_ai_allocated(), snapshot.total_ran_allocated()));
    if (needed.fits_in(free)) return {};

    struct Candidate {
        const AllocationEntry* entry;
        double size;  // granted scalarized against site capacity
    };
    std::vector<Candidate> candidates;
    for (const auto& na : snapshot.allocations)
        for (const auto& e : na.entries) {
            if (e.cls == WorkloadClass::RAN) continue;
            candidates.push_back({&e, rv_scalarize(e.granted, capacity)});
        }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.entry->priority != b.entry->priority)
                      return a.entry->priority < b.entry->priority;
                  if (a.entry->admitted_at != b.entry->admitted_at)
                      return a.entry->admitted_at > b.entry->admitted_at;
                  if (a.size != b.size) return a.size > b.size;
                  return a.entry->workload_id < b.entry->workload_id;
              });

    std::vector<std::string> victims;
    ResourceVector released = free;
    for (const auto& c : candidates) {
        victims.push_back(c.entry->workload_id);
        released = rv_add(released, c.entry->granted);
        if (needed.fits_in(released)) return victims;
    }
    throw InfrastructureAlarm("site " + snapshot.site_id +
                              ": RAN demand increase " + rv_to_string(needed) +
                              " not coverable even with all AI evicted");
}

}  // namespace airan::sched
