#pragma once

#include <string>
#include <vector>

#include "airan/core/json.hpp"

namespace airan::smo {

// What a tenant can do after a real-time admission failure: retry at the
// next priority tier, fall back to the batch path, or try a site that
// currently shows enough headroom.
struct RejectionAdvice {
    std::string reason;
    bool raise_priority = false;
    int next_tier = 0;
    bool resubmit_as_batch = false;
    std::vector<std::string> alternate_sites;

    bool operator==(const RejectionAdvice&) const = default;

    bool empty() const {
        return !raise_priority && !resubmit_as_batch && alternate_sites.empty();
    }
};

inline void to_json(Json& j, const RejectionAdvice& a) {
    j = Json{{"reason", a.reason},
             {"raise_priority", a.raise_priority},
             {"next_tier", a.next_tier},
             {"resubmit_as_batch", a.resubmit_as_batch},
             {"alternate_sites", a.alternate_sites}};
}
inline void from_json(const Json& j, RejectionAdvice& a) {
    a = {};
    a.reason = j.value("reason", std::string{});
    a.raise_priority = j.value("raise_priority", false);
    a.next_tier = j.value("next_tier", 0);
    a.resubmit_as_batch = j.value("resubmit_as_batch", false);
    if (j.contains("alternate_sites"))
        j.at("alternate_sites").get_to(a.alternate_sites);
}

}  // namespace airan::smo
