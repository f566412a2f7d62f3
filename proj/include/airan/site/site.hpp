#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "airan/core/json.hpp"
#include "airan/core/snapshot.hpp"
#include "airan/o2/payloads.hpp"
#include "airan/sched/placement.hpp"
#include "airan/sched/preemption.hpp"
#include "airan/smo/token.hpp"

namespace airan::site {

struct SiteConfig {
    std::string site_id;
    std::string region;
    std::vector<NodeInfo> nodes;
    SimTime telemetry_period = 0.5;
    std::string smo_id = "smo";
};

inline void to_json(Json& j, const SiteConfig& c) {
    j = Json{{"site_id", c.site_id},
             {"region", c.region},
             {"nodes", c.nodes},
             {"telemetry_period", c.telemetry_period}};
}
inline void from_json(const Json& j, SiteConfig& c) {
    c = {};
    j.at("site_id").get_to(c.site_id);
    c.region = j.value("region", std::string{});
    j.at("nodes").get_to(c.nodes);
    c.telemetry_period = j.value("telemetry_period", 0.5);
}

struct ImsResult {
    bool applied = false;
    std::string reason;
};

struct DeployOutcome {
    bool ok = false;
    std::string reason;
    ResourceVector granted;
};

struct RtOutcome {
    bool admitted = false;
    std::string reason;
    std::string handle;
    ResourceVector grant;
    SimTime admission_latency = 0.0;
};

class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what)
        : std::logic_error(what) {}
};

// One AI-RAN edge site: policy/config handling (IMS), workload lifecycle
// (DMS) over a simulated multi-node cluster, locally decided real-time
// admission, RAN-priority preemption, and telemetry emission.
//
// Single logical owner: all calls are made from one ordered event stream.
// Outbound messages accumulate in an outbox the caller drains onto a link.
class Site {
public:
    Site(SiteConfig cfg, smo::SecretKey key)
        : cfg_(std::move(cfg)), key_(key), factory_(cfg_.site_id) {
        for (const auto& n : cfg_.nodes) {
            if (!n.capacity.non_negative())
                throw std::invalid_argument("negative node capacity");
            ai_alloc_[n.node_id] = {};
            ran_alloc_[n.node_id] = {};
        }
    }

    const SiteConfig& config() const { return cfg_; }
    bool alarm() const { return alarm_; }
    std::int64_t policy_version() const { return policy_ ? policy_->version : 0; }
    std::uint64_t preemption_count() const { return preemptions_; }

    // No policy yet: fail-safe toward RAN, zero AI quota.
    ResourceVector ai_quota() const {
        return policy_ ? policy_->ai_quota : ResourceVector{};
    }

    // ---- IMS ----

    ImsResult ims_apply_policy(const sched::SharingPolicy& policy, SimTime now) {
        if (policy.site_id != cfg_.site_id) return {false, "wrong-site"};
        if (policy_ && policy.version <= policy_->version)
            return {false, "stale-policy"};
        policy_ = policy;
        // Quota shrink below the current AI allocation: evict until the
        // quota invariant holds again.
        if (policy.preemption_enabled) {
            while (!total_ai().fits_in(policy_->ai_quota)) {
                auto victim = lowest_victim();
                if (!victim) break;
                preempt(*victim, now, "quota-shrink");
            }
        }
        return {true, {}};
    }

    // ---- DMS: batch deployment from the SMO ----

    DeployOutcome dms_deploy(const o2::DeployRequest& req, SimTime now) {
        DeployOutcome out;
        if (!find_node(req.node_id)) {
            out.reason = "unknown-node";
        } else if (req.policy_version < policy_version()) {
            out.reason = "stale-policy";
        } else if (!req.granted.fits_in(
                       rv_min(node_free(req.node_id), quota_room()))) {
            // The SMO planned against a stale view; sites are authoritative.
            out.reason = "stale-view";
        } else {
            allocate(req.node_id, {req.workload.id, req.workload.cls,
                                   req.workload.priority, req.granted, now});
            out.ok = true;
            out.granted = req.granted;
        }
        send(o2::PayloadKind::DEPLOY_RESULT,
             o2::DeployResult{req.workload.id, out.ok, out.reason, out.granted});
        return out;
    }

    // ---- DMS: locally decided real-time admission ----
    // Decides without any SMO round-trip; messages are only emitted after
    // the decision (admission locality).

    RtOutcome dms_admit_realtime(const o2::RtAdmissionRequest& req, SimTime now) {
        RtOutcome out = admit_rt_decide(req, now);
        o2::RtResult result;
        result.workload_id = req.descriptor.id;
        result.site_id = cfg_.site_id;
        result.admitted = out.admitted;
        result.reason = out.reason;
        result.handle = out.handle;
        result.grant = out.grant;
        result.admission_latency = out.admission_latency;
        result.priority = req.descriptor.priority;
        result.min_demand = req.descriptor.min_demand();
        if (!out.admitted)
            send(o2::PayloadKind::RT_RESULT, result);
        return out;
    }

    // ---- RAN demand ----
    // RAN demand is divisible load with absolute priority: satisfied from
    // free capacity when possible, by preempting AI otherwise. A shortfall
    // is an alarm-level event.

    void ran_demand_update(const ResourceVector& new_demand, SimTime now) {
        if (!new_demand.non_negative())
            throw std::invalid_argument("negative RAN demand");
        const ResourceVector delta = rv_sub_saturating(new_demand, ran_demand_);
        ran_demand_ = new_demand;
        if (!delta.is_zero()) {
            try {
                auto victims =
                    sched::select_preemption_victims(snapshot(now), delta);
                for (const auto& id : victims) preempt(id, now, "ran-demand");
            } catch (const sched::InfrastructureAlarm& ex) {
                for (auto ids = all_ai_ids(); const auto& id : ids)
                    preempt(id, now, "ran-demand");
                raise_alarm(ex.what(), now);
            }
        }
        ResourceVector shortfall = redistribute_ran();
        if (!shortfall.is_zero() && !alarm_)
            raise_alarm("RAN demand shortfall " + rv_to_string(shortfall), now);
        if (shortfall.is_zero() && alarm_ && ran_demand_.fits_in(total_capacity()))
            alarm_ = false;
    }

    // ---- Telemetry ----

    TelemetryReport emit_telemetry(SimTime now) {
        TelemetryReport report{snapshot(now)};
        send(o2::PayloadKind::TELEMETRY, report);
        return report;
    }

    // ---- Completion ----

    bool workload_complete(const std::string& workload_id, SimTime now) {
        auto it = where_.find(workload_id);
        if (it == where_.end()) return false;  // not-found (or already released)
        release(workload_id);
        send(o2::PayloadKind::COMPLETE_NOTICE,
             o2::CompleteNotice{workload_id, cfg_.site_id, now});
        return true;
    }

    // ---- Views ----

    SiteSnapshot snapshot(SimTime now) const {
        SiteSnapshot s;
        s.site_id = cfg_.site_id;
        s.region = cfg_.region;
        s.nodes = cfg_.nodes;
        for (const auto& n : cfg_.nodes) {
            NodeAllocations na{n.node_id, ai_alloc_.at(n.node_id)};
            s.allocations.push_back(std::move(na));
            s.ran_allocated.emplace_back(n.node_id, ran_alloc_.at(n.node_id));
        }
        s.policy_version = policy_version();
        s.ran_demand = ran_demand_;
        s.timestamp = now;
        s.alarm = alarm_;
        return s;
    }

    ResourceVector total_capacity() const {
        ResourceVector total;
        for (const auto& n : cfg_.nodes) total = rv_add(total, n.capacity);
        return total;
    }

    ResourceVector total_ai() const {
        ResourceVector total;
        for (const auto& [node, entries] : ai_alloc_)
            for (const auto& e : entries) total = rv_add(total, e.granted);
        return total;
    }

    bool has_workload(const std::string& id) const { return where_.count(id) > 0; }

    std::vector<o2::Envelope> take_outbox() {
        std::vector<o2::Envelope> out;
        out.swap(outbox_);
        return out;
    }
    std::size_t outbox_size() const { return outbox_.size(); }

    void check_invariants() const {
        for (const auto& n : cfg_.nodes) {
            ResourceVector used = ran_alloc_.at(n.node_id);
            for (const auto& e : ai_alloc_.at(n.node_id))
                used = rv_add(used, e.granted);
            if (!used.fits_in(n.capacity))
                throw InvariantViolation("node " + n.node_id + " over capacity: " +
                                         rv_to_string(used));
        }
        if (policy_ && !total_ai().fits_in(policy_->ai_quota))
            throw InvariantViolation("site " + cfg_.site_id +
                                     " AI allocation exceeds quota");
        if (ran_demand_.fits_in(total_capacity())) {
            ResourceVector ran;
            for (const auto& [node, v] : ran_alloc_) ran = rv_add(ran, v);
            if (ran != ran_demand_)
                throw InvariantViolation("site " + cfg_.site_id +
                                         " RAN demand not fully allocated");
        }
    }

private:
    const NodeInfo* find_node(const std::string& node_id) const {
        for (const auto& n : cfg_.nodes)
            if (n.node_id == node_id) return &n;
        return nullptr;
    }

    ResourceVector node_ai(const std::string& node_id) const {
        ResourceVector total;
        for (const auto& e : ai_alloc_.at(node_id)) total = rv_add(total, e.granted);
        return total;
    }

    ResourceVector node_free(const std::string& node_id) const {
        const NodeInfo* n = find_node(node_id);
        return rv_sub_saturating(
            n->capacity, rv_add(node_ai(node_id), ran_alloc_.at(node_id)));
    }

    ResourceVector quota_room() const {
        return rv_sub_saturating(ai_quota(), total_ai());
    }

    void allocate(const std::string& node_id, AllocationEntry entry) {
        where_[entry.workload_id] = node_id;
        ai_alloc_[node_id].push_back(std::move(entry));
    }

    void release(const std::string& workload_id) {
        auto node = where_.at(workload_id);
        auto& entries = ai_alloc_[node];
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [&](const AllocationEntry& e) {
                                         return e.workload_id == workload_id;
                                     }),
                      entries.end());
        where_.erase(workload_id);
    }

    std::vector<std::string> all_ai_ids() const {
        std::vector<std::string> ids;
        for (const auto& [id, node] : where_) ids.push_back(id);
        return ids;
    }

    const AllocationEntry* find_entry(const std::string& workload_id) const {
        auto it = where_.find(workload_id);
        if (it == where_.end()) return nullptr;
        for (const auto& e : ai_alloc_.at(it->second))
            if (e.workload_id == workload_id) return &e;
        return nullptr;
    }

    // Same ordering as the scheduler's victim rule, lowest first.
    std::optional<std::string> lowest_victim() const {
        const ResourceVector cap = total_capacity();
        const AllocationEntry* best = nullptr;
        double best_size = 0.0;
        for (const auto& [node, entries] : ai_alloc_)
            for (const auto& e : entries) {
                const double size = rv_scalarize(e.granted, cap);
                if (!best || e.priority < best->priority ||
                    (e.priority == best->priority &&
                     (e.admitted_at > best->admitted_at ||
                      (e.admitted_at == best->admitted_at && size > best_size)))) {
                    best = &e;
                    best_size = size;
                }
            }
        if (!best) return std::nullopt;
        return best->workload_id;
    }

    void preempt(const std::string& workload_id, SimTime now,
                 const std::string& reason) {
        const AllocationEntry* e = find_entry(workload_id);
        if (!e) return;
        o2::PreemptNotice notice{workload_id, e->cls, cfg_.site_id, now};
        release(workload_id);
        ++preemptions_;
        send(o2::PayloadKind::PREEMPT_NOTICE, notice);
        (void)reason;
    }

    // Spreads ran_demand_ across nodes in configuration order, component by
    // component; returns the unallocatable remainder.
    ResourceVector redistribute_ran() {
        ResourceVector remaining = ran_demand_;
        for (const auto& n : cfg_.nodes) {
            const ResourceVector room =
                rv_sub_saturating(n.capacity, node_ai(n.node_id));
            const ResourceVector take = rv_min(remaining, room);
            ran_alloc_[n.node_id] = take;
            remaining = rv_sub_saturating(remaining, take);
        }
        return remaining;
    }

    void raise_alarm(const std::string& message, SimTime now) {
        alarm_ = true;
        send(o2::PayloadKind::ALARM, o2::Alarm{cfg_.site_id, message, now});
    }

    RtOutcome admit_rt_decide(const o2::RtAdmissionRequest& req, SimTime now) {
        RtOutcome out;
        out.admission_latency = std::max(0.0, now - req.submitted_at);
        const WorkloadDescriptor& w = req.descriptor;
        if (w.cls != WorkloadClass::AI_REALTIME || !w.check().empty()) {
            out.reason = "malformed";
            return out;
        }
        if (!smo::verify_token(req.token, key_)) {
            out.reason = "bad-token";
            return out;
        }
        if (smo::token_expired(req.token, now)) {
            out.reason = "expired-token";
            return out;
        }
        if (!req.token.granted_sites.count(cfg_.site_id) ||
            !target_matches(w.target, cfg_.site_id, cfg_.region)) {
            out.reason = "site-not-granted";
            return out;
        }
        if (!w.max_demand().fits_in(req.token.ceiling)) {
            out.reason = "over-ceiling";
            return out;
        }
        const ResourceVector room = quota_room();
        if (!w.min_demand().fits_in(room)) {
            out.reason = "insufficient-quota";
            return out;
        }
        // Best-fit node, same rule as the batch scheduler.
        const NodeInfo* best = nullptr;
        ResourceVector best_grant;
        double best_score = 0.0;
        for (const auto& n : cfg_.nodes) {
            const ResourceVector avail = rv_min(node_free(n.node_id), room);
            auto grant = sched::detail::feasible_grant(w, avail);
            if (!grant) continue;
            const double score = rv_scalarize(
                rv_sub_saturating(node_free(n.node_id), *grant), n.capacity);
            if (!best || score < best_score) {
                best = &n;
                best_grant = *grant;
                best_score = score;
            }
        }
        if (!best) {
            out.reason = "insufficient-capacity";
            return out;
        }
        allocate(best->node_id, {w.id, w.cls, w.priority, best_grant, now});
        out.admitted = true;
        out.handle = "rt-" + cfg_.site_id + "-" + w.id;
        out.grant = best_grant;
        return out;
    }

    template <typename Payload>
    void send(o2::PayloadKind kind, const Payload& payload) {
        outbox_.push_back(factory_.make(kind, cfg_.site_id, payload));
    }

    SiteConfig cfg_;
    smo::SecretKey key_;
    o2::EnvelopeFactory factory_;
    std::optional<sched::SharingPolicy> policy_;
    std::map<std::string, std::vector<AllocationEntry>> ai_alloc_;
    std::map<std::string, ResourceVector> ran_alloc_;
    std::map<std::string, std::string> where_;  // workload -> node
    ResourceVector ran_demand_;
    bool alarm_ = false;
    std::uint64_t preemptions_ = 0;
    std::vector<o2::Envelope> outbox_;
};

}  // namespace airan::site
