#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "airan/core/job.hpp"
#include "airan/core/json.hpp"
#include "airan/core/snapshot.hpp"
#include "airan/o2/payloads.hpp"
#include "airan/sched/placement.hpp"
#include "airan/sched/policy.hpp"
#include "airan/smo/advice.hpp"
#include "airan/smo/token.hpp"

namespace airan::smo {

struct TenantRecord {
    std::string tenant;
    std::string credential;
    int default_priority = 0;
    bool active = true;
};

inline void to_json(Json& j, const TenantRecord& t) {
    j = Json{{"tenant", t.tenant},
             {"credential", t.credential},
             {"default_priority", t.default_priority},
             {"active", t.active}};
}
inline void from_json(const Json& j, TenantRecord& t) {
    t = {};
    j.at("tenant").get_to(t.tenant);
    j.at("credential").get_to(t.credential);
    t.default_priority = j.value("default_priority", 0);
    t.active = j.value("active", true);
}

struct SmoConfig {
    std::string smo_id = "smo";
    Intent intent;
    std::vector<TenantRecord> tenants;
    // Static site registry: ids, regions and node shapes, so tokens can be
    // issued before the first telemetry arrives.
    std::vector<std::pair<std::string, std::vector<NodeInfo>>> sites;
    std::map<std::string, std::string> site_regions;
    SimTime epoch_period = 1.0;
};

inline void to_json(Json& j, const SmoConfig& c) {
    Json sites = Json::array();
    for (const auto& [id, nodes] : c.sites)
        sites.push_back(Json{{"site_id", id}, {"nodes", nodes}});
    j = Json{{"smo_id", c.smo_id},
             {"intent", c.intent},
             {"tenants", c.tenants},
             {"sites", std::move(sites)},
             {"site_regions", c.site_regions},
             {"epoch_period", c.epoch_period}};
}
inline void from_json(const Json& j, SmoConfig& c) {
    c = {};
    c.smo_id = j.value("smo_id", std::string{"smo"});
    j.at("intent").get_to(c.intent);
    if (j.contains("tenants")) j.at("tenants").get_to(c.tenants);
    for (const auto& s : j.at("sites"))
        c.sites.emplace_back(s.at("site_id").get<std::string>(),
                             s.at("nodes").get<std::vector<NodeInfo>>());
    if (j.contains("site_regions")) j.at("site_regions").get_to(c.site_regions);
    c.epoch_period = j.value("epoch_period", 1.0);
}

constexpr SimTime kMaxTokenLifetime = 3600.0;

struct AuthRequirements {
    std::set<std::string> sites;
    ResourceVector ceiling;
    SimTime duration = 0.0;
};

struct ValidationOutcome {
    bool validated = false;
    std::string reason;  // bad-token, expired-token, malformed, over-ceiling, wrong-class
};

// The AI-SMO: tenant authentication, workload validation, batch intake and
// lifecycle ownership, global state from telemetry, policy dissemination,
// and rejection/resubmission advice. One logical owner; callers serialize
// everything through a single ordered event stream.
class AiSmo {
public:
    AiSmo(SmoConfig cfg, SecretKey key)
        : cfg_(std::move(cfg)), key_(key), factory_(cfg_.smo_id) {
        for (const auto& t : cfg_.tenants) tenants_[t.tenant] = t;
    }

    const SmoConfig& config() const { return cfg_; }
    const Intent& intent() const { return intent_locked_ ? *intent_locked_ : cfg_.intent; }

    void set_intent(const Intent& intent, SimTime now) {
        intent_locked_ = intent;
        for (const auto& [site_id, snap] : snapshots_) issue_policy(snap, now);
    }

    // ---- Northbound: authentication ----

    o2::AuthResult authenticate(const std::string& tenant,
                                const std::string& credential,
                                const AuthRequirements& req, SimTime now) {
        o2::AuthResult out;
        auto it = tenants_.find(tenant);
        if (it == tenants_.end() || !it->second.active ||
            it->second.credential != credential) {
            out.reason = "auth-failure";
            return out;
        }
        std::set<std::string> granted;
        for (const auto& s : req.sites)
            if (intent().ai_enabled_sites.count(s) && known_site(s))
                granted.insert(s);
        if (granted.empty()) {
            out.reason = "no-eligible-sites";
            return out;
        }
        AuthToken token;
        token.token_id = "tok-" + std::to_string(++token_counter_);
        token.tenant = tenant;
        token.granted_sites = granted;
        token.ceiling = rv_min(req.ceiling, largest_node_capacity(granted));
        token.expiry = now + std::min(req.duration, kMaxTokenLifetime);
        sign_token(token, key_);
        out.ok = true;
        out.token = token;
        return out;
    }

    // ---- Northbound: validation ----
    // RAN workloads enter via the RAN-side path, never the AI northbound.

    ValidationOutcome validate_workload(const WorkloadDescriptor& descriptor,
                                        const AuthToken& token, SimTime now) const {
        if (!verify_token(token, key_)) return {false, "bad-token"};
        if (token_expired(token, now)) return {false, "expired-token"};
        if (!descriptor.check().empty() || descriptor.tenant != token.tenant)
            return {false, "malformed"};
        if (descriptor.cls == WorkloadClass::RAN) return {false, "wrong-class"};
        if (!descriptor.max_demand().fits_in(token.ceiling))
            return {false, "over-ceiling"};
        return {true, {}};
    }

    // ---- Northbound: batch intake ----

    o2::SubmitResult submit_batch(const AuthToken& token,
                                  const WorkloadDescriptor& descriptor,
                                  SimTime now) {
        o2::SubmitResult out;
        auto v = validate_workload(descriptor, token, now);
        if (!v.validated) {
            out.reason = v.reason;
            return out;
        }
        if (descriptor.cls != WorkloadClass::AI_BATCH) {
            // Real-time goes straight to the site.
            out.reason = "wrong-class";
            return out;
        }
        if (jobs_.count(descriptor.id)) {
            out.reason = "duplicate-id";
            return out;
        }
        JobRecord job;
        job.workload = descriptor;
        job_transition(job, JobEvent::Validate, now);
        job_transition(job, JobEvent::Enqueue, now);
        queue_order_.push_back(descriptor.id);
        jobs_[descriptor.id] = std::move(job);
        epoch_due_ = true;
        out.ok = true;
        out.job_id = descriptor.id;
        return out;
    }

    // ---- Telemetry ingestion ----

    bool ingest_telemetry(const TelemetryReport& report, SimTime now) {
        const SiteSnapshot& snap = report.snapshot;
        if (!known_site(snap.site_id)) {
            ++discarded_reports_;
            return false;
        }
        auto it = snapshots_.find(snap.site_id);
        if (it != snapshots_.end() && snap.timestamp <= it->second.timestamp) {
            ++discarded_reports_;
            return false;  // out-of-order report
        }
        const bool had = it != snapshots_.end();
        snapshots_[snap.site_id] = snap;
        // Compare against the demand the current policy was computed from, so
        // slow drift still accumulates into a reissue.
        if (!had || !policies_.count(snap.site_id) ||
            demand_shift_significant(snap, policy_demand_[snap.site_id]))
            issue_policy(snap, now);
        return true;
    }

    // ---- Northbound: capacity exposure ----

    o2::CapacityReply query_capacity(const AuthToken& token, SimTime now) const {
        o2::CapacityReply reply;
        if (!verify_token(token, key_)) {
            reply.reason = "auth-failure";
            return reply;
        }
        if (token_expired(token, now)) {
            reply.reason = "expired-token";
            return reply;
        }
        reply.ok = true;
        for (const auto& site_id : token.granted_sites) {
            auto it = snapshots_.find(site_id);
            if (it == snapshots_.end()) continue;
            const SiteSnapshot& snap = it->second;
            auto& per_node = reply.headroom[site_id];
            if (snap.alarm) {
                for (const auto& n : snap.nodes) per_node[n.node_id] = {};
                continue;
            }
            ResourceVector quota_room;
            if (auto p = policies_.find(site_id); p != policies_.end())
                quota_room = rv_sub_saturating(p->second.ai_quota,
                                               snap.total_ai_allocated());
            for (const auto& n : snap.nodes)
                per_node[n.node_id] = rv_min(snap.node_free(n.node_id), quota_room);
        }
        return reply;
    }

    // ---- Rejection advice (Fig. 5 resume path) ----

    o2::AdviceResult rejection_advice(const std::string& job_id, SimTime now) const {
        (void)now;
        o2::AdviceResult out;
        auto it = rt_failures_.find(job_id);
        if (it == rt_failures_.end()) return out;  // not-found
        const o2::RtResult& failure = it->second;
        out.found = true;
        out.advice.reason = failure.reason;
        if (failure.reason == "bad-token" || failure.reason == "expired-token") {
            // Auth failures are not capacity failures.
            out.advice.reason = "re-authenticate";
            return out;
        }
        if (failure.priority < kMaxPriority) {
            out.advice.raise_priority = true;
            out.advice.next_tier = failure.priority + 1;
        }
        out.advice.resubmit_as_batch = true;
        for (const auto& [site_id, snap] : snapshots_) {
            if (site_id == failure.site_id || snap.alarm) continue;
            if (!intent().ai_enabled_sites.count(site_id)) continue;
            ResourceVector quota_room;
            if (auto p = policies_.find(site_id); p != policies_.end())
                quota_room = rv_sub_saturating(p->second.ai_quota,
                                               snap.total_ai_allocated());
            if (failure.min_demand.fits_in(quota_room))
                out.advice.alternate_sites.push_back(site_id);
        }
        return out;
    }

    // ---- Scheduling epoch ----

    sched::PlacementPlan run_epoch(SimTime now) {
        epoch_due_ = false;
        // Deadline pass: a queued job that cannot finish in time any more is
        // rejected up front.
        for (auto& id : queued_ids()) {
            JobRecord& job = jobs_.at(id);
            if (job.workload.deadline &&
                now + job.workload.est_duration > *job.workload.deadline)
                job_transition(job, JobEvent::Reject, now, "deadline-expired");
        }
        std::vector<const JobRecord*> queue;
        for (const auto& id : queued_ids()) queue.push_back(&jobs_.at(id));
        std::vector<const SiteSnapshot*> snaps;
        std::vector<const sched::SharingPolicy*> pols;
        for (const auto& [site_id, snap] : snapshots_)
            if (!snap.alarm) snaps.push_back(&snap);
        for (const auto& [site_id, pol] : policies_) pols.push_back(&pol);
        auto plan = sched::place_batch(queue, snaps, pols);
        dispatch_deployments(plan, now);
        return plan;
    }

    // Sends one DeployRequest per placement and moves jobs to Deploying.
    // The local view is updated optimistically; sites are authoritative and
    // refusals requeue the job when the result comes back.
    void dispatch_deployments(const sched::PlacementPlan& plan, SimTime now) {
        for (const auto& p : plan.placements) {
            JobRecord& job = jobs_.at(p.workload_id);
            job.placement = Placement{p.site_id, p.node_id, p.granted};
            job_transition(job, JobEvent::Schedule, now);
            job_transition(job, JobEvent::Dispatch, now);
            remove_from_queue(p.workload_id);
            o2::DeployRequest req;
            req.workload = job.workload;
            req.node_id = p.node_id;
            req.granted = p.granted;
            req.policy_version = policies_.count(p.site_id)
                                     ? policies_.at(p.site_id).version
                                     : 0;
            outbox_.push_back(
                factory_.make(o2::PayloadKind::DEPLOY_REQUEST, p.site_id, req));
            // Optimistic view update so later epochs do not double-book.
            auto& snap = snapshots_.at(p.site_id);
            for (auto& na : snap.allocations)
                if (na.node_id == p.node_id)
                    na.entries.push_back({job.workload.id, job.workload.cls,
                                          job.workload.priority, p.granted, now});
        }
    }

    // ---- Southbound result/notice ingestion ----

    void handle_site_message(const o2::Envelope& e, SimTime now) {
        switch (e.payload_kind) {
            case o2::PayloadKind::TELEMETRY:
                ingest_telemetry(o2::parse_payload<TelemetryReport>(e), now);
                break;
            case o2::PayloadKind::DEPLOY_RESULT: {
                auto r = o2::parse_payload<o2::DeployResult>(e);
                auto it = jobs_.find(r.workload_id);
                if (it == jobs_.end()) break;
                if (it->second.state != JobState::Deploying) break;  // dup/late ack
                if (r.ok) {
                    job_transition(it->second, JobEvent::DeployAck, now);
                } else {
                    job_transition(it->second, JobEvent::Requeue, now, r.reason);
                    queue_order_.push_back(r.workload_id);
                    epoch_due_ = true;
                }
                break;
            }
            case o2::PayloadKind::PREEMPT_NOTICE: {
                auto n = o2::parse_payload<o2::PreemptNotice>(e);
                ++preempt_notices_;
                auto it = jobs_.find(n.workload_id);
                if (it == jobs_.end()) break;  // real-time, not SMO-owned
                if (it->second.state != JobState::Running) break;
                job_transition(it->second, JobEvent::Preempt, now, "ran-demand");
                // Batch victims requeue automatically, no user action.
                job_transition(it->second, JobEvent::Requeue, now);
                queue_order_.push_back(n.workload_id);
                epoch_due_ = true;
                break;
            }
            case o2::PayloadKind::COMPLETE_NOTICE: {
                auto c = o2::parse_payload<o2::CompleteNotice>(e);
                auto it = jobs_.find(c.workload_id);
                if (it != jobs_.end() && it->second.state == JobState::Running)
                    job_transition(it->second, JobEvent::Complete, now);
                epoch_due_ = true;  // released capacity may admit queued work
                break;
            }
            case o2::PayloadKind::RT_RESULT: {
                auto r = o2::parse_payload<o2::RtResult>(e);
                if (!r.admitted) rt_failures_[r.workload_id] = r;
                break;
            }
            case o2::PayloadKind::ALARM: {
                auto a = o2::parse_payload<o2::Alarm>(e);
                ++alarms_;
                if (auto it = snapshots_.find(a.site_id); it != snapshots_.end())
                    it->second.alarm = true;
                break;
            }
            default:
                break;
        }
    }

    // ---- Accessors ----

    bool epoch_due() const { return epoch_due_; }
    const std::map<std::string, SiteSnapshot>& snapshots() const { return snapshots_; }
    const std::map<std::string, sched::SharingPolicy>& policies() const {
        return policies_;
    }
    const JobRecord* job(const std::string& id) const {
        auto it = jobs_.find(id);
        return it == jobs_.end() ? nullptr : &it->second;
    }
    const std::map<std::string, JobRecord>& jobs() const { return jobs_; }
    std::size_t queue_depth() const { return queued_ids().size(); }
    std::uint64_t alarm_count() const { return alarms_; }
    std::uint64_t preempt_notice_count() const { return preempt_notices_; }
    std::uint64_t discarded_report_count() const { return discarded_reports_; }

    std::vector<o2::Envelope> take_outbox() {
        std::vector<o2::Envelope> out;
        out.swap(outbox_);
        return out;
    }

private:
    bool known_site(const std::string& site_id) const {
        for (const auto& [id, nodes] : cfg_.sites)
            if (id == site_id) return true;
        return false;
    }

    ResourceVector largest_node_capacity(const std::set<std::string>& sites) const {
        ResourceVector best;
        for (const auto& [id, nodes] : cfg_.sites) {
            if (!sites.count(id)) continue;
            for (const auto& n : nodes)
                for (int i = 0; i < ResourceVector::kComponents; ++i)
                    best.component(i) =
                        std::max(best.component(i), n.capacity.component(i));
        }
        return best;
    }

    bool demand_shift_significant(const SiteSnapshot& snap,
                                  const ResourceVector& old_demand) const {
        const ResourceVector cap = snap.total_capacity();
        for (int i = 0; i < ResourceVector::kComponents; ++i) {
            const auto c = cap.component(i);
            if (c == 0) continue;
            const auto shift =
                std::abs(snap.ran_demand.component(i) - old_demand.component(i));
            if (shift * 20 >= c) return true;  // >= 5% of capacity
        }
        return false;
    }

    void issue_policy(const SiteSnapshot& snap, SimTime now) {
        const std::int64_t prev =
            policies_.count(snap.site_id) ? policies_.at(snap.site_id).version : 0;
        auto result = sched::compute_policy(snap, intent(), prev, now);
        if (result.alarm) {
            ++alarms_;
            outbox_.push_back(factory_.make(
                o2::PayloadKind::ALARM, snap.site_id,
                o2::Alarm{snap.site_id, "RAN demand exceeds site capacity", now}));
        }
        policies_[snap.site_id] = result.policy;
        policy_demand_[snap.site_id] = snap.ran_demand;
        outbox_.push_back(factory_.make(o2::PayloadKind::POLICY_UPDATE,
                                        snap.site_id, result.policy));
    }

    std::vector<std::string> queued_ids() const {
        std::vector<std::string> ids;
        for (const auto& id : queue_order_)
            if (jobs_.count(id) && jobs_.at(id).state == JobState::Queued)
                ids.push_back(id);
        return ids;
    }

    void remove_from_queue(const std::string& id) {
        std::erase(queue_order_, id);
    }

    SmoConfig cfg_;
    SecretKey key_;
    o2::EnvelopeFactory factory_;
    std::optional<Intent> intent_locked_;
    std::map<std::string, TenantRecord> tenants_;
    std::map<std::string, SiteSnapshot> snapshots_;
    std::map<std::string, sched::SharingPolicy> policies_;
    std::map<std::string, ResourceVector> policy_demand_;  // demand at issuance
    std::map<std::string, JobRecord> jobs_;
    std::vector<std::string> queue_order_;  // FIFO among Queued
    std::map<std::string, o2::RtResult> rt_failures_;
    std::vector<o2::Envelope> outbox_;
    std::uint64_t token_counter_ = 0;
    std::uint64_t alarms_ = 0;
    std::uint64_t preempt_notices_ = 0;
    std::uint64_t discarded_reports_ = 0;
    bool epoch_due_ = false;
};

}  // namespace airan::smo
