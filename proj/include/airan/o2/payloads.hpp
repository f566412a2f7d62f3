#pragma once

// Payload records carried inside AiO2 envelopes. Every payload is the
// canonical structured-text serialization of a core-model record.

#include <map>
#include <string>

#include "airan/core/json.hpp"
#include "airan/o2/message.hpp"
#include "airan/sched/policy.hpp"
#include "airan/smo/advice.hpp"
#include "airan/smo/token.hpp"

namespace airan::o2 {

struct DeployRequest {
    WorkloadDescriptor workload;
    std::string node_id;
    ResourceVector granted;
    std::int64_t policy_version = 0;
    bool operator==(const DeployRequest&) const = default;
};

inline void to_json(Json& j, const DeployRequest& d) {
    j = Json{{"workload", d.workload},
             {"node_id", d.node_id},
             {"granted", d.granted},
             {"policy_version", d.policy_version}};
}
inline void from_json(const Json& j, DeployRequest& d) {
    j.at("workload").get_to(d.workload);
    j.at("node_id").get_to(d.node_id);
    j.at("granted").get_to(d.granted);
    d.policy_version = j.value("policy_version", std::int64_t{0});
}

struct DeployResult {
    std::string workload_id;
    bool ok = false;
    std::string reason;
    ResourceVector granted;
    bool operator==(const DeployResult&) const = default;
};

inline void to_json(Json& j, const DeployResult& d) {
    j = Json{{"workload_id", d.workload_id},
             {"ok", d.ok},
             {"reason", d.reason},
             {"granted", d.granted}};
}
inline void from_json(const Json& j, DeployResult& d) {
    j.at("workload_id").get_to(d.workload_id);
    j.at("ok").get_to(d.ok);
    d.reason = j.value("reason", std::string{});
    if (j.contains("granted")) j.at("granted").get_to(d.granted);
}

struct PreemptNotice {
    std::string workload_id;
    WorkloadClass cls = WorkloadClass::AI_BATCH;
    std::string site_id;
    SimTime time = 0.0;
    bool operator==(const PreemptNotice&) const = default;
};

inline void to_json(Json& j, const PreemptNotice& p) {
    j = Json{{"workload_id", p.workload_id},
             {"class", p.cls},
             {"site_id", p.site_id},
             {"time", p.time}};
}
inline void from_json(const Json& j, PreemptNotice& p) {
    j.at("workload_id").get_to(p.workload_id);
    j.at("class").get_to(p.cls);
    j.at("site_id").get_to(p.site_id);
    p.time = j.value("time", 0.0);
}

struct CompleteNotice {
    std::string workload_id;
    std::string site_id;
    SimTime time = 0.0;
    bool operator==(const CompleteNotice&) const = default;
};

inline void to_json(Json& j, const CompleteNotice& c) {
    j = Json{{"workload_id", c.workload_id}, {"site_id", c.site_id}, {"time", c.time}};
}
inline void from_json(const Json& j, CompleteNotice& c) {
    j.at("workload_id").get_to(c.workload_id);
    j.at("site_id").get_to(c.site_id);
    c.time = j.value("time", 0.0);
}

struct Alarm {
    std::string site_id;
    std::string message;
    SimTime time = 0.0;
    bool operator==(const Alarm&) const = default;
};

inline void to_json(Json& j, const Alarm& a) {
    j = Json{{"site_id", a.site_id}, {"message", a.message}, {"time", a.time}};
}
inline void from_json(const Json& j, Alarm& a) {
    j.at("site_id").get_to(a.site_id);
    a.message = j.value("message", std::string{});
    a.time = j.value("time", 0.0);
}

struct RtAdmissionRequest {
    smo::AuthToken token;
    WorkloadDescriptor descriptor;  // class AI_REALTIME
    SimTime submitted_at = 0.0;
    bool operator==(const RtAdmissionRequest&) const = default;
};

inline void to_json(Json& j, const RtAdmissionRequest& r) {
    j = Json{{"token", r.token},
             {"descriptor", r.descriptor},
             {"submitted_at", r.submitted_at}};
}
inline void from_json(const Json& j, RtAdmissionRequest& r) {
    j.at("token").get_to(r.token);
    j.at("descriptor").get_to(r.descriptor);
    r.submitted_at = j.value("submitted_at", 0.0);
}

struct RtResult {
    std::string workload_id;
    std::string site_id;
    bool admitted = false;
    std::string reason;
    std::string handle;
    ResourceVector grant;
    SimTime admission_latency = 0.0;
    // Carried so the SMO can build rejection advice without the descriptor.
    int priority = 0;
    ResourceVector min_demand;
    bool operator==(const RtResult&) const = default;
};

inline void to_json(Json& j, const RtResult& r) {
    j = Json{{"workload_id", r.workload_id},
             {"site_id", r.site_id},
             {"admitted", r.admitted},
             {"reason", r.reason},
             {"handle", r.handle},
             {"grant", r.grant},
             {"admission_latency", r.admission_latency},
             {"priority", r.priority},
             {"min_demand", r.min_demand}};
}
inline void from_json(const Json& j, RtResult& r) {
    j.at("workload_id").get_to(r.workload_id);
    r.site_id = j.value("site_id", std::string{});
    j.at("admitted").get_to(r.admitted);
    r.reason = j.value("reason", std::string{});
    r.handle = j.value("handle", std::string{});
    if (j.contains("grant")) j.at("grant").get_to(r.grant);
    r.admission_latency = j.value("admission_latency", 0.0);
    r.priority = j.value("priority", 0);
    if (j.contains("min_demand")) j.at("min_demand").get_to(r.min_demand);
}

// ---- Northbound verbs (service mode) ----

struct AuthRequest {
    std::string tenant;
    std::string credential;
    std::set<std::string> sites;
    ResourceVector ceiling;
    SimTime duration = 0.0;
    bool operator==(const AuthRequest&) const = default;
};

inline void to_json(Json& j, const AuthRequest& a) {
    j = Json{{"tenant", a.tenant},
             {"credential", a.credential},
             {"sites", a.sites},
             {"ceiling", a.ceiling},
             {"duration", a.duration}};
}
inline void from_json(const Json& j, AuthRequest& a) {
    j.at("tenant").get_to(a.tenant);
    j.at("credential").get_to(a.credential);
    j.at("sites").get_to(a.sites);
    j.at("ceiling").get_to(a.ceiling);
    a.duration = j.value("duration", 0.0);
}

struct AuthResult {
    bool ok = false;
    std::string reason;
    smo::AuthToken token;
    bool operator==(const AuthResult&) const = default;
};

inline void to_json(Json& j, const AuthResult& a) {
    j = Json{{"ok", a.ok}, {"reason", a.reason}, {"token", a.token}};
}
inline void from_json(const Json& j, AuthResult& a) {
    j.at("ok").get_to(a.ok);
    a.reason = j.value("reason", std::string{});
    if (j.contains("token")) j.at("token").get_to(a.token);
}

struct SubmitBatchRequest {
    smo::AuthToken token;
    WorkloadDescriptor descriptor;
    bool operator==(const SubmitBatchRequest&) const = default;
};

inline void to_json(Json& j, const SubmitBatchRequest& s) {
    j = Json{{"token", s.token}, {"descriptor", s.descriptor}};
}
inline void from_json(const Json& j, SubmitBatchRequest& s) {
    j.at("token").get_to(s.token);
    j.at("descriptor").get_to(s.descriptor);
}

struct SubmitResult {
    bool ok = false;
    std::string job_id;
    std::string reason;
    bool operator==(const SubmitResult&) const = default;
};

inline void to_json(Json& j, const SubmitResult& s) {
    j = Json{{"ok", s.ok}, {"job_id", s.job_id}, {"reason", s.reason}};
}
inline void from_json(const Json& j, SubmitResult& s) {
    j.at("ok").get_to(s.ok);
    s.job_id = j.value("job_id", std::string{});
    s.reason = j.value("reason", std::string{});
}

struct CapacityQuery {
    smo::AuthToken token;
    bool operator==(const CapacityQuery&) const = default;
};

inline void to_json(Json& j, const CapacityQuery& q) { j = Json{{"token", q.token}}; }
inline void from_json(const Json& j, CapacityQuery& q) { j.at("token").get_to(q.token); }

struct CapacityReply {
    bool ok = false;
    std::string reason;
    // site -> node -> free AI headroom
    std::map<std::string, std::map<std::string, ResourceVector>> headroom;
    bool operator==(const CapacityReply&) const = default;
};

inline void to_json(Json& j, const CapacityReply& r) {
    j = Json{{"ok", r.ok}, {"reason", r.reason}, {"headroom", r.headroom}};
}
inline void from_json(const Json& j, CapacityReply& r) {
    j.at("ok").get_to(r.ok);
    r.reason = j.value("reason", std::string{});
    if (j.contains("headroom")) j.at("headroom").get_to(r.headroom);
}

struct JobStatusRequest {
    std::string job_id;
    bool operator==(const JobStatusRequest&) const = default;
};

inline void to_json(Json& j, const JobStatusRequest& r) { j = Json{{"job_id", r.job_id}}; }
inline void from_json(const Json& j, JobStatusRequest& r) { j.at("job_id").get_to(r.job_id); }

struct JobStatusResult {
    bool found = false;
    JobRecord record;
    bool operator==(const JobStatusResult&) const = default;
};

inline void to_json(Json& j, const JobStatusResult& r) {
    j = Json{{"found", r.found}, {"record", r.record}};
}
inline void from_json(const Json& j, JobStatusResult& r) {
    j.at("found").get_to(r.found);
    if (j.contains("record")) j.at("record").get_to(r.record);
}

struct AdviceRequest {
    std::string job_id;
    bool operator==(const AdviceRequest&) const = default;
};

inline void to_json(Json& j, const AdviceRequest& r) { j = Json{{"job_id", r.job_id}}; }
inline void from_json(const Json& j, AdviceRequest& r) { j.at("job_id").get_to(r.job_id); }

struct AdviceResult {
    bool found = false;
    smo::RejectionAdvice advice;
    bool operator==(const AdviceResult&) const = default;
};

inline void to_json(Json& j, const AdviceResult& r) {
    j = Json{{"found", r.found}, {"advice", r.advice}};
}
inline void from_json(const Json& j, AdviceResult& r) {
    j.at("found").get_to(r.found);
    if (j.contains("advice")) j.at("advice").get_to(r.advice);
}

// Builds an envelope around a serializable payload record; the QoS class is
// derived from the payload kind and `seq` counters are per (sender, class).
class EnvelopeFactory {
public:
    explicit EnvelopeFactory(std::string sender) : sender_(std::move(sender)) {}

    template <typename Payload>
    Envelope make(PayloadKind kind, const std::string& site,
                  const Payload& payload) {
        Envelope e;
        e.qos = qos_for(kind);
        e.seq = ++seq_[static_cast<int>(e.qos)];
        e.sender = sender_;
        e.site = site;
        e.payload_kind = kind;
        e.payload = Json(payload).dump();
        return e;
    }

    const std::string& sender() const { return sender_; }

private:
    std::string sender_;
    std::map<int, std::uint64_t> seq_;
};

template <typename Payload>
Payload parse_payload(const Envelope& e) {
    return Json::parse(e.payload).get<Payload>();
}

}  // namespace airan::o2
