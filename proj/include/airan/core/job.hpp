#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "airan/core/workload.hpp"

namespace airan {

enum class JobState {
    Submitted,
    Validated,
    Queued,
    Scheduled,
    Deploying,
    Running,
    Completed,
    Preempted,
    Terminated,
    Rejected,
    Failed,
};

inline const char* to_string(JobState s) {
    switch (s) {
        case JobState::Submitted: return "Submitted";
        case JobState::Validated: return "Validated";
        case JobState::Queued: return "Queued";
        case JobState::Scheduled: return "Scheduled";
        case JobState::Deploying: return "Deploying";
        case JobState::Running: return "Running";
        case JobState::Completed: return "Completed";
        case JobState::Preempted: return "Preempted";
        case JobState::Terminated: return "Terminated";
        case JobState::Rejected: return "Rejected";
        case JobState::Failed: return "Failed";
    }
    return "?";
}

inline bool is_terminal(JobState s) {
    return s == JobState::Completed || s == JobState::Terminated ||
           s == JobState::Rejected || s == JobState::Failed;
}

enum class JobEvent {
    Validate,    // Submitted -> Validated
    Reject,      // Submitted/Validated/Queued -> Rejected
    Enqueue,     // Validated -> Queued
    Schedule,    // Queued -> Scheduled
    Dispatch,    // Scheduled -> Deploying
    DeployAck,   // Deploying -> Running
    Requeue,     // Deploying/Preempted -> Queued
    Complete,    // Running -> Completed
    Preempt,     // Running -> Preempted (never for RAN)
    Terminate,   // Preempted -> Terminated (real-time victims)
    Fail,        // any non-terminal -> Failed
};

inline const char* to_string(JobEvent e) {
    switch (e) {
        case JobEvent::Validate: return "Validate";
        case JobEvent::Reject: return "Reject";
        case JobEvent::Enqueue: return "Enqueue";
        case JobEvent::Schedule: return "Schedule";
        case JobEvent::Dispatch: return "Dispatch";
        case JobEvent::DeployAck: return "DeployAck";
        case JobEvent::Requeue: return "Requeue";
        case JobEvent::Complete: return "Complete";
        case JobEvent::Preempt: return "Preempt";
        case JobEvent::Terminate: return "Terminate";
        case JobEvent::Fail: return "Fail";
    }
    return "?";
}

// Bug-class error: an illegal transition is a programming mistake, never an
// expected outcome, and must not be silently ignored.
class StateMachineViolation : public std::logic_error {
public:
    StateMachineViolation(JobState from, JobEvent ev, const std::string& job_id)
        : std::logic_error("illegal transition: job " + job_id + " in " +
                           to_string(from) + " got " + to_string(ev)) {}
};

struct Placement {
    std::string site_id;
    std::string node_id;
    ResourceVector granted;
    bool operator==(const Placement&) const = default;
};

struct HistoryEntry {
    SimTime time = 0.0;
    JobState from = JobState::Submitted;
    JobState to = JobState::Submitted;
    std::string reason;
};

struct JobRecord {
    WorkloadDescriptor workload;
    JobState state = JobState::Submitted;
    std::optional<Placement> placement;
    std::vector<HistoryEntry> history;

    bool placement_allowed() const {
        return state == JobState::Scheduled || state == JobState::Deploying ||
               state == JobState::Running;
    }
};

// Transition table; returns the target state or nullopt when the event is
// illegal from `from` for a job of class `cls`.
inline std::optional<JobState> job_next_state(JobState from, JobEvent ev,
                                              WorkloadClass cls) {
    switch (ev) {
        case JobEvent::Validate:
            if (from == JobState::Submitted) return JobState::Validated;
            return std::nullopt;
        case JobEvent::Reject:
            if (from == JobState::Submitted || from == JobState::Validated ||
                from == JobState::Queued)
                return JobState::Rejected;
            return std::nullopt;
        case JobEvent::Enqueue:
            if (from == JobState::Validated) return JobState::Queued;
            return std::nullopt;
        case JobEvent::Schedule:
            if (from == JobState::Queued) return JobState::Scheduled;
            return std::nullopt;
        case JobEvent::Dispatch:
            if (from == JobState::Scheduled) return JobState::Deploying;
            return std::nullopt;
        case JobEvent::DeployAck:
            if (from == JobState::Deploying) return JobState::Running;
            return std::nullopt;
        case JobEvent::Requeue:
            if (from == JobState::Deploying) return JobState::Queued;
            if (from == JobState::Preempted && cls == WorkloadClass::AI_BATCH)
                return JobState::Queued;
            return std::nullopt;
        case JobEvent::Complete:
            if (from == JobState::Running) return JobState::Completed;
            return std::nullopt;
        case JobEvent::Preempt:
            // RAN is never preempted.
            if (from == JobState::Running && cls != WorkloadClass::RAN)
                return JobState::Preempted;
            return std::nullopt;
        case JobEvent::Terminate:
            if (from == JobState::Preempted && cls == WorkloadClass::AI_REALTIME)
                return JobState::Terminated;
            return std::nullopt;
        case JobEvent::Fail:
            if (!is_terminal(from)) return JobState::Failed;
            return std::nullopt;
    }
    return std::nullopt;
}

inline void job_transition(JobRecord& job, JobEvent ev, SimTime now,
                           std::string reason = {}) {
    auto next = job_next_state(job.state, ev, job.workload.cls);
    if (!next) throw StateMachineViolation(job.state, ev, job.workload.id);
    job.history.push_back({now, job.state, *next, std::move(reason)});
    job.state = *next;
    if (!job.placement_allowed()) job.placement.reset();
}

}  // namespace airan
