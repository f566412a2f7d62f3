#pragma once

#include <cstdint>
#include <string>

namespace airan::o2 {

// Two classes only: RAN-relevant control traffic versus AI management.
enum class QosClass : std::uint8_t { RAN_CONTROL = 0, AI_MGMT = 1 };

inline const char* to_string(QosClass q) {
    return q == QosClass::RAN_CONTROL ? "RAN_CONTROL" : "AI_MGMT";
}

enum class PayloadKind : std::uint8_t {
    // Southbound / site-facing
    POLICY_UPDATE = 1,
    DEPLOY_REQUEST = 2,
    DEPLOY_RESULT = 3,
    PREEMPT_NOTICE = 4,
    COMPLETE_NOTICE = 5,
    TELEMETRY = 6,
    CAPACITY_QUERY = 7,
    CAPACITY_REPLY = 8,
    RT_ADMIT = 9,
    RT_RESULT = 10,
    ALARM = 11,
    // Northbound verbs (service mode) share the same framing
    AUTH_REQUEST = 12,
    AUTH_RESULT = 13,
    VALIDATE_REQUEST = 14,
    VALIDATE_RESULT = 15,
    SUBMIT_BATCH = 16,
    SUBMIT_RESULT = 17,
    JOB_STATUS = 18,
    JOB_STATUS_RESULT = 19,
    ADVICE_REQUEST = 20,
    ADVICE_RESULT = 21,
};

inline bool payload_kind_known(std::uint8_t k) {
    return k >= 1 && k <= 21;
}

// POLICY_UPDATE, PREEMPT_NOTICE and ALARM carry RAN-relevant control and ride
// the priority class. Telemetry is periodic bulk state and stays AI_MGMT.
inline QosClass qos_for(PayloadKind kind) {
    switch (kind) {
        case PayloadKind::POLICY_UPDATE:
        case PayloadKind::PREEMPT_NOTICE:
        case PayloadKind::ALARM:
            return QosClass::RAN_CONTROL;
        default:
            return QosClass::AI_MGMT;
    }
}

constexpr std::uint8_t kProtocolVersion = 1;

struct Envelope {
    std::uint8_t version = kProtocolVersion;
    QosClass qos = QosClass::AI_MGMT;
    std::uint64_t seq = 0;  // per (sender, qos class), strictly increasing
    std::string sender;
    std::string site;
    PayloadKind payload_kind = PayloadKind::TELEMETRY;
    std::string payload;  // serialized core-model record

    bool operator==(const Envelope&) const = default;
};

}  // namespace airan::o2
