#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "airan/core/workload.hpp"  // SimTime
#include "airan/o2/codec.hpp"
#include "airan/o2/message.hpp"

namespace airan::o2 {

class RanQueueOverflow : public std::runtime_error {
public:
    explicit RanQueueOverflow(const std::string& link)
        : std::runtime_error("RAN_CONTROL queue overflow on link " + link) {}
};

struct LinkConfig {
    std::string name = "link";
    double bandwidth_bytes_per_s = 1e6;
    SimTime propagation_delay = 0.001;
    std::size_t ran_queue_cap = 1024;
    std::size_t ai_queue_cap = 1024;
};

struct LinkStats {
    std::uint64_t delivered_ran = 0;
    std::uint64_t delivered_ai = 0;
    std::uint64_t dropped_ai = 0;
    double total_delay_ran = 0.0;  // enqueue -> delivery
    double total_delay_ai = 0.0;
    double max_queueing_delay_ran = 0.0;  // enqueue -> serialization start

    double mean_delay_ran() const {
        return delivered_ran ? total_delay_ran / static_cast<double>(delivered_ran) : 0.0;
    }
    double mean_delay_ai() const {
        return delivered_ai ? total_delay_ai / static_cast<double>(delivered_ai) : 0.0;
    }
};

// Unidirectional simulated link with strict-priority scheduling:
// RAN_CONTROL always drains before AI_MGMT; an in-flight frame is never
// preempted. Serialization time = frame size / bandwidth; delivery =
// serialization completion + propagation delay. Per-class FIFO.
class SimLink {
public:
    explicit SimLink(LinkConfig cfg = {}) : cfg_(std::move(cfg)) {
        if (cfg_.bandwidth_bytes_per_s <= 0)
            throw std::invalid_argument("link bandwidth must be positive");
    }

    const LinkConfig& config() const { return cfg_; }
    const LinkStats& stats() const { return stats_; }

    void send(const Envelope& e, SimTime now) {
        check_seq(e);
        advance(now);
        Queued q{e, now, static_cast<double>(frame_size(e))};
        if (e.qos == QosClass::RAN_CONTROL) {
            if (ran_queue_.size() >= cfg_.ran_queue_cap)
                throw RanQueueOverflow(cfg_.name);
            ran_queue_.push_back(std::move(q));
        } else {
            if (ai_queue_.size() >= cfg_.ai_queue_cap) {
                ai_queue_.pop_front();  // oldest AI_MGMT frame is dropped
                ++stats_.dropped_ai;
            }
            ai_queue_.push_back(std::move(q));
        }
        advance(now);
    }

    std::vector<Envelope> poll(SimTime now) {
        advance(now);
        std::vector<Envelope> out;
        while (!delivered_.empty() && delivered_.front().at <= now) {
            out.push_back(std::move(delivered_.front().env));
            delivered_.pop_front();
        }
        return out;
    }

    // Earliest time poll() would return something new, if known.
    std::optional<SimTime> next_delivery() const {
        if (!delivered_.empty()) return delivered_.front().at;
        if (in_flight_) return in_flight_->done + cfg_.propagation_delay;
        if (!ran_queue_.empty() || !ai_queue_.empty()) {
            const Queued& head = !ran_queue_.empty() ? ran_queue_.front() : ai_queue_.front();
            const SimTime start = std::max(free_at_, head.enqueued);
            return start + head.bytes / cfg_.bandwidth_bytes_per_s +
                   cfg_.propagation_delay;
        }
        return std::nullopt;
    }

    bool idle() const {
        return !in_flight_ && ran_queue_.empty() && ai_queue_.empty() &&
               delivered_.empty();
    }

private:
    struct Queued {
        Envelope env;
        SimTime enqueued;
        double bytes;
    };
    struct InFlight {
        Envelope env;
        SimTime enqueued;
        SimTime done;
    };
    struct Delivered {
        Envelope env;
        SimTime at;
    };

    void check_seq(const Envelope& e) {
        auto key = std::make_pair(e.sender, e.qos);
        auto [it, inserted] = last_seq_.try_emplace(key, e.seq);
        if (!inserted) {
            if (e.seq <= it->second)
                throw std::logic_error("non-increasing seq from " + e.sender);
            it->second = e.seq;
        }
    }

    void advance(SimTime to) {
        while (true) {
            if (in_flight_) {
                if (in_flight_->done > to) return;
                deliver(*in_flight_);
                free_at_ = in_flight_->done;
                in_flight_.reset();
            }
            std::deque<Queued>* q = nullptr;
            if (!ran_queue_.empty()) q = &ran_queue_;
            else if (!ai_queue_.empty()) q = &ai_queue_;
            if (!q) return;
            Queued& head = q->front();
            const SimTime start = std::max(free_at_, head.enqueued);
            if (start > to) return;
            if (head.env.qos == QosClass::RAN_CONTROL)
                stats_.max_queueing_delay_ran =
                    std::max(stats_.max_queueing_delay_ran, start - head.enqueued);
            in_flight_ = InFlight{std::move(head.env), head.enqueued,
                                  start + head.bytes / cfg_.bandwidth_bytes_per_s};
            q->pop_front();
        }
    }

    void deliver(const InFlight& f) {
        const SimTime at = f.done + cfg_.propagation_delay;
        const double delay = at - f.enqueued;
        if (f.env.qos == QosClass::RAN_CONTROL) {
            ++stats_.delivered_ran;
            stats_.total_delay_ran += delay;
        } else {
            ++stats_.delivered_ai;
            stats_.total_delay_ai += delay;
        }
        delivered_.push_back({f.env, at});
    }

    LinkConfig cfg_;
    LinkStats stats_;
    std::deque<Queued> ran_queue_;
    std::deque<Queued> ai_queue_;
    std::optional<InFlight> in_flight_;
    std::deque<Delivered> delivered_;
    SimTime free_at_ = 0.0;
    std::map<std::pair<std::string, QosClass>, std::uint64_t> last_seq_;
};

}  // namespace airan::o2
