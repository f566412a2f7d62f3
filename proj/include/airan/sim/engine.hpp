#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "airan/core/workload.hpp"

namespace airan::sim {

// Discrete-event engine. Events at equal times fire in scheduling order, so
// a run is a pure function of its inputs: same wiring, same trace.
class Engine {
public:
    using Handler = std::function<void()>;

    void schedule(SimTime time, Handler fn) {
        if (time < now_) throw std::logic_error("event scheduled in the past");
        queue_.push(Event{time, next_seq_++, std::move(fn)});
    }

    void schedule_after(SimTime delay, Handler fn) {
        schedule(now_ + delay, std::move(fn));
    }

    SimTime now() const { return now_; }
    bool empty() const { return queue_.empty(); }
    std::size_t pending() const { return queue_.size(); }
    std::uint64_t processed() const { return processed_; }

    // Runs every event with time <= horizon; the clock ends at the horizon.
    void run_until(SimTime horizon) {
        while (!queue_.empty() && queue_.top().time <= horizon) {
            Event ev = queue_.top();
            queue_.pop();
            now_ = ev.time;
            ++processed_;
            ev.fn();
        }
        if (now_ < horizon) now_ = horizon;
    }

    void run() {
        while (!queue_.empty()) {
            Event ev = queue_.top();
            queue_.pop();
            now_ = ev.time;
            ++processed_;
            ev.fn();
        }
    }

private:
    struct Event {
        SimTime time;
        std::uint64_t seq;
        Handler fn;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    SimTime now_ = 0.0;
    std::uint64_t next_seq_ = 0;
    std::uint64_t processed_ = 0;
};

}  // namespace airan::sim
