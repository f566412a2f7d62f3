#pragma once

#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "airan/sim/engine.hpp"
#include "airan/sim/generators.hpp"
#include "airan/sim/scenario.hpp"

namespace airan::sim {

struct Sample {
    SimTime time = 0.0;
    std::string site;
    std::int64_t ran_milli = 0;
    std::int64_t ai_milli = 0;
    std::int64_t capacity_milli = 0;
    // RAN allocation fell short of demand even though demand fit capacity.
    bool ran_violation = false;
};

struct MetricsLog {
    std::vector<Sample> samples;
    std::vector<std::pair<SimTime, std::size_t>> queue_depth;
    std::uint64_t rt_requests = 0;
    std::uint64_t rt_admissions = 0;
    std::map<std::string, std::uint64_t> rt_rejections;
    std::map<std::string, std::uint64_t> batch_rejections;
    std::vector<double> admission_latencies;
    std::uint64_t preemptions = 0;
    std::uint64_t alarms = 0;
    o2::LinkStats link_stats;  // aggregated over every link in the run
    std::uint64_t events_processed = 0;
};

struct Summary {
    std::uint64_t ran_violations = 0;
    std::uint64_t samples = 0;
    double acceptance_ratio = 1.0;
    bool acceptance_undefined = true;  // no real-time traffic in the log
    double mean_admission_latency = 0.0;
    std::uint64_t preemptions = 0;
    std::uint64_t alarms = 0;
    double mean_delay_ran = 0.0;
    double mean_delay_ai = 0.0;
    std::uint64_t dropped_ai_frames = 0;
};

inline void to_json(Json& j, const Summary& s) {
    j = Json{{"ran_violations", s.ran_violations},
             {"samples", s.samples},
             {"acceptance_ratio", s.acceptance_ratio},
             {"acceptance_undefined", s.acceptance_undefined},
             {"mean_admission_latency", s.mean_admission_latency},
             {"preemptions", s.preemptions},
             {"alarms", s.alarms},
             {"mean_delay_ran", s.mean_delay_ran},
             {"mean_delay_ai", s.mean_delay_ai},
             {"dropped_ai_frames", s.dropped_ai_frames}};
}

inline Summary summarize(const MetricsLog& log) {
    Summary s;
    s.samples = log.samples.size();
    for (const auto& sample : log.samples)
        if (sample.ran_violation) ++s.ran_violations;
    if (log.rt_requests > 0) {
        s.acceptance_undefined = false;
        s.acceptance_ratio = static_cast<double>(log.rt_admissions) /
                             static_cast<double>(log.rt_requests);
    }
    if (!log.admission_latencies.empty()) {
        double total = 0.0;
        for (double d : log.admission_latencies) total += d;
        s.mean_admission_latency =
            total / static_cast<double>(log.admission_latencies.size());
    }
    s.preemptions = log.preemptions;
    s.alarms = log.alarms;
    s.mean_delay_ran = log.link_stats.mean_delay_ran();
    s.mean_delay_ai = log.link_stats.mean_delay_ai();
    s.dropped_ai_frames = log.link_stats.dropped_ai;
    return s;
}

inline void write_csv(const MetricsLog& log, std::ostream& out) {
    out << "time,site,ran_milli,ai_milli,capacity_milli\n";
    char buf[64];
    for (const auto& s : log.samples) {
        std::snprintf(buf, sizeof(buf), "%.6f", s.time);
        out << buf << ',' << s.site << ',' << s.ran_milli << ',' << s.ai_milli
            << ',' << s.capacity_milli << '\n';
    }
}

struct RunOptions {
    bool check_invariants = true;
};

// Wires one orchestrator, the scenario's sites, and a pair of simulated
// links per site (one each way) into a single-threaded event loop.
class Harness {
public:
    Harness(Scenario sc, RunOptions opt = {}) : sc_(std::move(sc)), opt_(opt) {
        if (const auto err = sc_.check(); !err.empty())
            throw std::invalid_argument("invalid scenario: " + err);

        std::mt19937_64 key_rng(sc_.seed ^ 0x6169726e6b657933ull);
        for (auto& b : key_) b = static_cast<unsigned char>(key_rng());

        smo::SmoConfig smo_cfg;
        smo_cfg.intent = sc_.intent;
        smo_cfg.tenants = sc_.tenants;
        smo_cfg.epoch_period = sc_.epoch_period;
        for (const auto& s : sc_.sites) {
            smo_cfg.sites.emplace_back(s.site_id, s.nodes);
            smo_cfg.site_regions[s.site_id] = s.region;
            all_sites_.insert(s.site_id);
        }
        smo_ = std::make_unique<smo::AiSmo>(std::move(smo_cfg), key_);

        for (const auto& s : sc_.sites) {
            sites_.emplace(s.site_id,
                           std::make_unique<site::Site>(s, key_));
            o2::LinkConfig link_cfg;
            for (const auto& l : sc_.links)
                if (l.site == s.site_id) link_cfg = l.config;
            links_.emplace(s.site_id, LinkPair{o2::SimLink(link_cfg),
                                               o2::SimLink(link_cfg)});
        }
    }

    MetricsLog run() {
        for (std::size_t i = 0; i < sc_.generators.size(); ++i)
            for (auto& ev :
                 generate_events(sc_.generators[i], sc_.seed, sc_.duration, i))
                schedule_generated(std::move(ev));
        for (const auto& s : sc_.sites) schedule_telemetry(s.site_id, 0.0);
        schedule_epoch(sc_.epoch_period);

        engine_.run_until(sc_.duration);

        for (const auto& [id, lp] : links_) {
            absorb(lp.down.stats());
            absorb(lp.up.stats());
        }
        for (const auto& [id, st] : sites_)
            log_.preemptions += st->preemption_count();
        log_.alarms = smo_->alarm_count();
        log_.events_processed = engine_.processed();
        return std::move(log_);
    }

    const smo::AiSmo& orchestrator() const { return *smo_; }
    const site::Site& site_state(const std::string& id) const {
        return *sites_.at(id);
    }

private:
    struct LinkPair {
        o2::SimLink down;  // orchestrator -> site
        o2::SimLink up;    // site -> orchestrator
    };

    void schedule_generated(GenEvent ev) {
        if (ev.time > sc_.duration) return;
        engine_.schedule(ev.time, [this, ev = std::move(ev)] {
            switch (ev.kind) {
                case GenEvent::Kind::RanDemand:
                    sites_.at(ev.site)->ran_demand_update(ev.ran_demand,
                                                          engine_.now());
                    break;
                case GenEvent::Kind::RtArrive:
                    handle_rt_arrive(ev);
                    break;
                case GenEvent::Kind::RtComplete:
                    if (admitted_rt_.count(ev.workload_id))
                        sites_.at(ev.site)->workload_complete(ev.workload_id,
                                                              engine_.now());
                    break;
                case GenEvent::Kind::BatchSubmit:
                    handle_batch_submit(ev);
                    break;
            }
            after_event();
        });
    }

    void handle_rt_arrive(const GenEvent& ev) {
        ++log_.rt_requests;
        const auto token = token_for(ev.tenant);
        if (!token) {
            ++log_.rt_rejections["auth-failure"];
            return;
        }
        o2::RtAdmissionRequest req{*token, ev.descriptor, engine_.now()};
        const auto out =
            sites_.at(ev.site)->dms_admit_realtime(req, engine_.now());
        if (out.admitted) {
            ++log_.rt_admissions;
            log_.admission_latencies.push_back(out.admission_latency);
            admitted_rt_.insert(ev.descriptor.id);
        } else {
            ++log_.rt_rejections[out.reason];
        }
    }

    void handle_batch_submit(const GenEvent& ev) {
        const auto token = token_for(ev.tenant);
        if (!token) {
            ++log_.batch_rejections["auth-failure"];
            return;
        }
        const auto out = smo_->submit_batch(*token, ev.descriptor, engine_.now());
        if (!out.ok) ++log_.batch_rejections[out.reason];
    }

    std::optional<smo::AuthToken> token_for(const std::string& tenant) {
        auto it = tokens_.find(tenant);
        if (it != tokens_.end() && !smo::token_expired(it->second, engine_.now()))
            return it->second;
        std::string credential;
        for (const auto& t : sc_.tenants)
            if (t.tenant == tenant) credential = t.credential;
        ResourceVector ceiling;
        for (int i = 0; i < ResourceVector::kComponents; ++i)
            ceiling.component(i) = std::int64_t{1} << 40;
        const auto out = smo_->authenticate(
            tenant, credential,
            {all_sites_, ceiling, smo::kMaxTokenLifetime}, engine_.now());
        if (!out.ok) return std::nullopt;
        tokens_[tenant] = out.token;
        return out.token;
    }

    void schedule_telemetry(const std::string& site_id, SimTime at) {
        if (at > sc_.duration) return;
        engine_.schedule(at, [this, site_id, at] {
            telemetry_tick(site_id);
            schedule_telemetry(site_id, at + sc_.telemetry_period);
        });
    }

    void telemetry_tick(const std::string& site_id) {
        const SimTime now = engine_.now();
        const auto report = sites_.at(site_id)->emit_telemetry(now);
        const SiteSnapshot& snap = report.snapshot;
        Sample sample;
        sample.time = now;
        sample.site = site_id;
        const ResourceVector ran = snap.total_ran_allocated();
        const ResourceVector ai = snap.total_ai_allocated();
        const ResourceVector cap = snap.total_capacity();
        sample.ran_milli = ran.accel_milli;
        sample.ai_milli = ai.accel_milli;
        sample.capacity_milli = cap.accel_milli;
        for (int i = 0; i < ResourceVector::kComponents; ++i)
            if (ran.component(i) < snap.ran_demand.component(i) &&
                snap.ran_demand.component(i) <= cap.component(i))
                sample.ran_violation = true;
        if (opt_.check_invariants && !rv_add(ran, ai).fits_in(cap))
            throw site::InvariantViolation("utilization above capacity at " +
                                           site_id);
        log_.samples.push_back(std::move(sample));
        after_event();
    }

    void schedule_epoch(SimTime at) {
        if (at > sc_.duration) return;
        engine_.schedule(at, [this, at] {
            log_.queue_depth.emplace_back(at, smo_->queue_depth());
            smo_->run_epoch(engine_.now());
            after_event();
            schedule_epoch(at + sc_.epoch_period);
        });
    }

    void drain_outboxes() {
        const SimTime now = engine_.now();
        for (auto& e : smo_->take_outbox()) {
            auto it = links_.find(e.site);
            if (it == links_.end()) continue;
            it->second.down.send(e, now);
            arm_poll(it->first, /*down=*/true);
        }
        for (auto& [id, st] : sites_)
            for (auto& e : st->take_outbox()) {
                links_.at(id).up.send(e, now);
                arm_poll(id, /*down=*/false);
            }
    }

    void arm_poll(const std::string& site_id, bool down) {
        auto& link = down ? links_.at(site_id).down : links_.at(site_id).up;
        const auto at = link.next_delivery();
        if (!at) return;
        engine_.schedule(std::max(*at, engine_.now()), [this, site_id, down] {
            poll_link(site_id, down);
        });
    }

    void poll_link(const std::string& site_id, bool down) {
        auto& link = down ? links_.at(site_id).down : links_.at(site_id).up;
        for (const auto& e : link.poll(engine_.now())) {
            if (down)
                dispatch_to_site(site_id, e);
            else
                smo_->handle_site_message(e, engine_.now());
        }
        arm_poll(site_id, down);
        after_event();
    }

    void dispatch_to_site(const std::string& site_id, const o2::Envelope& e) {
        auto& st = *sites_.at(site_id);
        switch (e.payload_kind) {
            case o2::PayloadKind::POLICY_UPDATE:
                st.ims_apply_policy(o2::parse_payload<sched::SharingPolicy>(e),
                                    engine_.now());
                break;
            case o2::PayloadKind::DEPLOY_REQUEST: {
                const auto req = o2::parse_payload<o2::DeployRequest>(e);
                const auto out = st.dms_deploy(req, engine_.now());
                if (out.ok) {
                    const auto gen = ++deploy_gen_[req.workload.id];
                    engine_.schedule(
                        engine_.now() + req.workload.est_duration,
                        [this, site_id, id = req.workload.id, gen] {
                            if (deploy_gen_[id] == gen) {
                                sites_.at(site_id)->workload_complete(
                                    id, engine_.now());
                                after_event();
                            }
                        });
                }
                break;
            }
            default:
                break;  // alarms and acks need no site-side action
        }
    }

    void after_event() {
        drain_outboxes();
        if (opt_.check_invariants)
            for (const auto& [id, st] : sites_) st->check_invariants();
    }

    void absorb(const o2::LinkStats& s) {
        log_.link_stats.delivered_ran += s.delivered_ran;
        log_.link_stats.delivered_ai += s.delivered_ai;
        log_.link_stats.dropped_ai += s.dropped_ai;
        log_.link_stats.total_delay_ran += s.total_delay_ran;
        log_.link_stats.total_delay_ai += s.total_delay_ai;
        log_.link_stats.max_queueing_delay_ran = std::max(
            log_.link_stats.max_queueing_delay_ran, s.max_queueing_delay_ran);
    }

    Scenario sc_;
    RunOptions opt_;
    smo::SecretKey key_{};
    Engine engine_;
    std::unique_ptr<smo::AiSmo> smo_;
    std::map<std::string, std::unique_ptr<site::Site>> sites_;
    std::map<std::string, LinkPair> links_;
    std::set<std::string> all_sites_;
    std::map<std::string, smo::AuthToken> tokens_;
    std::set<std::string> admitted_rt_;
    std::map<std::string, std::uint64_t> deploy_gen_;
    MetricsLog log_;
};

inline MetricsLog run(const Scenario& sc, RunOptions opt = {}) {
    Harness h(sc, opt);
    return h.run();
}

}  // namespace airan::sim
