// airanctl: operator and AI-developer command line for the airan framework.
//
// Exit codes are a stable contract:
//   0 success, 1 usage/parse error, 2 invariant or alarm failure,
//   3 transport failure, 4 request not admitted / not found.

#include <poll.h>
#include <signal.h>

#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "airan/net/transport.hpp"
#include "airan/sim/harness.hpp"
#include "airan/site/site.hpp"
#include "airan/smo/smo.hpp"

namespace {

using namespace airan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitTransport = 3;
constexpr int kExitNotAdmitted = 4;

volatile std::sig_atomic_t g_stop = 0;
void handle_signal(int) { g_stop = 1; }

ResourceVector parse_rv(const std::string& text) {
    ResourceVector v;
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',') && i < ResourceVector::kComponents)
        v.component(i++) = std::stoll(part);
    return v;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

smo::AuthToken load_identity(const std::string& path) {
    return read_json_file(path).get<smo::AuthToken>();
}

double wall_now(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

// One request/response round-trip to a server.
template <typename Reply, typename Request>
Reply round_trip(const std::string& endpoint, o2::PayloadKind kind,
                 const std::string& site, const Request& request,
                 o2::PayloadKind reply_kind) {
    net::FramedConn conn(net::connect_to(net::parse_endpoint(endpoint)));
    o2::EnvelopeFactory factory("cli");
    conn.send_envelope(factory.make(kind, site, request));
    while (true) {
        const o2::Envelope e = conn.recv_envelope();
        if (e.payload_kind == reply_kind) return o2::parse_payload<Reply>(e);
    }
}

// ---- simulate ----

int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed, bool check_invariants) {
    sim::Scenario scenario;
    try {
        scenario = read_json_file(scenario_path).get<sim::Scenario>();
    } catch (const std::exception& ex) {
        std::cerr << "scenario parse error: " << ex.what() << "\n";
        return kExitUsage;
    }
    if (seed) scenario.seed = *seed;
    if (const auto err = scenario.check(); !err.empty()) {
        std::cerr << "invalid scenario: " << err << "\n";
        return kExitUsage;
    }

    sim::MetricsLog log;
    try {
        log = sim::run(scenario, {check_invariants});
    } catch (const site::InvariantViolation& ex) {
        std::cerr << "invariant violation: " << ex.what() << "\n";
        return kExitInvariant;
    }
    const sim::Summary summary = sim::summarize(log);

    std::ofstream csv(out_path);
    if (!csv) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitUsage;
    }
    sim::write_csv(log, csv);
    std::ofstream summary_out(out_path + ".summary.json");
    summary_out << Json(summary).dump(2) << "\n";
    std::cout << Json(summary).dump(2) << "\n";

    if (summary.ran_violations > 0 || summary.alarms > 0) {
        std::cerr << "alarms: " << summary.alarms
                  << ", ran violations: " << summary.ran_violations << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

// ---- client commands ----

int cmd_auth(const std::string& endpoint, const std::string& identity,
             const std::string& tenant, const std::string& credential,
             const std::string& sites_csv, const std::string& ceiling,
             double duration) {
    o2::AuthRequest req;
    req.tenant = tenant;
    req.credential = credential;
    std::stringstream ss(sites_csv);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) req.sites.insert(part);
    req.ceiling = parse_rv(ceiling);
    req.duration = duration;

    const auto reply = round_trip<o2::AuthResult>(
        endpoint, o2::PayloadKind::AUTH_REQUEST, "smo", req,
        o2::PayloadKind::AUTH_RESULT);
    if (!reply.ok) {
        std::cerr << "authentication failed: " << reply.reason << "\n";
        return kExitNotAdmitted;
    }
    std::ofstream out(identity);
    out << Json(reply.token).dump() << "\n";
    std::cout << "token " << reply.token.token_id << " valid until "
              << reply.token.expiry << ", sites:";
    for (const auto& s : reply.token.granted_sites) std::cout << " " << s;
    std::cout << "\n";
    return kExitOk;
}

void print_advice(const smo::RejectionAdvice& advice) {
    std::cout << "advice:";
    if (advice.reason == "re-authenticate") std::cout << " RE_AUTHENTICATE";
    if (advice.raise_priority)
        std::cout << " RAISE_PRIORITY(next tier " << advice.next_tier << ")";
    if (advice.resubmit_as_batch) std::cout << " RESUBMIT_AS_BATCH";
    for (const auto& s : advice.alternate_sites)
        std::cout << " ALTERNATE_SITE(" << s << ")";
    std::cout << "\n";
}

int cmd_submit_rt(const std::string& endpoint, const std::string& smo_endpoint,
                  const std::string& identity, const std::string& site,
                  const std::string& id, const std::string& min_rv,
                  const std::string& preferred_rv, const std::string& max_rv,
                  double duration, int priority) {
    o2::RtAdmissionRequest req;
    req.token = load_identity(identity);
    WorkloadDescriptor& w = req.descriptor;
    w.id = id;
    w.tenant = req.token.tenant;
    w.cls = WorkloadClass::AI_REALTIME;
    w.elasticity = Elastic{parse_rv(min_rv), parse_rv(preferred_rv),
                           parse_rv(max_rv)};
    w.priority = priority;
    w.target = SiteTarget{site};
    w.est_duration = duration;

    const auto reply = round_trip<o2::RtResult>(
        endpoint, o2::PayloadKind::RT_ADMIT, site, req,
        o2::PayloadKind::RT_RESULT);
    if (reply.admitted) {
        std::cout << "admitted, handle " << reply.handle << ", grant "
                  << rv_to_string(reply.grant) << "\n";
        return kExitOk;
    }
    std::cout << "not admitted: " << reply.reason << "\n";
    if (!smo_endpoint.empty()) {
        try {
            const auto advice = round_trip<o2::AdviceResult>(
                smo_endpoint, o2::PayloadKind::ADVICE_REQUEST, "smo",
                o2::AdviceRequest{id}, o2::PayloadKind::ADVICE_RESULT);
            if (advice.found) print_advice(advice.advice);
        } catch (const net::TransportError&) {
            // Advice is best-effort; the admission verdict stands.
        }
    }
    return kExitNotAdmitted;
}

int cmd_submit_batch(const std::string& endpoint, const std::string& identity,
                     const std::string& id, const std::string& min_rv,
                     const std::string& preferred_rv, const std::string& max_rv,
                     double duration, int priority, double deadline) {
    o2::SubmitBatchRequest req;
    req.token = load_identity(identity);
    WorkloadDescriptor& w = req.descriptor;
    w.id = id;
    w.tenant = req.token.tenant;
    w.cls = WorkloadClass::AI_BATCH;
    if (preferred_rv.empty())
        w.elasticity = NonElastic{parse_rv(min_rv)};
    else
        w.elasticity = Elastic{parse_rv(min_rv), parse_rv(preferred_rv),
                               parse_rv(max_rv)};
    w.priority = priority;
    w.est_duration = duration;
    if (deadline > 0.0) w.deadline = deadline;

    const auto reply = round_trip<o2::SubmitResult>(
        endpoint, o2::PayloadKind::SUBMIT_BATCH, "smo", req,
        o2::PayloadKind::SUBMIT_RESULT);
    if (!reply.ok) {
        std::cout << "rejected: " << reply.reason << "\n";
        return kExitNotAdmitted;
    }
    std::cout << "queued as " << reply.job_id << "\n";
    return kExitOk;
}

int cmd_status(const std::string& endpoint, const std::string& job_id) {
    const auto reply = round_trip<o2::JobStatusResult>(
        endpoint, o2::PayloadKind::JOB_STATUS, "smo",
        o2::JobStatusRequest{job_id}, o2::PayloadKind::JOB_STATUS_RESULT);
    if (!reply.found) {
        std::cout << "job " << job_id << " not found\n";
        return kExitNotAdmitted;
    }
    std::cout << Json(reply.record).dump(2) << "\n";
    return kExitOk;
}

int cmd_capacity(const std::string& endpoint, const std::string& identity) {
    const auto reply = round_trip<o2::CapacityReply>(
        endpoint, o2::PayloadKind::CAPACITY_QUERY, "smo",
        o2::CapacityQuery{load_identity(identity)},
        o2::PayloadKind::CAPACITY_REPLY);
    if (!reply.ok) {
        std::cout << "query failed: " << reply.reason << "\n";
        return kExitNotAdmitted;
    }
    for (const auto& [site, nodes] : reply.headroom)
        for (const auto& [node, free] : nodes)
            std::cout << site << " " << node << " " << rv_to_string(free)
                      << "\n";
    return kExitOk;
}

// ---- servers ----

struct PolledConn {
    std::unique_ptr<net::FramedConn> conn;
    std::string site_id;  // set once a site identifies itself (SMO side)
};

int cmd_serve_smo(const std::string& config_path, const std::string& listen,
                  const std::string& key_hex) {
    const auto cfg = read_json_file(config_path).get<smo::SmoConfig>();
    smo::AiSmo smo(cfg, smo::secret_from_hex(key_hex));
    int listen_fd;
    try {
        listen_fd = net::listen_on(net::parse_endpoint(listen));
    } catch (const net::TransportError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    }
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    std::cerr << "smo listening on " << listen << "\n";

    const auto start = std::chrono::steady_clock::now();
    std::vector<PolledConn> conns;
    std::map<std::string, std::size_t> site_conns;
    double next_epoch = cfg.epoch_period;

    auto deliver_outbox = [&] {
        for (auto& e : smo.take_outbox()) {
            auto it = site_conns.find(e.site);
            if (it == site_conns.end()) continue;  // site not connected
            try {
                conns[it->second].conn->send_envelope(e);
            } catch (const net::TransportError&) {
            }
        }
    };

    while (!g_stop) {
        const double now = wall_now(start);
        if (now >= next_epoch) {
            smo.run_epoch(now);
            deliver_outbox();
            next_epoch += cfg.epoch_period;
        }

        std::vector<pollfd> fds;
        fds.push_back({listen_fd, POLLIN, 0});
        for (const auto& c : conns) fds.push_back({c.conn->fd(), POLLIN, 0});
        const int timeout_ms = std::max(
            1, static_cast<int>((next_epoch - now) * 1000.0));
        if (::poll(fds.data(), fds.size(), timeout_ms) < 0) continue;

        if (fds[0].revents & POLLIN) {
            const int fd = ::accept(listen_fd, nullptr, nullptr);
            if (fd >= 0)
                conns.push_back({std::make_unique<net::FramedConn>(fd), {}});
        }
        for (std::size_t i = 0; i < conns.size(); ++i) {
            if (i + 1 >= fds.size() || !(fds[i + 1].revents & (POLLIN | POLLHUP)))
                continue;
            auto& pc = conns[i];
            bool closed = false;
            try {
                closed = !pc.conn->read_chunk();
            } catch (const net::TransportError&) {
                closed = true;
            }
            const double t = wall_now(start);
            try {
                while (auto e = pc.conn->next_buffered()) {
                    o2::EnvelopeFactory reply("smo");
                    switch (e->payload_kind) {
                        case o2::PayloadKind::AUTH_REQUEST: {
                            const auto req = o2::parse_payload<o2::AuthRequest>(*e);
                            pc.conn->send_envelope(reply.make(
                                o2::PayloadKind::AUTH_RESULT, "cli",
                                smo.authenticate(req.tenant, req.credential,
                                                 {req.sites, req.ceiling,
                                                  req.duration},
                                                 t)));
                            break;
                        }
                        case o2::PayloadKind::SUBMIT_BATCH: {
                            const auto req =
                                o2::parse_payload<o2::SubmitBatchRequest>(*e);
                            pc.conn->send_envelope(reply.make(
                                o2::PayloadKind::SUBMIT_RESULT, "cli",
                                smo.submit_batch(req.token, req.descriptor, t)));
                            if (smo.epoch_due()) {
                                smo.run_epoch(t);
                                deliver_outbox();
                            }
                            break;
                        }
                        case o2::PayloadKind::CAPACITY_QUERY: {
                            const auto req = o2::parse_payload<o2::CapacityQuery>(*e);
                            pc.conn->send_envelope(
                                reply.make(o2::PayloadKind::CAPACITY_REPLY, "cli",
                                           smo.query_capacity(req.token, t)));
                            break;
                        }
                        case o2::PayloadKind::JOB_STATUS: {
                            const auto req =
                                o2::parse_payload<o2::JobStatusRequest>(*e);
                            o2::JobStatusResult res;
                            if (const auto* job = smo.job(req.job_id)) {
                                res.found = true;
                                res.record = *job;
                            }
                            pc.conn->send_envelope(reply.make(
                                o2::PayloadKind::JOB_STATUS_RESULT, "cli", res));
                            break;
                        }
                        case o2::PayloadKind::ADVICE_REQUEST: {
                            const auto req = o2::parse_payload<o2::AdviceRequest>(*e);
                            pc.conn->send_envelope(reply.make(
                                o2::PayloadKind::ADVICE_RESULT, "cli",
                                smo.rejection_advice(req.job_id, t)));
                            break;
                        }
                        default:
                            // Anything else is site traffic.
                            if (pc.site_id.empty()) {
                                pc.site_id = e->sender;
                                site_conns[pc.site_id] = i;
                            }
                            smo.handle_site_message(*e, t);
                            if (smo.epoch_due()) smo.run_epoch(t);
                            deliver_outbox();
                            break;
                    }
                }
            } catch (const net::TransportError&) {
                closed = true;
            }
            if (closed) {
                if (!pc.site_id.empty()) site_conns.erase(pc.site_id);
                conns.erase(conns.begin() + static_cast<std::ptrdiff_t>(i));
                site_conns.clear();
                for (std::size_t k = 0; k < conns.size(); ++k)
                    if (!conns[k].site_id.empty())
                        site_conns[conns[k].site_id] = k;
                --i;
            }
        }
    }
    ::close(listen_fd);
    std::cerr << "smo shut down\n";
    return kExitOk;
}

int cmd_serve_site(const std::string& config_path, const std::string& listen,
                   const std::string& smo_endpoint, const std::string& key_hex) {
    const auto cfg = read_json_file(config_path).get<site::SiteConfig>();
    site::Site st(cfg, smo::secret_from_hex(key_hex));
    int listen_fd;
    try {
        listen_fd = net::listen_on(net::parse_endpoint(listen));
    } catch (const net::TransportError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    }
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);

    std::unique_ptr<net::FramedConn> smo_conn;
    if (!smo_endpoint.empty()) {
        try {
            smo_conn = std::make_unique<net::FramedConn>(
                net::connect_to(net::parse_endpoint(smo_endpoint)));
        } catch (const net::TransportError& ex) {
            // Standalone: fail-safe zero AI quota until a policy arrives.
            std::cerr << "smo unreachable, serving standalone: " << ex.what()
                      << "\n";
        }
    }
    std::cerr << "site " << cfg.site_id << " listening on " << listen << "\n";

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::unique_ptr<net::FramedConn>> clients;
    std::vector<std::pair<double, std::string>> completions;  // (due, id)
    double next_telemetry = 0.0;

    auto flush_up = [&] {
        auto out = st.take_outbox();
        if (!smo_conn) return;
        try {
            for (auto& e : out) smo_conn->send_envelope(e);
        } catch (const net::TransportError&) {
            smo_conn.reset();
        }
    };

    while (!g_stop) {
        const double now = wall_now(start);
        if (now >= next_telemetry) {
            st.emit_telemetry(now);
            flush_up();
            next_telemetry += cfg.telemetry_period;
        }
        for (std::size_t i = 0; i < completions.size();) {
            if (completions[i].first <= now) {
                st.workload_complete(completions[i].second, now);
                completions.erase(completions.begin() +
                                  static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        flush_up();

        std::vector<pollfd> fds;
        fds.push_back({listen_fd, POLLIN, 0});
        if (smo_conn) fds.push_back({smo_conn->fd(), POLLIN, 0});
        for (const auto& c : clients) fds.push_back({c->fd(), POLLIN, 0});
        double next_due = next_telemetry;
        for (const auto& [due, id] : completions) next_due = std::min(next_due, due);
        const int timeout_ms =
            std::max(1, static_cast<int>((next_due - now) * 1000.0));
        if (::poll(fds.data(), fds.size(), timeout_ms) < 0) continue;

        std::size_t idx = 1;
        if (fds[0].revents & POLLIN) {
            const int fd = ::accept(listen_fd, nullptr, nullptr);
            if (fd >= 0) clients.push_back(std::make_unique<net::FramedConn>(fd));
        }
        if (smo_conn) {
            if (fds[idx].revents & (POLLIN | POLLHUP)) {
                try {
                    if (!smo_conn->read_chunk()) smo_conn.reset();
                } catch (const net::TransportError&) {
                    smo_conn.reset();
                }
                const double t = wall_now(start);
                while (smo_conn) {
                    auto e = smo_conn->next_buffered();
                    if (!e) break;
                    if (e->payload_kind == o2::PayloadKind::POLICY_UPDATE) {
                        st.ims_apply_policy(
                            o2::parse_payload<sched::SharingPolicy>(*e), t);
                    } else if (e->payload_kind == o2::PayloadKind::DEPLOY_REQUEST) {
                        const auto req = o2::parse_payload<o2::DeployRequest>(*e);
                        const auto out = st.dms_deploy(req, t);
                        if (out.ok)
                            completions.emplace_back(t + req.workload.est_duration,
                                                     req.workload.id);
                    }
                    flush_up();
                }
            }
            ++idx;
        }
        for (std::size_t c = 0; c < clients.size(); ++c, ++idx) {
            if (idx >= fds.size() || !(fds[idx].revents & (POLLIN | POLLHUP)))
                continue;
            bool closed = false;
            try {
                closed = !clients[c]->read_chunk();
            } catch (const net::TransportError&) {
                closed = true;
            }
            const double t = wall_now(start);
            try {
                while (auto e = clients[c]->next_buffered()) {
                    if (e->payload_kind != o2::PayloadKind::RT_ADMIT) continue;
                    const auto req = o2::parse_payload<o2::RtAdmissionRequest>(*e);
                    const auto out = st.dms_admit_realtime(req, t);
                    if (out.admitted)
                        completions.emplace_back(t + req.descriptor.est_duration,
                                                 req.descriptor.id);
                    o2::RtResult res;
                    res.workload_id = req.descriptor.id;
                    res.site_id = cfg.site_id;
                    res.admitted = out.admitted;
                    res.reason = out.reason;
                    res.handle = out.handle;
                    res.grant = out.grant;
                    res.admission_latency = out.admission_latency;
                    res.priority = req.descriptor.priority;
                    res.min_demand = req.descriptor.min_demand();
                    o2::EnvelopeFactory reply(cfg.site_id + "-client");
                    clients[c]->send_envelope(
                        reply.make(o2::PayloadKind::RT_RESULT, "cli", res));
                    flush_up();
                }
            } catch (const net::TransportError&) {
                closed = true;
            }
            if (closed) {
                clients.erase(clients.begin() + static_cast<std::ptrdiff_t>(c));
                --c;
                --idx;
            }
        }
    }
    // Final telemetry flush before shutdown.
    st.emit_telemetry(wall_now(start));
    flush_up();
    ::close(listen_fd);
    std::cerr << "site " << cfg.site_id << " shut down\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"airan orchestration framework control tool"};
    app.require_subcommand(1);

    // simulate
    std::string scenario_path, out_path;
    std::optional<std::uint64_t> seed;
    bool check_invariants = false;
    auto* simulate = app.add_subcommand("simulate", "run a scenario");
    simulate->add_option("scenario", scenario_path)->required();
    simulate->add_option("--out", out_path)->required();
    simulate->add_option("--seed", seed);
    simulate->add_flag("--check-invariants", check_invariants);

    // shared client options
    std::string endpoint, smo_endpoint, identity = "airan-identity.json";
    std::string tenant, credential, sites_csv, ceiling = "0";
    double duration = 60.0;
    auto* auth = app.add_subcommand("auth", "authenticate with the orchestrator");
    auth->add_option("--endpoint", endpoint)->required();
    auth->add_option("--identity", identity);
    auth->add_option("--tenant", tenant)->required();
    auth->add_option("--credential", credential)->required();
    auth->add_option("--sites", sites_csv)->required();
    auth->add_option("--ceiling", ceiling);
    auth->add_option("--duration", duration);

    std::string site, job_id, min_rv = "0", preferred_rv, max_rv;
    int priority = 1;
    double deadline = 0.0;
    auto* submit_rt = app.add_subcommand("submit-rt", "real-time submission to a site");
    submit_rt->add_option("--endpoint", endpoint)->required();
    submit_rt->add_option("--smo", smo_endpoint);
    submit_rt->add_option("--identity", identity);
    submit_rt->add_option("--site", site)->required();
    submit_rt->add_option("--id", job_id)->required();
    submit_rt->add_option("--min", min_rv)->required();
    submit_rt->add_option("--preferred", preferred_rv)->required();
    submit_rt->add_option("--max", max_rv)->required();
    submit_rt->add_option("--duration", duration);
    submit_rt->add_option("--priority", priority);

    auto* submit_batch = app.add_subcommand("submit-batch", "batch submission to the orchestrator");
    submit_batch->add_option("--endpoint", endpoint)->required();
    submit_batch->add_option("--identity", identity);
    submit_batch->add_option("--id", job_id)->required();
    submit_batch->add_option("--min", min_rv)->required();
    submit_batch->add_option("--preferred", preferred_rv);
    submit_batch->add_option("--max", max_rv);
    submit_batch->add_option("--duration", duration);
    submit_batch->add_option("--priority", priority);
    submit_batch->add_option("--deadline", deadline);

    auto* status = app.add_subcommand("status", "query a job");
    status->add_option("--endpoint", endpoint)->required();
    status->add_option("job_id", job_id)->required();

    auto* capacity = app.add_subcommand("capacity", "query available headroom");
    capacity->add_option("--endpoint", endpoint)->required();
    capacity->add_option("--identity", identity);

    std::string config_path, listen, key_hex;
    auto* serve_smo = app.add_subcommand("serve-smo", "host the orchestrator");
    serve_smo->add_option("--config", config_path)->required();
    serve_smo->add_option("--listen", listen)->required();
    serve_smo->add_option("--key", key_hex)->required();

    auto* serve_site = app.add_subcommand("serve-site", "host an edge site");
    serve_site->add_option("--config", config_path)->required();
    serve_site->add_option("--listen", listen)->required();
    serve_site->add_option("--smo", smo_endpoint);
    serve_site->add_option("--key", key_hex)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*simulate)
            return cmd_simulate(scenario_path, out_path, seed, check_invariants);
        if (*auth)
            return cmd_auth(endpoint, identity, tenant, credential, sites_csv,
                            ceiling, duration);
        if (*submit_rt)
            return cmd_submit_rt(endpoint, smo_endpoint, identity, site, job_id,
                                 min_rv, preferred_rv, max_rv, duration,
                                 priority);
        if (*submit_batch)
            return cmd_submit_batch(endpoint, identity, job_id, min_rv,
                                    preferred_rv, max_rv, duration, priority,
                                    deadline);
        if (*status) return cmd_status(endpoint, job_id);
        if (*capacity) return cmd_capacity(endpoint, identity);
        if (*serve_smo) return cmd_serve_smo(config_path, listen, key_hex);
        if (*serve_site)
            return cmd_serve_site(config_path, listen, smo_endpoint, key_hex);
    } catch (const net::TransportError& ex) {
        std::cerr << "transport error: " << ex.what() << "\n";
        return kExitTransport;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
