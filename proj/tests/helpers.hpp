#pragma once

#include <random>
#include <string>

#include "airan/core/job.hpp"
#include "airan/core/snapshot.hpp"
#include "airan/smo/token.hpp"

namespace testutil {

using namespace airan;

inline ResourceVector rv(std::int64_t accel, std::int64_t cpu = 0,
                         std::int64_t mem = 0, std::int64_t storage = 0,
                         std::int64_t net = 0) {
    ResourceVector v;
    v.accel_milli = accel;
    v.cpu_milli = cpu;
    v.mem_mb = mem;
    v.storage_gb = storage;
    v.net_mbps = net;
    return v;
}

inline ResourceVector random_rv(std::mt19937_64& rng, std::int64_t lo = 0,
                                std::int64_t hi = 2000) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return rv(d(rng), d(rng), d(rng), d(rng), d(rng));
}

inline smo::SecretKey test_key(unsigned char fill = 0x42) {
    smo::SecretKey k;
    k.fill(fill);
    return k;
}

inline WorkloadDescriptor batch_job(const std::string& id, std::int64_t accel,
                                    int priority = 0) {
    WorkloadDescriptor w;
    w.id = id;
    w.tenant = "t1";
    w.cls = WorkloadClass::AI_BATCH;
    w.elasticity = NonElastic{rv(accel)};
    w.priority = priority;
    w.est_duration = 10.0;
    return w;
}

inline WorkloadDescriptor elastic_batch_job(const std::string& id,
                                            std::int64_t min_accel,
                                            std::int64_t pref_accel,
                                            std::int64_t max_accel,
                                            int priority = 0) {
    WorkloadDescriptor w = batch_job(id, pref_accel, priority);
    w.elasticity = Elastic{rv(min_accel), rv(pref_accel), rv(max_accel)};
    return w;
}

inline SiteSnapshot one_node_site(const std::string& site_id,
                                  std::int64_t capacity_accel,
                                  std::int64_t ran_accel = 0) {
    SiteSnapshot s;
    s.site_id = site_id;
    s.region = "r1";
    s.nodes = {{"n1", rv(capacity_accel)}};
    s.allocations = {{"n1", {}}};
    s.ran_allocated = {{"n1", rv(ran_accel)}};
    s.ran_demand = rv(ran_accel);
    return s;
}

}  // namespace testutil
