#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "airan/smo/token.hpp"
#include "helpers.hpp"

using namespace airan;
using testutil::rv;
using testutil::test_key;

namespace {

smo::AuthToken sample_token(const smo::SecretKey& key) {
    smo::AuthToken t;
    t.token_id = "tok-1";
    t.tenant = "acme";
    t.granted_sites = {"s1", "s2"};
    t.ceiling = rv(1500, 8000, 32768, 100, 1000);
    t.expiry = 3600.0;
    smo::sign_token(t, key);
    return t;
}

}  // namespace

TEST_CASE("signed tokens verify; different keys do not") {
    const auto key = test_key();
    const auto t = sample_token(key);
    CHECK(smo::verify_token(t, key));
    CHECK_FALSE(smo::verify_token(t, test_key(0x43)));
}

TEST_CASE("expiry boundary: unusable at exactly the expiry instant") {
    const auto t = sample_token(test_key());
    CHECK_FALSE(smo::token_expired(t, 3599.999));
    CHECK(smo::token_expired(t, 3600.0));
    CHECK(smo::token_expired(t, 5000.0));
}

TEST_CASE("any single-field mutation of a serialized token fails verification") {
    const auto key = test_key();
    const auto base = sample_token(key);
    std::mt19937_64 rng(77);
    int checked = 0;
    while (checked < 10000) {
        Json doc = base;
        switch (rng() % 6) {
            case 0: doc["token_id"] = "tok-" + std::to_string(rng() % 100000); break;
            case 1: doc["tenant"] = "tenant-" + std::to_string(rng()); break;
            case 2: {
                auto sites = doc["granted_sites"].get<std::set<std::string>>();
                if (rng() % 2 && !sites.empty()) sites.erase(sites.begin());
                else sites.insert("s" + std::to_string(rng() % 10000));
                doc["granted_sites"] = sites;
                break;
            }
            case 3: {
                auto v = doc["ceiling"].get<ResourceVector>();
                v.component(static_cast<int>(rng() % 5)) +=
                    1 + static_cast<std::int64_t>(rng() % 100000);
                doc["ceiling"] = v;
                break;
            }
            case 4: doc["expiry"] = base.expiry + 1.0 + static_cast<double>(rng() % 100000); break;
            default: {
                auto tag = doc["tag"].get<std::string>();
                const auto pos = rng() % tag.size();
                const char orig = tag[pos];
                tag[pos] = "0123456789abcdef"[rng() % 16];
                if (tag[pos] == orig) continue;
                doc["tag"] = tag;
                break;
            }
        }
        const auto mutated = doc.get<smo::AuthToken>();
        if (mutated == base) continue;
        REQUIRE_FALSE(smo::verify_token(mutated, key));
        ++checked;
    }
}

TEST_CASE("token serialization round-trips with the tag intact") {
    const auto key = test_key();
    const auto t = sample_token(key);
    const Json doc = t;
    const auto back = doc.get<smo::AuthToken>();
    CHECK(back == t);
    CHECK(smo::verify_token(back, key));
}
