#pragma once

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>

#include "airan/core/json.hpp"
#include "airan/core/resource.hpp"
#include "airan/core/workload.hpp"

namespace airan::smo {

using SecretKey = std::array<unsigned char, 32>;

inline SecretKey secret_from_hex(const std::string& hex) {
    if (hex.size() != 64)
        throw std::invalid_argument("secret must be 64 hex chars (32 bytes)");
    SecretKey key{};
    for (std::size_t i = 0; i < 32; ++i) {
        auto nibble = [&](char c) -> unsigned {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw std::invalid_argument("secret is not valid hex");
        };
        key[i] = static_cast<unsigned char>(nibble(hex[2 * i]) << 4 |
                                            nibble(hex[2 * i + 1]));
    }
    return key;
}

// Signed grant binding a tenant to sites, a resource ceiling, and an expiry.
// The tag is an HMAC-SHA256 over all preceding fields under a secret shared
// between AI-SMO and sites.
struct AuthToken {
    std::string token_id;
    std::string tenant;
    std::set<std::string> granted_sites;
    ResourceVector ceiling;  // max per-request demand
    SimTime expiry = 0.0;
    std::string tag;  // 64 hex chars

    bool operator==(const AuthToken&) const = default;
};

namespace detail {

// Canonical byte string covered by the MAC. Sites are iterated in set order,
// so any representation of the same token MACs identically.
inline std::string token_mac_input(const AuthToken& t) {
    std::string buf;
    buf += t.token_id;
    buf += '\0';
    buf += t.tenant;
    buf += '\0';
    for (const auto& s : t.granted_sites) {
        buf += s;
        buf += '\0';
    }
    buf += '\1';
    for (int i = 0; i < ResourceVector::kComponents; ++i) {
        buf += std::to_string(t.ceiling.component(i));
        buf += '\0';
    }
    char tmp[64];
    std::snprintf(tmp, sizeof tmp, "%.17g", t.expiry);
    buf += tmp;
    return buf;
}

inline std::string hmac_hex(const SecretKey& key, const std::string& msg) {
    unsigned char mac[EVP_MAX_MD_SIZE];
    unsigned int mac_len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
         reinterpret_cast<const unsigned char*>(msg.data()), msg.size(), mac,
         &mac_len);
    static const char* hexdigits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * mac_len);
    for (unsigned int i = 0; i < mac_len; ++i) {
        out.push_back(hexdigits[mac[i] >> 4]);
        out.push_back(hexdigits[mac[i] & 0xf]);
    }
    return out;
}

}  // namespace detail

inline void sign_token(AuthToken& t, const SecretKey& key) {
    t.tag = detail::hmac_hex(key, detail::token_mac_input(t));
}

// Constant-time tag comparison.
inline bool verify_token(const AuthToken& t, const SecretKey& key) {
    const std::string expected = detail::hmac_hex(key, detail::token_mac_input(t));
    if (t.tag.size() != expected.size()) return false;
    unsigned char diff = 0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        diff |= static_cast<unsigned char>(t.tag[i] ^ expected[i]);
    return diff == 0;
}

inline bool token_expired(const AuthToken& t, SimTime now) {
    return now >= t.expiry;
}

inline void to_json(Json& j, const AuthToken& t) {
    j = Json{{"token_id", t.token_id},
             {"tenant", t.tenant},
             {"granted_sites", t.granted_sites},
             {"ceiling", t.ceiling},
             {"expiry", t.expiry},
             {"tag", t.tag}};
}
inline void from_json(const Json& j, AuthToken& t) {
    t = {};
    j.at("token_id").get_to(t.token_id);
    j.at("tenant").get_to(t.tenant);
    j.at("granted_sites").get_to(t.granted_sites);
    j.at("ceiling").get_to(t.ceiling);
    j.at("expiry").get_to(t.expiry);
    t.tag = j.value("tag", std::string{});
}

}  // namespace airan::smo
