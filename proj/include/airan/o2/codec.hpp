#pragma once

// Bit-exact wire format shared by the simulated link and service mode:
//
//   frame = u32be body_length || body
//   body  = version u8 || qos u8 || seq u64be
//           || u16be len || sender bytes
//           || u16be len || site bytes
//           || payload_kind u8 || payload bytes (to end of body)
//
// Body length is capped at 16 MiB.

#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>

#include "airan/o2/message.hpp"

namespace airan::o2 {

constexpr std::size_t kMaxBody = 16u * 1024u * 1024u;
constexpr std::size_t kFrameHeader = 4;

class FrameTooLarge : public std::runtime_error {
public:
    explicit FrameTooLarge(std::size_t n)
        : std::runtime_error("frame body of " + std::to_string(n) +
                             " bytes exceeds 16 MiB cap") {}
};

enum class DecodeStatus {
    Ok,
    NeedsMoreBytes,
    UnsupportedVersion,
    Malformed,
    FrameTooLarge,
};

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Malformed;
    Envelope envelope;
    std::size_t consumed = 0;  // bytes to drop from the stream on Ok
};

namespace detail {

inline void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v & 0xff));
}
inline void put_u32(std::string& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((v >> shift) & 0xff));
}
inline void put_u64(std::string& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((v >> shift) & 0xff));
}

struct Reader {
    const unsigned char* p;
    std::size_t n;
    std::size_t pos = 0;

    bool u8(std::uint8_t& out) {
        if (pos + 1 > n) return false;
        out = p[pos++];
        return true;
    }
    bool u16(std::uint16_t& out) {
        if (pos + 2 > n) return false;
        out = static_cast<std::uint16_t>(p[pos] << 8 | p[pos + 1]);
        pos += 2;
        return true;
    }
    bool u64(std::uint64_t& out) {
        if (pos + 8 > n) return false;
        out = 0;
        for (int i = 0; i < 8; ++i) out = out << 8 | p[pos + i];
        pos += 8;
        return true;
    }
    bool str16(std::string& out) {
        std::uint16_t len;
        if (!u16(len)) return false;
        if (pos + len > n) return false;
        out.assign(reinterpret_cast<const char*>(p + pos), len);
        pos += len;
        return true;
    }
};

}  // namespace detail

inline std::string encode(const Envelope& e) {
    if (e.sender.size() > 0xffff || e.site.size() > 0xffff)
        throw std::invalid_argument("sender/site id exceeds u16 length prefix");
    std::string body;
    body.push_back(static_cast<char>(e.version));
    body.push_back(static_cast<char>(e.qos));
    detail::put_u64(body, e.seq);
    detail::put_u16(body, static_cast<std::uint16_t>(e.sender.size()));
    body += e.sender;
    detail::put_u16(body, static_cast<std::uint16_t>(e.site.size()));
    body += e.site;
    body.push_back(static_cast<char>(e.payload_kind));
    body += e.payload;
    if (body.size() > kMaxBody) throw FrameTooLarge(body.size());

    std::string frame;
    frame.reserve(kFrameHeader + body.size());
    detail::put_u32(frame, static_cast<std::uint32_t>(body.size()));
    frame += body;
    return frame;
}

// Decodes one frame from the front of `data`; never reads past the declared
// body length.
inline DecodeResult decode(std::string_view data) {
    DecodeResult r;
    if (data.size() < kFrameHeader) {
        r.status = DecodeStatus::NeedsMoreBytes;
        return r;
    }
    const auto* raw = reinterpret_cast<const unsigned char*>(data.data());
    const std::uint32_t body_len =
        raw[0] << 24 | raw[1] << 16 | raw[2] << 8 | raw[3];
    if (body_len > kMaxBody) {
        r.status = DecodeStatus::FrameTooLarge;
        return r;
    }
    if (data.size() < kFrameHeader + body_len) {
        r.status = DecodeStatus::NeedsMoreBytes;
        return r;
    }

    detail::Reader in{raw + kFrameHeader, body_len};
    std::uint8_t version, qos, kind;
    if (!in.u8(version)) {
        r.status = DecodeStatus::Malformed;
        return r;
    }
    if (version != kProtocolVersion) {
        r.status = DecodeStatus::UnsupportedVersion;
        return r;
    }
    Envelope e;
    e.version = version;
    if (!in.u8(qos) || qos > 1 || !in.u64(e.seq) || !in.str16(e.sender) ||
        !in.str16(e.site) || !in.u8(kind) || !payload_kind_known(kind)) {
        r.status = DecodeStatus::Malformed;
        return r;
    }
    e.qos = static_cast<QosClass>(qos);
    e.payload_kind = static_cast<PayloadKind>(kind);
    e.payload.assign(reinterpret_cast<const char*>(in.p + in.pos),
                     in.n - in.pos);
    r.status = DecodeStatus::Ok;
    r.envelope = std::move(e);
    r.consumed = kFrameHeader + body_len;
    return r;
}

inline std::size_t frame_size(const Envelope& e) {
    return kFrameHeader + 1 + 1 + 8 + 2 + e.sender.size() + 2 + e.site.size() +
           1 + e.payload.size();
}

}  // namespace airan::o2
