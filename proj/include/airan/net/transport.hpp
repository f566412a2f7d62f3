#pragma once

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>

#include "airan/o2/codec.hpp"

namespace airan::net {

class TransportError : public std::runtime_error {
public:
    explicit TransportError(const std::string& what)
        : std::runtime_error(what) {}
};

struct Endpoint {
    std::string host = "127.0.0.1";
    std::uint16_t port = 0;
};

// "host:port" -> Endpoint
inline Endpoint parse_endpoint(const std::string& text) {
    const auto colon = text.rfind(':');
    if (colon == std::string::npos)
        throw TransportError("endpoint must be host:port: " + text);
    Endpoint ep;
    ep.host = text.substr(0, colon);
    const int port = std::stoi(text.substr(colon + 1));
    if (port <= 0 || port > 65535)
        throw TransportError("port out of range: " + text);
    ep.port = static_cast<std::uint16_t>(port);
    return ep;
}

inline sockaddr_in to_sockaddr(const Endpoint& ep) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(ep.port);
    if (inet_pton(AF_INET, ep.host.c_str(), &addr.sin_addr) != 1)
        throw TransportError("bad IPv4 address: " + ep.host);
    return addr;
}

inline int listen_on(const Endpoint& ep) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw TransportError("socket: " + std::string(strerror(errno)));
    const int yes = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    sockaddr_in addr = to_sockaddr(ep);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        const std::string err = strerror(errno);
        ::close(fd);
        throw TransportError("bind " + ep.host + ":" +
                             std::to_string(ep.port) + ": " + err);
    }
    if (::listen(fd, 16) != 0) {
        const std::string err = strerror(errno);
        ::close(fd);
        throw TransportError("listen: " + err);
    }
    return fd;
}

inline int connect_to(const Endpoint& ep) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw TransportError("socket: " + std::string(strerror(errno)));
    sockaddr_in addr = to_sockaddr(ep);
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        const std::string err = strerror(errno);
        ::close(fd);
        throw TransportError("connect " + ep.host + ":" +
                             std::to_string(ep.port) + ": " + err);
    }
    const int yes = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &yes, sizeof(yes));
    return fd;
}

// One framed connection: whole encoded envelopes in, whole envelopes out.
class FramedConn {
public:
    explicit FramedConn(int fd) : fd_(fd) {}
    FramedConn(const FramedConn&) = delete;
    FramedConn& operator=(const FramedConn&) = delete;
    FramedConn(FramedConn&& other) noexcept
        : fd_(other.fd_), rx_(std::move(other.rx_)) {
        other.fd_ = -1;
    }
    ~FramedConn() {
        if (fd_ >= 0) ::close(fd_);
    }

    int fd() const { return fd_; }

    void send_envelope(const o2::Envelope& e) {
        const std::string frame = o2::encode(e);
        std::size_t off = 0;
        while (off < frame.size()) {
            const ssize_t n =
                ::send(fd_, frame.data() + off, frame.size() - off, MSG_NOSIGNAL);
            if (n <= 0) {
                if (n < 0 && errno == EINTR) continue;
                throw TransportError("send: " + std::string(strerror(errno)));
            }
            off += static_cast<std::size_t>(n);
        }
    }

    // A complete envelope already buffered, if any.
    std::optional<o2::Envelope> next_buffered() {
        const auto r = o2::decode(rx_);
        if (r.status == o2::DecodeStatus::NeedsMoreBytes) return std::nullopt;
        if (r.status != o2::DecodeStatus::Ok)
            throw TransportError("malformed frame from peer");
        rx_.erase(0, r.consumed);
        return r.envelope;
    }

    // Blocking read of one more chunk; false on orderly shutdown.
    bool read_chunk() {
        char buf[16384];
        while (true) {
            const ssize_t n = ::recv(fd_, buf, sizeof(buf), 0);
            if (n > 0) {
                rx_.append(buf, static_cast<std::size_t>(n));
                return true;
            }
            if (n == 0) return false;
            if (errno == EINTR) continue;
            throw TransportError("recv: " + std::string(strerror(errno)));
        }
    }

    o2::Envelope recv_envelope() {
        while (true) {
            if (auto e = next_buffered()) return *e;
            if (!read_chunk()) throw TransportError("connection closed by peer");
        }
    }

private:
    int fd_ = -1;
    std::string rx_;
};

}  // namespace airan::net
