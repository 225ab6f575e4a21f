#include "pirlab/sim/tcp.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <future>

#include "pirlab/errors.hpp"

namespace pirlab::sim {

using Clock = std::chrono::steady_clock;

namespace {

constexpr int kPollMs = 100;

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  ~Fd() {
    if (fd_ >= 0) ::close(fd_);
  }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  int get() const { return fd_; }

 private:
  int fd_;
};

int remaining_ms(Clock::time_point deadline) {
  const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
  return left > 0 ? static_cast<int>(left) : 0;
}

enum class Io { Ok, Eof, Timeout, Error };

Io send_all(int fd, const std::vector<std::uint8_t>& bytes) {
  std::size_t off = 0;
  while (off < bytes.size()) {
    const ssize_t w = ::send(fd, bytes.data() + off, bytes.size() - off, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      return Io::Error;
    }
    off += static_cast<std::size_t>(w);
  }
  return Io::Ok;
}

// Reads exactly out.size() bytes; `stop` is polled between waits.
Io recv_exact(int fd, std::span<std::uint8_t> out, Clock::time_point deadline, const std::atomic<bool>* stop,
              std::size_t* got = nullptr) {
  std::size_t off = 0;
  while (off < out.size()) {
    if (stop && stop->load()) return Io::Eof;
    const int wait = std::min(remaining_ms(deadline), kPollMs);
    if (wait == 0 && Clock::now() >= deadline) return Io::Timeout;
    pollfd p{fd, POLLIN, 0};
    const int r = ::poll(&p, 1, wait);
    if (r < 0 && errno != EINTR) return Io::Error;
    if (r <= 0) continue;
    const ssize_t n = ::recv(fd, out.data() + off, out.size() - off, 0);
    if (n == 0) {
      if (got) *got = off;
      return Io::Eof;
    }
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      return Io::Error;
    }
    off += static_cast<std::size_t>(n);
  }
  if (got) *got = off;
  return Io::Ok;
}

struct ReadOutcome {
  Io io = Io::Ok;
  std::optional<Frame> frame;
  bool bad_header = false;
  bool truncated = false;  // EOF inside a frame
};

ReadOutcome read_frame(int fd, Clock::time_point deadline, const std::atomic<bool>* stop) {
  ReadOutcome r;
  std::uint8_t header[kHeaderBytes];
  std::size_t got = 0;
  r.io = recv_exact(fd, header, deadline, stop, &got);
  if (r.io != Io::Ok) {
    r.truncated = r.io == Io::Eof && got > 0;
    return r;
  }
  const auto h = decode_header(header);
  if (!h) {
    r.bad_header = true;
    return r;
  }
  Frame f{h->type, std::vector<std::uint8_t>(h->length)};
  r.io = recv_exact(fd, f.payload, deadline, stop);
  if (r.io != Io::Ok) {
    r.truncated = r.io == Io::Eof;
    return r;
  }
  r.frame = std::move(f);
  return r;
}

int connect_to(const Endpoint& ep, Clock::time_point deadline) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (::getaddrinfo(ep.host.c_str(), std::to_string(ep.port).c_str(), &hints, &res) != 0 || !res) return -1;
  const int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
  if (fd < 0) {
    ::freeaddrinfo(res);
    return -1;
  }
  const int flags = ::fcntl(fd, F_GETFL, 0);
  ::fcntl(fd, F_SETFL, flags | O_NONBLOCK);
  int rc = ::connect(fd, res->ai_addr, res->ai_addrlen);
  ::freeaddrinfo(res);
  if (rc < 0 && errno == EINPROGRESS) {
    pollfd p{fd, POLLOUT, 0};
    rc = ::poll(&p, 1, remaining_ms(deadline)) == 1 ? 0 : -1;
    int err = 0;
    socklen_t len = sizeof err;
    if (rc == 0 && (::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len) != 0 || err != 0)) rc = -1;
  }
  if (rc < 0) {
    ::close(fd);
    return -1;
  }
  ::fcntl(fd, F_SETFL, flags);
  const int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  return fd;
}

}  // namespace

Endpoint parse_endpoint(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw PirError(ErrorCode::ParamError, "endpoint must be host:port");
  Endpoint ep;
  if (colon > 0) ep.host = text.substr(0, colon);
  try {
    const unsigned long port = std::stoul(text.substr(colon + 1));
    if (port == 0 || port > 65535) throw std::out_of_range("port");
    ep.port = static_cast<std::uint16_t>(port);
  } catch (const std::exception&) {
    throw PirError(ErrorCode::ParamError, "bad port in endpoint '" + text + "'");
  }
  return ep;
}

TcpServer::TcpServer(ServerNode node, std::uint16_t port, std::string bind_host) : node_(std::move(node)) {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw PirError(ErrorCode::Transport, "socket() failed");
  const int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (::inet_pton(AF_INET, bind_host.c_str(), &addr.sin_addr) != 1) {
    ::close(listen_fd_);
    throw PirError(ErrorCode::ParamError, "bind address must be an IPv4 literal");
  }
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listen_fd_, 64) != 0) {
    const std::string why = std::strerror(errno);
    ::close(listen_fd_);
    throw PirError(ErrorCode::Transport, "cannot listen on port " + std::to_string(port) + ": " + why);
  }
  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpServer::~TcpServer() {
  stop();
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

void TcpServer::start() { acceptor_ = std::thread([this] { accept_loop(); }); }

void TcpServer::stop() {
  stopping_ = true;
  if (acceptor_.joinable()) acceptor_.join();
  std::lock_guard lock(mu_);
  for (auto& w : workers_) {
    if (w.joinable()) w.join();
  }
  workers_.clear();
}

void TcpServer::wait() {
  while (!stopping_) std::this_thread::sleep_for(std::chrono::milliseconds(kPollMs));
}

void TcpServer::accept_loop() {
  while (!stopping_) {
    pollfd p{listen_fd_, POLLIN, 0};
    if (::poll(&p, 1, kPollMs) <= 0) continue;
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) continue;
    std::lock_guard lock(mu_);
    workers_.emplace_back([this, fd] { serve_connection(fd); });
  }
}

void TcpServer::serve_connection(int raw_fd) {
  const Fd fd(raw_fd);
  while (!stopping_) {
    // Idle connections are dropped after a minute.
    const auto r = read_frame(fd.get(), Clock::now() + std::chrono::seconds(60), &stopping_);
    if (r.bad_header) {
      send_all(fd.get(), encode_frame(error_frame(WireError::Malformed, "bad frame header")));
      return;
    }
    if (r.truncated) {
      send_all(fd.get(), encode_frame(error_frame(WireError::Malformed, "truncated frame")));
      return;
    }
    if (!r.frame) return;
    if (send_all(fd.get(), encode_frame(node_.handle(*r.frame))) != Io::Ok) return;
  }
}

namespace {

struct ServerResult {
  foasc::RingVec answer;
  ServerExchange exchange;
};

[[noreturn]] void fail_server(ErrorCode code, std::size_t j, const Endpoint& ep, const std::string& what) {
  throw PirError(code, "server " + std::to_string(j + 1) + " (" + ep.to_string() + "): " + what);
}

Frame expect_frame(int fd, Clock::time_point deadline, std::size_t j, const Endpoint& ep) {
  const auto r = read_frame(fd, deadline, nullptr);
  if (r.io == Io::Timeout) fail_server(ErrorCode::Timeout, j, ep, "no reply before the timeout");
  if (!r.frame) fail_server(ErrorCode::Transport, j, ep, "connection closed or bad frame");
  if (r.frame->type == static_cast<std::uint8_t>(MsgType::Error)) {
    const auto e = parse_error(*r.frame);
    if (e && e->first == static_cast<std::uint8_t>(WireError::DigestMismatch)) {
      fail_server(ErrorCode::ParamDigestMismatch, j, ep, e->second);
    }
    fail_server(ErrorCode::Transport, j, ep, "error frame: " + (e ? e->second : std::string("empty")));
  }
  return *r.frame;
}

ServerResult exchange_with(const Endpoint& ep, std::size_t j, const foasc::FoascInstance& inst,
                           const foasc::LevelPoint& q, std::chrono::milliseconds timeout) {
  const auto deadline = Clock::now() + timeout;
  const Fd fd(connect_to(ep, deadline));
  if (fd.get() < 0) fail_server(ErrorCode::Timeout, j, ep, "unreachable");

  Frame hello{static_cast<std::uint8_t>(MsgType::Hello), {}};
  algebra::put_le(inst.digest(), 8, hello.payload);
  if (send_all(fd.get(), encode_frame(hello)) != Io::Ok) fail_server(ErrorCode::Transport, j, ep, "send failed");
  const Frame config = expect_frame(fd.get(), deadline, j, ep);
  const auto info = parse_config(config.payload);
  if (config.type != static_cast<std::uint8_t>(MsgType::Config) || !info) {
    fail_server(ErrorCode::Transport, j, ep, "expected CONFIG");
  }
  if (info->digest != inst.digest()) fail_server(ErrorCode::ParamDigestMismatch, j, ep, "parameter digest differs");
  if (info->server_id != j) fail_server(ErrorCode::ParamError, j, ep, "endpoint serves position " + std::to_string(info->server_id + 1));

  Frame query{static_cast<std::uint8_t>(MsgType::Query), {}};
  inst.level_codec().encode(q, query.payload);
  const auto t0 = Clock::now();
  if (send_all(fd.get(), encode_frame(query)) != Io::Ok) fail_server(ErrorCode::Transport, j, ep, "send failed");
  const Frame reply = expect_frame(fd.get(), deadline, j, ep);
  const double rtt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (reply.type != static_cast<std::uint8_t>(MsgType::Answer)) fail_server(ErrorCode::Transport, j, ep, "expected ANSWER");
  auto a = foasc::decode_ring_vec(inst.ring(), inst.ring_dim(), reply.payload);
  if (!a) fail_server(ErrorCode::Transport, j, ep, "undecodable answer");
  return {std::move(*a), ServerExchange{query.payload.size(), reply.payload.size(), kHeaderBytes, kHeaderBytes, rtt}};
}

}  // namespace

Retrieval client_retrieve(const std::vector<Endpoint>& endpoints, const foasc::InstancePtr& inst, std::size_t i,
                          std::uint64_t seed, const ClientOptions& opt) {
  if (endpoints.size() != inst->k()) {
    throw PirError(ErrorCode::ParamError, "need exactly k = " + std::to_string(inst->k()) + " endpoints");
  }
  const auto start = Clock::now();
  const foasc::Query q = foasc::query_gen(*inst, i, seed);
  std::vector<std::future<ServerResult>> pending;
  for (std::size_t j = 0; j < endpoints.size(); ++j) {
    pending.push_back(std::async(std::launch::async, [&, j] {
      return exchange_with(endpoints[j], j, *inst, q.queries[j], opt.timeout);
    }));
  }
  Retrieval out;
  std::vector<foasc::RingVec> answers;
  std::optional<PirError> first_error;
  for (auto& f : pending) {
    try {
      auto r = f.get();
      answers.push_back(std::move(r.answer));
      out.transcript.servers.push_back(r.exchange);
    } catch (const PirError& e) {
      if (!first_error) first_error = e;
    }
  }
  if (first_error) throw *first_error;
  out.bit = foasc::reconstruct(*inst, q.aux, answers);
  out.transcript.client_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::optional<Frame> raw_exchange(const Endpoint& ep, const std::vector<std::uint8_t>& bytes, bool half_close,
                                  std::chrono::milliseconds timeout) {
  const auto deadline = Clock::now() + timeout;
  const Fd fd(connect_to(ep, deadline));
  if (fd.get() < 0) return std::nullopt;
  if (send_all(fd.get(), bytes) != Io::Ok) return std::nullopt;
  if (half_close) ::shutdown(fd.get(), SHUT_WR);
  return read_frame(fd.get(), deadline, nullptr).frame;
}

}  // namespace pirlab::sim
