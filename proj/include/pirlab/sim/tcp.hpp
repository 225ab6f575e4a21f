#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pirlab/sim/inprocess.hpp"
#include "pirlab/sim/node.hpp"

namespace pirlab::sim {

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;

  std::string to_string() const { return host + ":" + std::to_string(port); }
};

// "host:port" or ":port" (loopback). Throws ParamError.
Endpoint parse_endpoint(const std::string& text);

// Thread per connection; every request is answered from the immutable node.
class TcpServer {
 public:
  // port 0 binds an ephemeral port; see port().
  TcpServer(ServerNode node, std::uint16_t port, std::string bind_host = "127.0.0.1");
  ~TcpServer();
  TcpServer(const TcpServer&) = delete;
  TcpServer& operator=(const TcpServer&) = delete;

  std::uint16_t port() const { return port_; }
  void start();
  void stop();
  // Blocks until stop() is called from another thread.
  void wait();

 private:
  void accept_loop();
  void serve_connection(int fd);

  ServerNode node_;
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::atomic<bool> stopping_{false};
  std::thread acceptor_;
  std::mutex mu_;
  std::vector<std::thread> workers_;
};

struct ClientOptions {
  std::chrono::milliseconds timeout{5000};
};

// Sends q_j to endpoint j concurrently after a HELLO/CONFIG digest check. Throws
// Timeout naming the server, ParamDigestMismatch, or Transport.
Retrieval client_retrieve(const std::vector<Endpoint>& endpoints, const foasc::InstancePtr& inst, std::size_t i,
                          std::uint64_t seed, const ClientOptions& opt = {});

// Writes raw bytes, optionally half-closes, and reads one reply frame.
std::optional<Frame> raw_exchange(const Endpoint& ep, const std::vector<std::uint8_t>& bytes, bool half_close,
                                  std::chrono::milliseconds timeout = std::chrono::milliseconds(5000));

}  // namespace pirlab::sim
