#pragma once

#include <cstddef>
#include <vector>

namespace pirlab::sim {

// Bytes one server exchanged with the client; payload excludes frame headers.
struct ServerExchange {
  std::size_t query_payload = 0;
  std::size_t answer_payload = 0;
  std::size_t query_framing = 0;
  std::size_t answer_framing = 0;
  double seconds = 0;  // answer time in process, round-trip time over TCP
};

struct Transcript {
  std::vector<ServerExchange> servers;
  double client_seconds = 0;

  std::size_t payload_bytes() const {
    std::size_t s = 0;
    for (const auto& x : servers) s += x.query_payload + x.answer_payload;
    return s;
  }
  std::size_t framing_bytes() const {
    std::size_t s = 0;
    for (const auto& x : servers) s += x.query_framing + x.answer_framing;
    return s;
  }
};

}  // namespace pirlab::sim
