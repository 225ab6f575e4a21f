#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pirlab/foasc/instance.hpp"
#include "pirlab/foasc/types.hpp"
#include "pirlab/sim/frame.hpp"

namespace pirlab::sim {

// One server: public parameters and the database, nothing about the user's index.
class ServerNode {
 public:
  ServerNode(std::size_t server_id, foasc::InstancePtr inst, foasc::Database db);

  std::size_t id() const { return id_; }
  const foasc::FoascInstance& instance() const { return *inst_; }
  const foasc::Database& database() const { return db_; }

  // QUERY -> ANSWER, HELLO -> CONFIG, anything else -> ERROR.
  Frame handle(const Frame& request) const;

 private:
  std::size_t id_;
  foasc::InstancePtr inst_;
  foasc::Database db_;
};

// CONFIG payload: u64 LE digest, u8 server id, protocol id bytes.
std::vector<std::uint8_t> config_payload(const foasc::FoascInstance& inst, std::size_t server_id);

struct ConfigInfo {
  std::uint64_t digest = 0;
  std::size_t server_id = 0;
  std::string protocol;
};

std::optional<ConfigInfo> parse_config(std::span<const std::uint8_t> payload);

}  // namespace pirlab::sim
