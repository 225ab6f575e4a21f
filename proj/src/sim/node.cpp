#include "pirlab/sim/node.hpp"

#include "pirlab/errors.hpp"
#include "pirlab/foasc/engine.hpp"

namespace pirlab::sim {

ServerNode::ServerNode(std::size_t server_id, foasc::InstancePtr inst, foasc::Database db)
    : id_(server_id), inst_(std::move(inst)), db_(std::move(db)) {
  if (db_.size() != inst_->n()) throw PirError(ErrorCode::DimensionMismatch, "database length differs from n");
  if (server_id >= inst_->k()) throw PirError(ErrorCode::ParamError, "server id out of range");
}

Frame ServerNode::handle(const Frame& request) const {
  switch (request.type) {
    case static_cast<std::uint8_t>(MsgType::Query):
      try {
        return Frame{static_cast<std::uint8_t>(MsgType::Answer), foasc::answer_encoded(*inst_, db_, request.payload)};
      } catch (const PirError& e) {
        return error_frame(WireError::Malformed, e.what());
      }
    case static_cast<std::uint8_t>(MsgType::Hello):
      if (request.payload.size() >= 8) {
        const auto theirs = algebra::get_le(request.payload.data(), 8);
        if (theirs != inst_->digest()) return error_frame(WireError::DigestMismatch, "parameter digest mismatch");
      }
      return Frame{static_cast<std::uint8_t>(MsgType::Config), config_payload(*inst_, id_)};
    default:
      if (!known_type(request.type)) return error_frame(WireError::UnknownType, "unknown message type");
      return error_frame(WireError::Unexpected, "unexpected message type");
  }
}

std::vector<std::uint8_t> config_payload(const foasc::FoascInstance& inst, std::size_t server_id) {
  std::vector<std::uint8_t> out;
  algebra::put_le(inst.digest(), 8, out);
  out.push_back(static_cast<std::uint8_t>(server_id));
  out.insert(out.end(), inst.protocol_id().begin(), inst.protocol_id().end());
  return out;
}

std::optional<ConfigInfo> parse_config(std::span<const std::uint8_t> payload) {
  if (payload.size() < 9) return std::nullopt;
  return ConfigInfo{algebra::get_le(payload.data(), 8), payload[8], std::string(payload.begin() + 9, payload.end())};
}

}  // namespace pirlab::sim
