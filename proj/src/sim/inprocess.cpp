#include "pirlab/sim/inprocess.hpp"

#include <chrono>
#include <fstream>
#include <iterator>

#include "pirlab/errors.hpp"

namespace pirlab::sim {

using Clock = std::chrono::steady_clock;

Retrieval run_inprocess(const foasc::InstancePtr& inst, const foasc::Database& x, std::size_t i,
                        std::uint64_t seed, const InprocessOptions& opt) {
  const auto start = Clock::now();
  const foasc::Query q = foasc::query_gen(*inst, i, seed);
  Retrieval out;
  std::vector<foasc::RingVec> answers;
  for (std::size_t j = 0; j < inst->k(); ++j) {
    const ServerNode node(j, inst, x);
    Frame request{static_cast<std::uint8_t>(MsgType::Query), {}};
    inst->level_codec().encode(q.queries[j], request.payload);
    const auto wire_in = encode_frame(request);

    const auto t0 = Clock::now();
    const auto decoded = decode_frame(wire_in);
    const auto wire_out = encode_frame(node.handle(*decoded.frame));
    const double served = std::chrono::duration<double>(Clock::now() - t0).count();

    const auto reply = decode_frame(wire_out);
    if (reply.frame->type != static_cast<std::uint8_t>(MsgType::Answer)) {
      throw PirError(ErrorCode::Transport, "server " + std::to_string(j + 1) + " returned an error frame");
    }
    auto a = foasc::decode_ring_vec(inst->ring(), inst->ring_dim(), reply.frame->payload);
    if (!a) throw PirError(ErrorCode::Transport, "undecodable answer from server " + std::to_string(j + 1));
    answers.push_back(std::move(*a));
    out.transcript.servers.push_back(ServerExchange{request.payload.size(), reply.frame->payload.size(),
                                                    kHeaderBytes, kHeaderBytes, served});
  }
  if (opt.mutate_answers) opt.mutate_answers(answers);
  out.bit = foasc::reconstruct(*inst, q.aux, answers);
  out.transcript.client_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (opt.assert_correct && out.bit != x[i]) {
    throw PirError(ErrorCode::InconsistentAnswer, "retrieved bit differs from x_i");
  }
  return out;
}

void write_database(const std::string& path, const foasc::Database& db) {
  std::vector<std::uint8_t> bytes;
  algebra::put_le(db.size(), 8, bytes);
  bytes.resize(8 + (db.size() + 7) / 8, 0);
  for (std::size_t tau = 0; tau < db.size(); ++tau) {
    if (db[tau]) bytes[8 + tau / 8] |= static_cast<std::uint8_t>(1u << (tau % 8));
  }
  std::ofstream f(path, std::ios::binary);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw PirError(ErrorCode::ParamError, "cannot write " + path);
}

foasc::Database read_database(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw PirError(ErrorCode::ParamError, "cannot read " + path);
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(f), {}};
  if (bytes.size() < 8) throw PirError(ErrorCode::ParamError, "database file too short");
  const auto n = algebra::get_le(bytes.data(), 8);
  if (bytes.size() != 8 + (n + 7) / 8) throw PirError(ErrorCode::ParamError, "database length header mismatch");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t tau = 0; tau < n; ++tau) bits[tau] = (bytes[8 + tau / 8] >> (tau % 8)) & 1;
  return foasc::Database(std::move(bits));
}

}  // namespace pirlab::sim
