#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pirlab/foasc/engine.hpp"
#include "pirlab/sim/node.hpp"
#include "pirlab/sim/transcript.hpp"

namespace pirlab::sim {

struct Retrieval {
  int bit = 0;
  Transcript transcript;
};

struct InprocessOptions {
  bool assert_correct = false;  // throw InconsistentAnswer if the bit differs from x_i
  // Applied to the decoded answers before reconstruction (negative controls).
  std::function<void(std::vector<foasc::RingVec>&)> mutate_answers;
};

// Queries, k framed server calls, reconstruction. Frames are encoded and decoded exactly as
// on the wire so the transcript byte counts match the TCP transport.
Retrieval run_inprocess(const foasc::InstancePtr& inst, const foasc::Database& x, std::size_t i,
                        std::uint64_t seed, const InprocessOptions& opt = {});

// Database file: u64 LE length n, then ceil(n/8) bytes, bit tau at byte tau/8, bit tau%8.
void write_database(const std::string& path, const foasc::Database& db);
foasc::Database read_database(const std::string& path);

}  // namespace pirlab::sim
