#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pirlab/registry.hpp"

namespace pirlab::sim {

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  double raw_bits = 0;        // k (log|S| + log|R|)
  double predicted_bits = 0;  // protocol closed form
  std::size_t payload_bytes = 0;
  std::size_t framing_bytes = 0;
  double lower_bound_bits = 0;  // k^2/(k-1) log n; 0 when k = 1
  double server_us = 0;         // mean per answer
  double client_us = 0;         // mean per retrieval
  bool sizes_constant = true;   // identical payload across trials and databases
};

// One in-process retrieval per trial on a random database and index, for each n.
std::vector<BenchRow> bench(const std::function<BuiltInstance(std::size_t n)>& build,
                            const std::vector<std::size_t>& n_values, std::size_t trials, std::uint64_t seed);

std::string bench_table(const std::string& protocol, const std::string& formula, const std::vector<BenchRow>& rows);

}  // namespace pirlab::sim
