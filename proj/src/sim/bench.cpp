#include "pirlab/sim/bench.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "pirlab/foasc/engine.hpp"
#include "pirlab/foasc/report.hpp"
#include "pirlab/sim/inprocess.hpp"

namespace pirlab::sim {

std::vector<BenchRow> bench(const std::function<BuiltInstance(std::size_t n)>& build,
                            const std::vector<std::size_t>& n_values, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (std::size_t n : n_values) {
    const BuiltInstance b = build(n);
    const auto& inst = b.inst;
    BenchRow row;
    row.n = inst->n();
    row.k = inst->k();
    row.raw_bits = foasc::comm_cost(*inst).total_bits;
    row.predicted_bits = b.predicted_bits;
    if (row.k > 1) {
      const double k = static_cast<double>(row.k);
      row.lower_bound_bits = k * k / (k - 1) * std::log2(static_cast<double>(row.n));
    }
    double server = 0, client = 0;
    for (std::size_t trial = 0; trial < std::max<std::size_t>(trials, 1); ++trial) {
      std::vector<std::uint8_t> bits(inst->n());
      for (auto& bit : bits) bit = static_cast<std::uint8_t>(rng() & 1);
      const foasc::Database x(std::move(bits));
      const std::size_t i = foasc::uniform_below(rng, inst->n());
      const auto r = run_inprocess(inst, x, i, rng(), {true, {}});
      if (trial == 0) {
        row.payload_bytes = r.transcript.payload_bytes();
        row.framing_bytes = r.transcript.framing_bytes();
      } else if (row.payload_bytes != r.transcript.payload_bytes()) {
        row.sizes_constant = false;
      }
      for (const auto& s : r.transcript.servers) server += s.seconds;
      client += r.transcript.client_seconds;
    }
    const double t = static_cast<double>(std::max<std::size_t>(trials, 1));
    row.server_us = server / (t * static_cast<double>(row.k)) * 1e6;
    row.client_us = client / t * 1e6;
    rows.push_back(row);
  }
  return rows;
}

std::string bench_table(const std::string& protocol, const std::string& formula, const std::vector<BenchRow>& rows) {
  std::string out = "# protocol " + protocol + ", prediction " + formula + "\n";
  out += "n\tk\traw_bits\tpredicted_bits\tpayload_bytes\tpayload_bits\tframing_bytes\tlower_bound_bits\tserver_us\tclient_us\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu\t%zu\t%s\t%s\t%zu\t%zu\t%zu\t%s\t%.1f\t%.1f\n", r.n, r.k,
                  foasc::format_bits(r.raw_bits).c_str(), foasc::format_bits(r.predicted_bits).c_str(), r.payload_bytes,
                  8 * r.payload_bytes, r.framing_bytes, foasc::format_bits(r.lower_bound_bits).c_str(), r.server_us,
                  r.client_us);
    out += buf;
  }
  return out;
}

}  // namespace pirlab::sim
