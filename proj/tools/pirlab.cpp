// Command-line front end: params, verify, serve, get, bench, gen-db.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pirlab/errors.hpp"
#include "pirlab/foasc/engine.hpp"
#include "pirlab/mv/kr_table.hpp"
#include "pirlab/registry.hpp"
#include "pirlab/sim/bench.hpp"
#include "pirlab/sim/inprocess.hpp"
#include "pirlab/sim/tcp.hpp"
#include "pirlab/verify/suites.hpp"

namespace {

using namespace pirlab;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kTransport = 3 };

const std::vector<std::string> kParamKeys = {"n", "t", "k", "p", "m", "h", "r", "points", "budget"};

struct Common {
  std::string protocol;
  std::string config;
  std::string out;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> flags;  // parameter flags given on the command line
};

void add_common(CLI::App* cmd, Common& c, bool positional_protocol) {
  cmd->add_option(positional_protocol ? "protocol,--protocol" : "--protocol", c.protocol, "protocol name");
  cmd->add_option("--config", c.config, "key = value file; flags override it");
  cmd->add_option("--seed", c.seed, "64-bit seed for all randomness");
  cmd->add_option("--out", c.out, "also write the key-value report here");
  for (const auto& key : kParamKeys) {
    cmd->add_option_function<std::string>("--" + key, [&c, key](const std::string& v) { c.flags[key] = v; },
                                          "protocol parameter " + key);
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Config keys fill anything not given as a flag; "protocol" and "seed" are accepted too.
void merge_config(Common& c) {
  if (c.config.empty()) return;
  std::ifstream f(c.config);
  if (!f) throw PirError(ErrorCode::ParamError, "cannot read config " + c.config);
  std::string line;
  while (std::getline(f, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PirError(ErrorCode::ParamError, "config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "protocol") {
      if (c.protocol.empty()) c.protocol = value;
    } else if (key == "seed") {
      c.seed = std::stoull(value);
    } else if (std::find(kParamKeys.begin(), kParamKeys.end(), key) != kParamKeys.end()) {
      c.flags.emplace(key, value);
    } else {
      throw PirError(ErrorCode::ParamError, "unknown config key '" + key + "'");
    }
  }
}

Params instance_params(const Common& c) {
  if (c.protocol.empty()) throw PirError(ErrorCode::ParamError, "no protocol given");
  Params p;
  const auto keys = protocol_keys(c.protocol);
  for (const auto& [key, value] : c.flags) {
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) p[key] = value;
    else throw PirError(ErrorCode::ParamError, "protocol " + c.protocol + " does not take --" + key);
  }
  return p;
}

void write_out(const Common& c, const std::string& kv) {
  if (c.out.empty()) return;
  std::ofstream f(c.out);
  f << kv;
  if (!f) throw PirError(ErrorCode::ParamError, "cannot write " + c.out);
}

int cmd_params(Common& c) {
  merge_config(c);
  if (c.protocol == "kr") {
    auto it = c.flags.find("r");
    if (it == c.flags.end()) throw PirError(ErrorCode::ParamError, "kr needs --r");
    const auto r = static_cast<unsigned>(std::stoul(it->second));
    const std::string v = mv::k_r_table(r).str();
    std::cout << "r = " << r << "\nk_r = " << v << "\n";
    write_out(c, "r = " + std::to_string(r) + "\nk_r = " + v + "\n");
    return kOk;
  }
  const auto b = build_instance(c.protocol, instance_params(c));
  auto rep = b.inst->report();
  rep.set("formula", b.formula);
  rep.set("formula_value_bits", foasc::format_bits(b.predicted_bits));
  for (const auto& [k, v] : b.provenance) rep.set("provenance_" + k, v);
  rep.set("digest", std::to_string(b.inst->digest()));
  std::cout << rep.to_table();
  write_out(c, rep.to_kv());
  return kOk;
}

int cmd_verify(Common& c, const std::string& suite, bool unit_basis) {
  merge_config(c);
  const auto b = build_instance(c.protocol, instance_params(c));
  const auto& inst = *b.inst;
  const bool all = suite == "all";
  if (!all && suite != "correctness" && suite != "privacy" && suite != "oa" && suite != "span" && suite != "comm") {
    throw PirError(ErrorCode::ParamError, "unknown suite '" + suite + "'");
  }
  bool ok = true;
  std::string kv;
  auto emit = [&](const std::string& text, bool pass, const std::string& extra_kv) {
    std::cout << text;
    ok = ok && pass;
    kv += extra_kv;
  };
  if (all || suite == "span") {
    const auto r = verify::span_sweep(inst);
    emit(r.to_text(), r.pass(), "span = " + std::string(r.pass() ? "pass" : "fail") + "\n");
  }
  if (all || suite == "correctness") {
    verify::CorrectnessOptions opt;
    opt.unit_basis = unit_basis;
    const auto r = verify::exhaustive_correctness(inst, opt);
    emit(r.to_text(), r.pass(), r.to_kv().to_kv());
  }
  if ((all || suite == "privacy") && inst.k() > inst.t()) {
    const auto r = verify::exhaustive_privacy(inst, inst.t());
    emit(r.to_text(), r.pass(), r.to_kv().to_kv());
  }
  if (all || suite == "oa") {
    const auto r = verify::oa_family_check(inst);
    emit(r.to_text(), r.pass(), "oa = " + std::string(r.pass() ? "pass" : "fail") + "\n");
  }
  if (all || suite == "comm") {
    const auto x = foasc::Database::zeros(inst.n());
    const auto run = sim::run_inprocess(b.inst, x, 0, c.seed);
    const auto r = verify::comm_audit(inst, run.transcript);
    emit(r.to_text(), r.pass(), "comm = " + std::string(r.pass() ? "pass" : "fail") + "\n");
  }
  std::cout << "verdict " << (ok ? "PASS" : "FAIL") << "\n";
  write_out(c, kv + "verdict = " + (ok ? "pass" : "fail") + "\n");
  return ok ? kOk : kFail;
}

int cmd_serve(Common& c, std::size_t id, const std::string& db_path, std::uint16_t port, const std::string& host) {
  merge_config(c);
  const auto b = build_instance(c.protocol, instance_params(c));
  if (id < 1 || id > b.inst->k()) throw PirError(ErrorCode::ParamError, "--id must lie in 1.." + std::to_string(b.inst->k()));
  sim::TcpServer server(sim::ServerNode(id - 1, b.inst, sim::read_database(db_path)), port, host);
  server.start();
  std::cout << "serving " << c.protocol << " server " << id << " of " << b.inst->k() << " on " << host << ":"
            << server.port() << " digest " << b.inst->digest() << std::endl;
  server.wait();
  return kOk;
}

int cmd_get(Common& c, std::size_t index, const std::string& servers, unsigned timeout_ms, bool timing) {
  merge_config(c);
  const auto b = build_instance(c.protocol, instance_params(c));
  std::vector<sim::Endpoint> eps;
  std::stringstream ss(servers);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) eps.push_back(sim::parse_endpoint(item));
  }
  if (eps.size() != b.inst->k()) {
    throw PirError(ErrorCode::ParamError, c.protocol + " needs exactly k = " + std::to_string(b.inst->k()) +
                                              " servers, got " + std::to_string(eps.size()));
  }
  if (index < 1 || index > b.inst->n()) throw PirError(ErrorCode::ParamError, "--index must lie in 1.." + std::to_string(b.inst->n()));
  const auto r = sim::client_retrieve(eps, b.inst, index - 1, c.seed, {std::chrono::milliseconds(timeout_ms)});
  std::cout << "x_" << index << " = " << r.bit << "\n";
  for (std::size_t j = 0; j < r.transcript.servers.size(); ++j) {
    const auto& s = r.transcript.servers[j];
    std::cout << "server " << j + 1 << ": query " << s.query_payload << " B, answer " << s.answer_payload
              << " B, framing " << s.query_framing + s.answer_framing << " B";
    if (timing) std::cout << ", rtt " << s.seconds * 1e3 << " ms";
    std::cout << "\n";
  }
  std::cout << "payload " << r.transcript.payload_bytes() << " B, raw "
            << foasc::format_bits(foasc::comm_cost(*b.inst).total_bits) << " bits\n";
  write_out(c, "index = " + std::to_string(index) + "\nbit = " + std::to_string(r.bit) + "\npayload_bytes = " +
                   std::to_string(r.transcript.payload_bytes()) + "\n");
  return kOk;
}

int cmd_bench(Common& c, std::size_t trials) {
  merge_config(c);
  auto it = c.flags.find("n");
  std::vector<std::size_t> ns;
  if (it != c.flags.end()) {
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(std::stoul(item));
  }
  if (ns.empty()) throw PirError(ErrorCode::ParamError, "bench needs --n with a comma-separated list");
  Common per = c;
  std::string formula;
  auto build = [&](std::size_t n) {
    per.flags["n"] = std::to_string(n);
    auto b = build_instance(c.protocol, instance_params(per));
    formula = b.formula;
    return b;
  };
  const auto rows = sim::bench(build, ns, trials, c.seed);
  const auto table = sim::bench_table(c.protocol, formula, rows);
  std::cout << table;
  write_out(c, table);
  return kOk;
}

int cmd_gen_db(std::size_t n, std::uint64_t seed, const std::string& path) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  const foasc::Database db(std::move(bits));
  sim::write_database(path, db);
  for (std::size_t i = 0; i < n; ++i) std::cout << int(db[i]);
  std::cout << "\n";
  return kOk;
}

int exit_for(const PirError& e) {
  switch (e.code()) {
    case ErrorCode::Timeout:
    case ErrorCode::Transport:
    case ErrorCode::ParamDigestMismatch:
      return kTransport;
    case ErrorCode::InconsistentAnswer:
      return kFail;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IT-PIR laboratory"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  Common c;
  auto* params = app.add_subcommand("params", "print the parameter report (or 'kr --r R')");
  add_common(params, c, true);

  auto* verify_cmd = app.add_subcommand("verify", "run exhaustive verification suites");
  add_common(verify_cmd, c, true);
  std::string suite = "all";
  bool unit_basis = false;
  verify_cmd->add_option("--suite", suite, "all|correctness|privacy|oa|span|comm");
  verify_cmd->add_flag("--unit-basis", unit_basis, "correctness on x = 0 and the unit databases only");

  auto* serve = app.add_subcommand("serve", "run one server over TCP");
  add_common(serve, c, false);
  std::size_t id = 0;
  std::string db_path, host = "127.0.0.1";
  std::uint16_t port = 0;
  serve->add_option("--id", id, "server position 1..k")->required();
  serve->add_option("--db", db_path, "database file")->required();
  serve->add_option("--port", port, "TCP port")->required();
  serve->add_option("--host", host, "IPv4 bind address");

  auto* get = app.add_subcommand("get", "retrieve one bit from k servers");
  add_common(get, c, false);
  std::size_t index = 0;
  std::string servers;
  unsigned timeout_ms = 5000;
  bool timing = false;
  get->add_option("--index", index, "1-based index")->required();
  get->add_option("--servers", servers, "comma-separated host:port list, one per server")->required();
  get->add_option("--timeout-ms", timeout_ms, "per-server timeout");
  get->add_flag("--timing", timing, "print round-trip times");

  auto* bench_cmd = app.add_subcommand("bench", "communication and timing table over n");
  add_common(bench_cmd, c, false);
  std::size_t trials = 5;
  bench_cmd->add_option("--trials", trials, "retrievals per n");

  auto* gen = app.add_subcommand("gen-db", "write a random database file");
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "length")->required();
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--out", gen_out, "path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(c);
    if (*verify_cmd) return cmd_verify(c, suite, unit_basis);
    if (*serve) return cmd_serve(c, id, db_path, port, host);
    if (*get) return cmd_get(c, index, servers, timeout_ms, timing);
    if (*bench_cmd) return cmd_bench(c, trials);
    if (*gen) return cmd_gen_db(gen_n, gen_seed, gen_out);
  } catch (const PirError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
