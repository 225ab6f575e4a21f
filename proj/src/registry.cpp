#include "pirlab/registry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pirlab/algebra/prime_field.hpp"
#include "pirlab/errors.hpp"
#include "pirlab/foasc/report.hpp"
#include "pirlab/foasc/toy_instances.hpp"
#include "pirlab/mv/canonical.hpp"
#include "pirlab/protocols/protocols.hpp"

namespace pirlab {

using algebra::u64;

namespace {

struct Reader {
  const Params& params;

  u64 get(const std::string& key, u64 fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
      std::size_t used = 0;
      const auto v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw PirError(ErrorCode::ParamError, "parameter " + key + " must be a nonnegative integer");
    }
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }

  std::vector<u64> list(const std::string& key, std::vector<u64> fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::vector<u64> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Reader{{{key, item}}}.get(key, 0));
    return out;
  }
};

double lg(double x) { return std::log2(x); }

mv::MatchingFamily family_for(u64 m, std::size_t h, const std::vector<u64>& target, std::size_t n, bool ones,
                              BuiltInstance& b, u64 budget) {
  mv::FamilySearchOptions opt;
  opt.ones_nonzero = ones;
  opt.node_budget = budget;
  auto fam = mv::search_matching_family(m, h, target, n, opt);
  b.provenance.emplace_back("family", "backtracking search, " + std::to_string(fam.size()) + " pairs in Z_" +
                                          std::to_string(m) + "^" + std::to_string(h));
  return fam;
}

}  // namespace

const std::vector<std::string>& protocol_names() {
  static const std::vector<std::string> names = {"cgks",       "lagrange",  "wy-hermite", "yekhanin",
                                                 "raghavendra", "efremenko", "dvir-gopi",  "gks",
                                                 "toy-f3",    "trivial",   "broken-demo"};
  return names;
}

std::vector<std::string> protocol_keys(const std::string& protocol) {
  if (protocol == "cgks") return {"n"};
  if (protocol == "lagrange" || protocol == "wy-hermite") return {"n", "t", "k", "p"};
  if (protocol == "yekhanin" || protocol == "raghavendra") return {"n", "r", "h", "budget"};
  if (protocol == "efremenko") return {"n", "m", "p", "h", "k", "budget"};
  if (protocol == "dvir-gopi") return {"n", "m", "h", "budget"};
  if (protocol == "gks") return {"n", "m", "p", "h", "points", "budget"};
  if (protocol == "toy-f3" || protocol == "trivial" || protocol == "broken-demo") return {};
  throw PirError(ErrorCode::ParamError, "unknown protocol '" + protocol + "'");
}

BuiltInstance build_instance(const std::string& protocol, const Params& params) {
  for (const auto& [key, value] : params) {
    const auto keys = protocol_keys(protocol);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw PirError(ErrorCode::ParamError, "protocol " + protocol + " does not take parameter '" + key + "'");
    }
  }
  const Reader r{params};
  BuiltInstance b;
  const u64 budget = r.get("budget", 50'000'000);

  if (protocol == "cgks") {
    b.inst = protocols::build_cgks(r.get("n", 8));
    const double h = static_cast<double>(protocols::cgks_side(b.inst->n()));
    b.predicted_bits = 12 * h + 2;
    b.formula = "12h+2";
  } else if (protocol == "lagrange") {
    b.inst = protocols::build_lagrange(r.get("n", 3), r.get("t", 1), r.get("k", 3), r.get("p", 5));
    const double h = std::stod(*b.inst->report().get("h"));
    b.predicted_bits = static_cast<double>(b.inst->k()) * (h + 1) * lg(static_cast<double>(r.get("p", 5)));
    b.formula = "k(h+1)log p";
  } else if (protocol == "wy-hermite") {
    b.inst = protocols::build_wy_hermite(r.get("n", 4), r.get("t", 1), r.get("k", 2), r.get("p", 7));
    const double h = std::stod(*b.inst->report().get("h"));
    b.predicted_bits = static_cast<double>(b.inst->k()) * (2 * h + 1) * lg(static_cast<double>(r.get("p", 7)));
    b.formula = "k(2h+1)log p";
  } else if (protocol == "yekhanin" || protocol == "raghavendra") {
    const auto rr = static_cast<unsigned>(r.get("r", 3));
    const u64 p = (u64{1} << rr) - 1;
    const std::size_t h = r.get("h", 3);
    const auto fam = family_for(p, h, mv::powers_of_two(p), r.get("n", 4), true, b, budget);
    const double hp = static_cast<double>(h) * lg(static_cast<double>(p));
    if (protocol == "yekhanin") {
      b.inst = protocols::build_yekhanin(fam, mv::yekhanin_nice_sets(rr));
      b.predicted_bits = 3 * (hp + static_cast<double>(p));
      b.formula = "3(h log p + p)";
    } else {
      b.inst = protocols::build_raghavendra(fam, rr);
      b.predicted_bits = 3 * (hp + rr);
      b.formula = "3(h log p + r)";
    }
  } else if (protocol == "efremenko") {
    const u64 m = r.get("m", 6);
    const u64 p = r.get("p", m == 6 ? 7 : mv::prime_one_mod(m));
    const std::size_t h = r.get("h", 3);
    const algebra::PrimeField f(p);
    const u64 g = f.find_order_element(m);
    const u64 k_req = r.get("k", 0);
    const bool sparse = k_req != 0 && k_req < (u64{1} << algebra::distinct_prime_factors(m).size());
    const auto poly = sparse ? mv::sparse_decoding_poly_search(m, p, g, k_req) : mv::trivial_decoding_poly(m, p, g);
    b.provenance.emplace_back("decoding_poly", sparse ? "sparse search" : "trivial product");
    const auto fam = family_for(m, h, mv::canonical_set(m), r.get("n", 4), false, b, budget);
    b.inst = protocols::build_efremenko(fam, poly);
    b.predicted_bits = static_cast<double>(b.inst->k()) * (static_cast<double>(h) * lg(static_cast<double>(m)) + lg(static_cast<double>(p)));
    b.formula = "k(h log m + log p)";
  } else if (protocol == "dvir-gopi") {
    const u64 m = r.get("m", 6);
    const std::size_t h = r.get("h", 3);
    const auto fam = family_for(m, h, mv::canonical_set(m), r.get("n", 4), false, b, budget);
    b.inst = protocols::build_dvir_gopi(fam);
    const double lm = lg(static_cast<double>(m));
    b.predicted_bits = static_cast<double>(b.inst->k()) * (static_cast<double>(h) * lm + static_cast<double>(h + 1) * static_cast<double>(m) * lm);
    b.formula = "k(h log m + (h+1) m log m)";
  } else if (protocol == "gks") {
    const u64 m = r.get("m", 2), p = r.get("p", 3);
    const std::size_t h = r.get("h", 3);
    const auto fam = family_for(m * p, h, mv::canonical_set(m * p), r.get("n", 4), false, b, budget);
    b.inst = protocols::build_gks(m, p, fam, r.list("points", {1, 2}));
    b.predicted_bits = static_cast<double>(b.inst->k()) * (static_cast<double>(h) * lg(static_cast<double>(m)) + static_cast<double>(h + 1) * lg(static_cast<double>(p)));
    b.formula = "k(h log m + (h+1) log p)";
  } else if (protocol == "toy-f3") {
    b.inst = foasc::make_toy_f3();
    b.predicted_bits = 2 * 3 * lg(3);
    b.formula = "k(2 log 3 + log 3)";
  } else if (protocol == "trivial") {
    b.inst = foasc::make_trivial();
    b.predicted_bits = 2;
    b.formula = "log 2 + log 2";
  } else if (protocol == "broken-demo") {
    b.inst = foasc::make_broken(foasc::Defect::Both);
    b.predicted_bits = 2 * 3 * lg(3);
    b.formula = "k(2 log 3 + log 3)";
  } else {
    protocol_keys(protocol);  // throws
  }
  return b;
}

}  // namespace pirlab
