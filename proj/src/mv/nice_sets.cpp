#include "pirlab/mv/nice_sets.hpp"

#include <algorithm>

#include "pirlab/algebra/ext_field.hpp"
#include "pirlab/algebra/linalg.hpp"
#include "pirlab/errors.hpp"

namespace pirlab::mv {

std::vector<u64> powers_of_two(u64 p) {
  std::vector<u64> out;
  for (u64 x = 1 % p; std::find(out.begin(), out.end(), x) == out.end(); x = 2 * x % p) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> check_nice_sets(const NiceSets& ns) {
  if (ns.s0.empty()) return "S_0 is empty";
  std::vector<bool> in0(ns.p, false);
  for (u64 x : ns.s0) {
    if (x >= ns.p) return "S_0 not inside F_p";
    in0[x] = true;
  }
  for (u64 sigma = 0; sigma < ns.p; ++sigma) {
    for (u64 delta : powers_of_two(ns.p)) {
      unsigned hits = 0;
      for (u64 s : ns.s1) hits += in0[(sigma + delta * s) % ns.p];
      if (hits % 2 != 0) {
        return "|S_0 cap (" + std::to_string(sigma) + " + " + std::to_string(delta) + " S_1)| is odd";
      }
    }
  }
  return std::nullopt;
}

NiceSets yekhanin_nice_sets(unsigned r) {
  if (r < 2 || r > 20) throw PirError(ErrorCode::ParamError, "r out of range");
  const u64 p = (u64{1} << r) - 1;
  if (!algebra::is_prime(p)) throw PirError(ErrorCode::ParamError, "2^r - 1 is not prime");

  const auto field = algebra::ExtField::standard(2, r);
  const u64 g = field.x();
  const u64 target = field.add(field.one(), g);  // g^gamma = 1 + g in characteristic 2
  NiceSets ns;
  ns.p = p;
  ns.r = r;
  for (u64 e = 1; e < p; ++e) {
    if (field.pow(g, e) == target) {
      ns.gamma = e;
      break;
    }
  }
  if (ns.gamma == 0) throw PirError(ErrorCode::NiceSetError, "no gamma with 1 + g + g^gamma = 0");
  ns.s1 = {0, 1, ns.gamma};

  // Rows: incidence vectors of sigma + delta S_1; S_0 is the support of a dual vector.
  const algebra::PrimeField f2(2);
  algebra::Matrix rows;
  for (u64 sigma = 0; sigma < p; ++sigma) {
    for (u64 delta : powers_of_two(p)) {
      std::vector<u64> row(p, 0);
      for (u64 s : ns.s1) row[(sigma + delta * s) % p] ^= 1;
      rows.push_back(row);
    }
  }
  const auto dual = algebra::nullspace(f2, rows, p);
  if (dual.empty()) throw PirError(ErrorCode::NoNiceS0, "L^perp is trivial");
  for (u64 x = 0; x < p; ++x) {
    if (dual.front()[x] != 0) ns.s0.push_back(x);
  }
  if (auto err = check_nice_sets(ns)) throw PirError(ErrorCode::NiceSetError, *err);
  return ns;
}

}  // namespace pirlab::mv
