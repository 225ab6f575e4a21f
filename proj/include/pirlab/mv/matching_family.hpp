#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::mv {

using algebra::u64;
using Vec = std::vector<u64>;

// n pairs (u_i, v_i) in Z_m^h with <u_i, v_i> = 0 and <u_i, v_j> in S for i != j.
struct MatchingFamily {
  u64 m = 0;
  std::size_t h = 0;
  std::vector<Vec> u;
  std::vector<Vec> v;
  std::vector<u64> target;  // S, ascending, subset of Z_m \ {0}

  std::size_t size() const { return u.size(); }
};

u64 inner_mod(const Vec& a, const Vec& b, u64 m);

// Independent checker over all ordered pairs. Returns a description of the first
// violation, or nullopt when valid. With ones_nonzero, also requires <u_i, 1_h> != 0.
std::optional<std::string> check_matching_family(const MatchingFamily& fam,
                                                 bool ones_nonzero = false);

struct FamilySearchOptions {
  bool ones_nonzero = false;  // side condition <u_i, 1_h> != 0
  u64 vector_cap = 1'000'000;  // m^h must not exceed this
  u64 node_budget = 50'000'000;
};

// Deterministic backtracking search: pairs are tried in lexicographic order of
// (u, v) and each new pair must follow the previous one. Throws Exhausted when no
// family of size n_target exists in the search space, BudgetExceeded when the node
// budget runs out, ParamError when m^h exceeds the cap.
MatchingFamily search_matching_family(u64 m, std::size_t h, const std::vector<u64>& target,
                                      std::size_t n_target, const FamilySearchOptions& opt = {});

}  // namespace pirlab::mv
