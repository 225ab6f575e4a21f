#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::mv {

using algebra::u64;

// Subsets of F_p, p = 2^r - 1 prime, for the 3-server construction over F_2.
struct NiceSets {
  u64 p = 0;
  unsigned r = 0;
  u64 gamma = 0;           // 1 + g + g^gamma = 0 in F_{2^r}, g = x
  std::vector<u64> s0;     // ascending
  std::vector<u64> s1;     // {0, 1, gamma}
};

// The subgroup <2> of F_p^*: {1, 2, 4, ..., 2^{r-1}}, ascending.
std::vector<u64> powers_of_two(u64 p);

// Requires |S_0| > 0 and |S_0 cap (sigma + delta S_1)| even for all sigma in F_p and
// delta in <2>.
std::optional<std::string> check_nice_sets(const NiceSets& ns);

// Throws ParamError unless p = 2^r - 1 is prime, NiceSetError if gamma is not found,
// NoNiceS0 if the dual of the span of the translates is trivial.
NiceSets yekhanin_nice_sets(unsigned r);

}  // namespace pirlab::mv
