#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pirlab/foasc/instance.hpp"

namespace pirlab::foasc {

inline constexpr std::uint64_t kDefaultOaCap = 1'000'000;

// N x k array with entries in [0, s).
struct OAMatrix {
  std::size_t columns = 0;
  std::vector<std::vector<std::uint64_t>> rows;
};

struct OAResult {
  bool ok = false;
  std::uint64_t index = 0;  // lambda when ok
  // First offending column set and tuple (zero-based columns) when not ok.
  std::vector<std::size_t> columns;
  std::vector<std::uint64_t> tuple;
  std::uint64_t count = 0;
  std::string detail;
};

// Every N x t subarray must contain each of the s^t tuples exactly N / s^t times.
// Throws PirError(CapExceeded) when N exceeds cap.
OAResult oa_strength_check(const OAMatrix& a, std::uint64_t s, std::size_t t,
                           std::uint64_t cap = kDefaultOaCap);

// Q^(i) with level points replaced by dense ids (sorted order of the points that occur).
OAMatrix materialize_oa(const FoascInstance& inst, std::size_t i, std::uint64_t cap = kDefaultOaCap);

}  // namespace pirlab::foasc
