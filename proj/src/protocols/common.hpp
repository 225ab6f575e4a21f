#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pirlab/algebra/scalar_ring.hpp"
#include "pirlab/errors.hpp"
#include "pirlab/mv/matching_family.hpp"

namespace pirlab::protocols::detail {

using algebra::u64;

inline std::shared_ptr<const algebra::ScalarRing> prime_ring(u64 p) {
  return std::make_shared<algebra::PrimeFieldRing>(algebra::PrimeField(p));
}

inline std::vector<u64> repeat(u64 value, std::size_t count) { return std::vector<u64>(count, value); }

inline std::string power_name(const std::string& base, std::size_t h) {
  return base + "^" + std::to_string(h);
}

// w + d v over Z_m, componentwise.
inline std::vector<u64> shifted(const std::vector<u64>& w, u64 d, const std::vector<u64>& v, u64 m) {
  std::vector<u64> q(w.size());
  for (std::size_t c = 0; c < w.size(); ++c) q[c] = (w[c] + d % m * v[c]) % m;
  return q;
}

inline void require_family(const mv::MatchingFamily& fam, bool ones_nonzero) {
  if (fam.size() == 0) throw PirError(ErrorCode::ParamError, "empty matching family");
  if (auto err = mv::check_matching_family(fam, ones_nonzero)) {
    throw PirError(ErrorCode::ParamError, "invalid matching family: " + *err);
  }
}

inline std::string vec_text(const std::vector<u64>& v) {
  std::string s = "(";
  for (std::size_t c = 0; c < v.size(); ++c) s += (c ? "," : "") + std::to_string(v[c]);
  return s + ")";
}

inline std::string family_text(const mv::MatchingFamily& fam) {
  std::string s;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    s += (i ? " " : "") + vec_text(fam.u[i]) + "/" + vec_text(fam.v[i]);
  }
  return s;
}

}  // namespace pirlab::protocols::detail
