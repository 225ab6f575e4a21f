#include "pirlab/mv/canonical.hpp"

#include <algorithm>

#include "pirlab/algebra/int_ring.hpp"

namespace pirlab::mv {

std::vector<u64> canonical_set(u64 m) {
  const algebra::IntRing ring(m);
  const auto& primes = ring.prime_factors();
  const std::size_t r = primes.size();
  std::vector<u64> out;
  std::vector<u64> residues(r);
  for (u64 pattern = 1; pattern < (u64{1} << r); ++pattern) {
    for (std::size_t j = 0; j < r; ++j) residues[j] = (pattern >> j) & 1;
    out.push_back(ring.crt_combine(residues));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> canonical_set_with_zero(u64 m) {
  auto s = canonical_set(m);
  s.insert(s.begin(), 0);
  return s;
}

}  // namespace pirlab::mv
