#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "pirlab/algebra/modarith.hpp"
#include "pirlab/errors.hpp"

namespace pirlab::algebra {

struct MultiIndex {
  std::vector<u64> i;

  u64 weight() const { return std::accumulate(i.begin(), i.end(), u64{0}); }
  bool operator==(const MultiIndex&) const = default;
};

// C(n, k) as an exact integer; throws ParamError if it does not fit in 64 bits.
u64 binomial(u64 n, u64 k);

// All multi-indices of length h with weight < e: grouped by weight, the zero index
// first, then unit indices in coordinate order, then higher weights.
std::vector<MultiIndex> multi_indices_below(std::size_t h, u64 e);

// The i-th Hasse derivative of z -> z^u evaluated at z:
//   prod_j C(u_j, i_j) * z_j^{u_j - i_j},
// with binomials reduced into the field; zero whenever some i_j > u_j.
template <class Field>
u64 hasse_of_monomial(const Field& field, std::span<const u64> u, const MultiIndex& index,
                      std::span<const u64> z) {
  if (u.size() != index.i.size() || u.size() != z.size()) {
    throw PirError(ErrorCode::DimensionMismatch, "exponent, index and point lengths differ");
  }
  u64 acc = field.one();
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (index.i[j] > u[j]) return field.zero();
    const u64 c = field.from_u64(binomial(u[j], index.i[j]) % field.characteristic());
    acc = field.mul(acc, field.mul(c, field.pow(z[j], u[j] - index.i[j])));
    if (acc == field.zero()) return acc;
  }
  return acc;
}

}  // namespace pirlab::algebra
