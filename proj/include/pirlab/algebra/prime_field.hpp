#pragma once

#include <cstddef>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::algebra {

// F_p for a prime p that fits in 64 bits. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }
  u64 characteristic() const { return p_; }
  u64 order() const { return p_; }

  u64 zero() const { return 0; }
  u64 one() const { return 1 % p_; }
  bool contains(u64 a) const { return a < p_; }

  u64 from_int(long long v) const { return reduce_signed(v, p_); }
  u64 from_u64(u64 v) const { return v % p_; }

  u64 add(u64 a, u64 b) const { return add_mod(a, b, p_); }
  u64 sub(u64 a, u64 b) const { return sub_mod(a, b, p_); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
  u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p_); }
  // Throws PirError(NonUnit) for a == 0.
  u64 inv(u64 a) const { return inv_mod(a, p_); }
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

  u64 multiplicative_order(u64 a) const;

  // Element of multiplicative order exactly m; throws NoSuchElement unless m | p - 1.
  u64 find_order_element(u64 m) const;

  std::size_t element_bytes() const { return bytes_for_bound(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  u64 p_;
};

}  // namespace pirlab::algebra
