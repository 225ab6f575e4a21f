#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pirlab/algebra/int_ring.hpp"

namespace pirlab::algebra {

// Coefficients of g^0 .. g^{m-1} over Z_m.
struct GroupRingElement {
  std::vector<u64> coeffs;

  bool operator==(const GroupRingElement&) const = default;
};

// Z_m[g]/(g^m - 1); multiplication is cyclic convolution with coefficients mod m.
class GroupRing {
 public:
  explicit GroupRing(u64 m);

  const IntRing& base() const { return base_; }
  u64 m() const { return base_.modulus(); }

  GroupRingElement zero() const;
  GroupRingElement one() const { return monomial(0); }
  GroupRingElement monomial(u64 exponent, u64 coeff = 1) const;
  GroupRingElement from_scalar(u64 c) const { return monomial(0, c); }

  GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) const;
  GroupRingElement sub(const GroupRingElement& a, const GroupRingElement& b) const;
  GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) const;
  GroupRingElement scale(u64 c, const GroupRingElement& a) const;

  bool is_zero(const GroupRingElement& a) const;

  // Coefficients reduced modulo a prime factor of m.
  std::vector<u64> reduce_mod(const GroupRingElement& a, u64 prime) const;

  // True when every element fits into one 64-bit word (m^m < 2^64).
  bool packable() const { return packable_; }
  u64 pack(const GroupRingElement& a) const;
  GroupRingElement unpack(u64 packed) const;

  // log2 of the ring size: m * log2(m).
  double element_bits() const;
  std::size_t element_bytes() const { return m() * base_.element_bytes(); }

 private:
  IntRing base_;
  bool packable_;
};

}  // namespace pirlab::algebra
