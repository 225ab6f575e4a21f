#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pirlab/algebra/prime_field.hpp"

namespace pirlab::algebra {

// F_{p^e} = F_p[x]/(f). Elements are packed coefficient vectors: the integer
// sum c_0 + c_1 p + ... + c_{e-1} p^{e-1}, so 0 is zero and 1 is one.
class ExtField {
 public:
  // modulus: monic, coefficients low to high, degree e >= 1. Irreducibility is verified.
  ExtField(u64 p, std::vector<u64> modulus);

  // x^2+x+1 for F_4, x^3+x+1 for F_8, otherwise the first irreducible monic in
  // lexicographic order of the lower coefficients.
  static ExtField standard(u64 p, unsigned degree);

  u64 characteristic() const { return base_.modulus(); }
  unsigned degree() const { return degree_; }
  u64 order() const { return order_; }
  const std::vector<u64>& modulus() const { return modulus_; }

  u64 zero() const { return 0; }
  u64 one() const { return 1; }
  u64 x() const;
  bool contains(u64 a) const { return a < order_; }
  u64 from_int(long long v) const { return base_.from_int(v); }
  u64 from_u64(u64 v) const { return base_.from_u64(v); }

  std::vector<u64> to_coeffs(u64 a) const;
  u64 from_coeffs(std::span<const u64> coeffs) const;

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const { return sub(0, a); }
  u64 mul(u64 a, u64 b) const;
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;

  u64 multiplicative_order(u64 a) const;
  u64 find_generator() const;

  std::size_t element_bytes() const { return degree_ * base_.element_bytes(); }

 private:
  PrimeField base_;
  std::vector<u64> modulus_;
  unsigned degree_;
  u64 order_;
};

// True iff the monic polynomial f (coefficients low to high) has no monic factor of
// degree 1..deg(f)/2 over F_p; exhaustive division, intended for tiny p^deg.
bool is_irreducible(const PrimeField& field, std::span<const u64> f);

}  // namespace pirlab::algebra
