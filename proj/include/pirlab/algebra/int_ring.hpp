#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::algebra {

// Z_m for squarefree m, with its CRT decomposition into prime fields.
class IntRing {
 public:
  explicit IntRing(u64 m);

  u64 modulus() const { return m_; }
  const std::vector<u64>& prime_factors() const { return primes_; }

  u64 zero() const { return 0; }
  u64 one() const { return 1 % m_; }
  bool contains(u64 a) const { return a < m_; }
  u64 from_int(long long v) const { return reduce_signed(v, m_); }
  u64 from_u64(u64 v) const { return v % m_; }

  u64 add(u64 a, u64 b) const { return add_mod(a, b, m_); }
  u64 sub(u64 a, u64 b) const { return sub_mod(a, b, m_); }
  u64 neg(u64 a) const { return a == 0 ? 0 : m_ - a; }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, m_); }
  u64 pow(u64 a, u64 e) const { return pow_mod(a, e, m_); }
  u64 inv(u64 a) const { return inv_mod(a, m_); }

  // (x mod p_1, ..., x mod p_r) in prime_factors() order.
  std::vector<u64> crt_split(u64 x) const;
  u64 crt_combine(std::span<const u64> residues) const;

  std::size_t element_bytes() const { return bytes_for_bound(m_); }

 private:
  u64 m_;
  std::vector<u64> primes_;
};

// CRT for pairwise coprime moduli; the result lies in [0, prod(moduli)).
u64 crt_combine(std::span<const u64> residues, std::span<const u64> moduli);

}  // namespace pirlab::algebra
