#include "pirlab/algebra/int_ring.hpp"

#include <string>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {

IntRing::IntRing(u64 m) : m_(m) {
  if (m < 2 || !is_squarefree(m)) {
    throw PirError(ErrorCode::ParamError, std::to_string(m) + " is not a squarefree modulus >= 2");
  }
  primes_ = distinct_prime_factors(m);
}

std::vector<u64> IntRing::crt_split(u64 x) const {
  std::vector<u64> out;
  out.reserve(primes_.size());
  for (u64 q : primes_) out.push_back(x % q);
  return out;
}

u64 IntRing::crt_combine(std::span<const u64> residues) const {
  if (residues.size() != primes_.size()) {
    throw PirError(ErrorCode::DimensionMismatch, "residue count differs from prime factor count");
  }
  return algebra::crt_combine(residues, primes_);
}

u64 crt_combine(std::span<const u64> residues, std::span<const u64> moduli) {
  if (residues.size() != moduli.size()) {
    throw PirError(ErrorCode::DimensionMismatch, "residues and moduli differ in length");
  }
  u64 x = 0;
  u64 mod = 1;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    const u64 q = moduli[j];
    const u64 r = residues[j] % q;
    // x + mod * s == r (mod q)
    const u64 s = mul_mod(sub_mod(r, x % q, q), inv_mod(mod % q, q), q);
    x += mod * s;
    mod *= q;
  }
  return x;
}

}  // namespace pirlab::algebra
