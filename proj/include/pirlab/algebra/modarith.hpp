#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pirlab::algebra {

using u64 = std::uint64_t;

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; throws PirError(NonUnit) when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

u64 gcd(u64 a, u64 b);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

// Prime factors with multiplicity, ascending.
std::vector<u64> factorize(u64 n);

std::vector<u64> distinct_prime_factors(u64 n);

bool is_squarefree(u64 n);

// Number of significant bits; bit_length(0) == 0.
unsigned bit_length(u64 x);

// Serialized width of a value in [0, bound): ceil(bit_length(bound - 1) / 8), at least one byte.
std::size_t bytes_for_bound(u64 bound);

void put_le(u64 value, std::size_t bytes, std::vector<std::uint8_t>& out);
u64 get_le(const std::uint8_t* in, std::size_t bytes);

// Reduces a signed integer into [0, m).
inline u64 reduce_signed(long long v, u64 m) {
  long long r = v % static_cast<long long>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

}  // namespace pirlab::algebra
