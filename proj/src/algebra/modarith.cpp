#include "pirlab/algebra/modarith.hpp"

#include <bit>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 inv_mod(u64 a, u64 m) {
  a %= m;
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw PirError(ErrorCode::NonUnit,
                   std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<u64>(res);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> factorize(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q <= n / q; ++q) {
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q : factorize(n)) {
    if (out.empty() || out.back() != q) out.push_back(q);
  }
  return out;
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  return factorize(n).size() == distinct_prime_factors(n).size();
}

unsigned bit_length(u64 x) { return static_cast<unsigned>(std::bit_width(x)); }

std::size_t bytes_for_bound(u64 bound) {
  unsigned bits = bound <= 1 ? 0 : bit_length(bound - 1);
  return bits == 0 ? 1 : (bits + 7) / 8;
}

void put_le(u64 value, std::size_t bytes, std::vector<std::uint8_t>& out) {
  for (std::size_t b = 0; b < bytes; ++b) {
    out.push_back(static_cast<std::uint8_t>(value & 0xFFU));
    value >>= 8U;
  }
}

u64 get_le(const std::uint8_t* in, std::size_t bytes) {
  u64 v = 0;
  for (std::size_t b = bytes; b-- > 0;) v = (v << 8U) | in[b];
  return v;
}

}  // namespace pirlab::algebra
