#include "pirlab/algebra/prime_field.hpp"

#include <string>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {

PrimeField::PrimeField(u64 p) : p_(p) {
  if (!is_prime(p)) throw PirError(ErrorCode::ParamError, std::to_string(p) + " is not prime");
}

u64 PrimeField::multiplicative_order(u64 a) const {
  if (a % p_ == 0) throw PirError(ErrorCode::NonUnit, "zero has no multiplicative order");
  u64 order = p_ - 1;
  for (u64 q : distinct_prime_factors(p_ - 1)) {
    while (order % q == 0 && pow(a, order / q) == 1) order /= q;
  }
  return order;
}

u64 PrimeField::find_order_element(u64 m) const {
  if (m == 0 || (p_ - 1) % m != 0) {
    throw PirError(ErrorCode::NoSuchElement,
                   std::to_string(m) + " does not divide p - 1 = " + std::to_string(p_ - 1));
  }
  if (m == 1) return one();
  const auto qs = distinct_prime_factors(m);
  for (u64 h = 2; h < p_; ++h) {
    u64 g = pow(h, (p_ - 1) / m);
    bool exact = true;
    for (u64 q : qs) {
      if (pow(g, m / q) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return g;
  }
  throw PirError(ErrorCode::NoSuchElement, "no element of order " + std::to_string(m));
}

}  // namespace pirlab::algebra
