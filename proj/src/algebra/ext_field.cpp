#include "pirlab/algebra/ext_field.hpp"

#include <string>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {
namespace {

// Remainder of a modulo a monic b over F_p, both low to high.
std::vector<u64> poly_rem(const PrimeField& f, std::vector<u64> a, std::span<const u64> b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const u64 lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t c = 0; c <= db; ++c) {
        a[shift + c] = f.sub(a[shift + c], f.mul(lead, b[c]));
      }
    }
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<u64>& v) {
  for (u64 c : v) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(const PrimeField& field, std::span<const u64> f) {
  const std::size_t deg = f.size() - 1;
  const u64 p = field.modulus();
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    u64 count = 1;
    for (std::size_t c = 0; c < d; ++c) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<u64> g(d + 1);
      u64 rest = idx;
      for (std::size_t c = 0; c < d; ++c) {
        g[c] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      if (all_zero(poly_rem(field, std::vector<u64>(f.begin(), f.end()), g))) return false;
    }
  }
  return true;
}

ExtField::ExtField(u64 p, std::vector<u64> modulus)
    : base_(p), modulus_(std::move(modulus)), degree_(0), order_(1) {
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw PirError(ErrorCode::ParamError, "extension modulus must be monic of degree >= 1");
  }
  for (u64& c : modulus_) {
    if (c >= p) throw PirError(ErrorCode::ParamError, "modulus coefficient out of range");
  }
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  for (unsigned c = 0; c < degree_; ++c) {
    if (order_ > (~0ULL) / p) throw PirError(ErrorCode::ParamError, "extension field too large");
    order_ *= p;
  }
  if (!is_irreducible(base_, modulus_)) {
    throw PirError(ErrorCode::ParamError, "extension modulus is reducible");
  }
}

ExtField ExtField::standard(u64 p, unsigned degree) {
  if (p == 2 && degree == 2) return ExtField(2, {1, 1, 1});
  if (p == 2 && degree == 3) return ExtField(2, {1, 1, 0, 1});
  const PrimeField f(p);
  u64 count = 1;
  for (unsigned c = 0; c < degree; ++c) count *= p;
  for (u64 idx = 0; idx < count; ++idx) {
    std::vector<u64> g(degree + 1);
    u64 rest = idx;
    for (unsigned c = 0; c < degree; ++c) {
      g[c] = rest % p;
      rest /= p;
    }
    g[degree] = 1;
    if (is_irreducible(f, g)) return ExtField(p, std::move(g));
  }
  throw PirError(ErrorCode::ParamError, "no irreducible polynomial found");
}

u64 ExtField::x() const {
  if (degree_ == 1) return base_.neg(modulus_[0]);
  return base_.modulus();
}

std::vector<u64> ExtField::to_coeffs(u64 a) const {
  std::vector<u64> out(degree_);
  const u64 p = base_.modulus();
  for (unsigned c = 0; c < degree_; ++c) {
    out[c] = a % p;
    a /= p;
  }
  return out;
}

u64 ExtField::from_coeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > degree_) {
    throw PirError(ErrorCode::DimensionMismatch, "too many coefficients for extension element");
  }
  u64 v = 0;
  for (std::size_t c = coeffs.size(); c-- > 0;) v = v * base_.modulus() + coeffs[c] % base_.modulus();
  return v;
}

u64 ExtField::add(u64 a, u64 b) const {
  auto ca = to_coeffs(a);
  auto cb = to_coeffs(b);
  for (unsigned c = 0; c < degree_; ++c) ca[c] = base_.add(ca[c], cb[c]);
  return from_coeffs(ca);
}

u64 ExtField::sub(u64 a, u64 b) const {
  auto ca = to_coeffs(a);
  auto cb = to_coeffs(b);
  for (unsigned c = 0; c < degree_; ++c) ca[c] = base_.sub(ca[c], cb[c]);
  return from_coeffs(ca);
}

u64 ExtField::mul(u64 a, u64 b) const {
  const auto ca = to_coeffs(a);
  const auto cb = to_coeffs(b);
  std::vector<u64> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      prod[i + j] = base_.add(prod[i + j], base_.mul(ca[i], cb[j]));
    }
  }
  return from_coeffs(poly_rem(base_, std::move(prod), modulus_));
}

u64 ExtField::pow(u64 a, u64 e) const {
  u64 result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

u64 ExtField::inv(u64 a) const {
  if (a == 0) throw PirError(ErrorCode::NonUnit, "zero is not invertible");
  return pow(a, order_ - 2);
}

u64 ExtField::multiplicative_order(u64 a) const {
  if (a == 0) throw PirError(ErrorCode::NonUnit, "zero has no multiplicative order");
  u64 order = order_ - 1;
  for (u64 q : distinct_prime_factors(order_ - 1)) {
    while (order % q == 0 && pow(a, order / q) == 1) order /= q;
  }
  return order;
}

u64 ExtField::find_generator() const {
  if (order_ > 2 && multiplicative_order(x()) == order_ - 1) return x();
  for (u64 a = 1; a < order_; ++a) {
    if (multiplicative_order(a) == order_ - 1) return a;
  }
  throw PirError(ErrorCode::NoSuchElement, "no generator found");
}

}  // namespace pirlab::algebra
