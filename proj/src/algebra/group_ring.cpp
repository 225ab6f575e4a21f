#include "pirlab/algebra/group_ring.hpp"

#include <cmath>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {

GroupRing::GroupRing(u64 m) : base_(m), packable_(true) {
  unsigned __int128 size = 1;
  for (u64 c = 0; c < m; ++c) {
    size *= m;
    if (size > static_cast<unsigned __int128>(~0ULL)) {
      packable_ = false;
      break;
    }
  }
}

GroupRingElement GroupRing::zero() const { return GroupRingElement{std::vector<u64>(m(), 0)}; }

GroupRingElement GroupRing::monomial(u64 exponent, u64 coeff) const {
  GroupRingElement e = zero();
  e.coeffs[exponent % m()] = coeff % m();
  return e;
}

GroupRingElement GroupRing::add(const GroupRingElement& a, const GroupRingElement& b) const {
  GroupRingElement r = zero();
  for (u64 c = 0; c < m(); ++c) r.coeffs[c] = base_.add(a.coeffs[c], b.coeffs[c]);
  return r;
}

GroupRingElement GroupRing::sub(const GroupRingElement& a, const GroupRingElement& b) const {
  GroupRingElement r = zero();
  for (u64 c = 0; c < m(); ++c) r.coeffs[c] = base_.sub(a.coeffs[c], b.coeffs[c]);
  return r;
}

GroupRingElement GroupRing::mul(const GroupRingElement& a, const GroupRingElement& b) const {
  GroupRingElement r = zero();
  const u64 mm = m();
  for (u64 i = 0; i < mm; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (u64 j = 0; j < mm; ++j) {
      if (b.coeffs[j] == 0) continue;
      const u64 pos = (i + j) % mm;
      r.coeffs[pos] = base_.add(r.coeffs[pos], base_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

GroupRingElement GroupRing::scale(u64 c, const GroupRingElement& a) const {
  GroupRingElement r = zero();
  for (u64 i = 0; i < m(); ++i) r.coeffs[i] = base_.mul(c % m(), a.coeffs[i]);
  return r;
}

bool GroupRing::is_zero(const GroupRingElement& a) const {
  for (u64 c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<u64> GroupRing::reduce_mod(const GroupRingElement& a, u64 prime) const {
  if (m() % prime != 0) throw PirError(ErrorCode::ParamError, "not a factor of m");
  std::vector<u64> out(a.coeffs);
  for (u64& c : out) c %= prime;
  return out;
}

u64 GroupRing::pack(const GroupRingElement& a) const {
  if (!packable_) throw PirError(ErrorCode::ParamError, "group ring too large to pack");
  u64 v = 0;
  for (u64 c = m(); c-- > 0;) v = v * m() + a.coeffs[c];
  return v;
}

GroupRingElement GroupRing::unpack(u64 packed) const {
  GroupRingElement e = zero();
  for (u64 c = 0; c < m(); ++c) {
    e.coeffs[c] = packed % m();
    packed /= m();
  }
  return e;
}

double GroupRing::element_bits() const {
  return static_cast<double>(m()) * std::log2(static_cast<double>(m()));
}

}  // namespace pirlab::algebra
