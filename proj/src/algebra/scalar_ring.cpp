#include "pirlab/algebra/scalar_ring.hpp"

#include <cmath>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {

double PrimeFieldRing::element_bits() const { return std::log2(static_cast<double>(f_.modulus())); }

void PrimeFieldRing::encode(Elem a, std::vector<std::uint8_t>& out) const {
  put_le(a, element_bytes(), out);
}

std::optional<Elem> PrimeFieldRing::decode(std::span<const std::uint8_t> in) const {
  if (in.size() != element_bytes()) return std::nullopt;
  const u64 v = get_le(in.data(), in.size());
  if (!f_.contains(v)) return std::nullopt;
  return v;
}

std::string ExtFieldRing::name() const {
  return "F_" + std::to_string(f_.characteristic()) + "^" + std::to_string(f_.degree());
}

double ExtFieldRing::element_bits() const {
  return f_.degree() * std::log2(static_cast<double>(f_.characteristic()));
}

void ExtFieldRing::encode(Elem a, std::vector<std::uint8_t>& out) const {
  const std::size_t w = bytes_for_bound(f_.characteristic());
  for (u64 c : f_.to_coeffs(a)) put_le(c, w, out);
}

std::optional<Elem> ExtFieldRing::decode(std::span<const std::uint8_t> in) const {
  if (in.size() != element_bytes()) return std::nullopt;
  const std::size_t w = bytes_for_bound(f_.characteristic());
  std::vector<u64> coeffs;
  for (std::size_t c = 0; c < f_.degree(); ++c) {
    const u64 v = get_le(in.data() + c * w, w);
    if (v >= f_.characteristic()) return std::nullopt;
    coeffs.push_back(v);
  }
  return f_.from_coeffs(coeffs);
}

GroupRingScalars::GroupRingScalars(GroupRing r) : r_(std::move(r)) {
  if (!r_.packable()) {
    throw PirError(ErrorCode::ParamError,
                   "group ring Z_" + std::to_string(r_.m()) + "[g]/(g^m-1) exceeds one machine word");
  }
}

std::string GroupRingScalars::name() const {
  return "Z_" + std::to_string(r_.m()) + "[g]/(g^" + std::to_string(r_.m()) + "-1)";
}

Elem GroupRingScalars::add(Elem a, Elem b) const { return r_.pack(r_.add(r_.unpack(a), r_.unpack(b))); }
Elem GroupRingScalars::sub(Elem a, Elem b) const { return r_.pack(r_.sub(r_.unpack(a), r_.unpack(b))); }
Elem GroupRingScalars::mul(Elem a, Elem b) const { return r_.pack(r_.mul(r_.unpack(a), r_.unpack(b))); }

bool GroupRingScalars::contains(Elem a) const {
  // Packed values are exactly [0, m^m).
  const GroupRingElement e = r_.unpack(a);
  return r_.pack(e) == a;
}

void GroupRingScalars::encode(Elem a, std::vector<std::uint8_t>& out) const {
  const std::size_t w = r_.base().element_bytes();
  for (u64 c : r_.unpack(a).coeffs) put_le(c, w, out);
}

std::optional<Elem> GroupRingScalars::decode(std::span<const std::uint8_t> in) const {
  if (in.size() != element_bytes()) return std::nullopt;
  const std::size_t w = r_.base().element_bytes();
  GroupRingElement e = r_.zero();
  for (u64 c = 0; c < r_.m(); ++c) {
    const u64 v = get_le(in.data() + c * w, w);
    if (v >= r_.m()) return std::nullopt;
    e.coeffs[c] = v;
  }
  return r_.pack(e);
}

}  // namespace pirlab::algebra
