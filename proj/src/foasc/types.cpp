#include "pirlab/foasc/types.hpp"

#include <cmath>
#include <sstream>

#include "pirlab/errors.hpp"

namespace pirlab::foasc {

Database::Database(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw PirError(ErrorCode::ParamError, "database must hold at least one bit");
  for (auto b : bits_) {
    if (b > 1) throw PirError(ErrorCode::ParamError, "database entries must be 0 or 1");
  }
}

Database Database::from_mask(std::size_t n, u64 mask) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t tau = 0; tau < n; ++tau) bits[tau] = static_cast<std::uint8_t>((mask >> tau) & 1U);
  return Database(std::move(bits));
}

u64 uniform_below(std::mt19937_64& rng, u64 bound) {
  if (bound == 0) throw PirError(ErrorCode::ParamError, "empty range");
  // Reject the top partial block so every residue is equally likely.
  const u64 limit = ~0ULL - (~0ULL % bound + 1) % bound;
  u64 x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

RandomnessSpace::RandomnessSpace(std::vector<u64> radices) : radices_(std::move(radices)) {
  unsigned __int128 total = 1;
  bool fits = true;
  for (u64 r : radices_) {
    if (r == 0) throw PirError(ErrorCode::ParamError, "randomness digit with empty range");
    total *= r;
    if (total > (static_cast<unsigned __int128>(1) << 63U)) {
      fits = false;
      break;
    }
  }
  if (fits) size_ = static_cast<u64>(total);
}

double RandomnessSpace::log2_size() const {
  double bits = 0;
  for (u64 r : radices_) bits += std::log2(static_cast<double>(r));
  return bits;
}

Randomness RandomnessSpace::at(u64 index) const {
  if (!size_ || index >= *size_) throw PirError(ErrorCode::ParamError, "randomness index out of range");
  Randomness ell(radices_.size());
  for (std::size_t c = radices_.size(); c-- > 0;) {
    ell[c] = index % radices_[c];
    index /= radices_[c];
  }
  return ell;
}

u64 RandomnessSpace::index_of(const Randomness& ell) const {
  if (!contains(ell) || !size_) throw PirError(ErrorCode::ParamError, "randomness not indexable");
  u64 index = 0;
  for (std::size_t c = 0; c < radices_.size(); ++c) index = index * radices_[c] + ell[c];
  return index;
}

bool RandomnessSpace::contains(const Randomness& ell) const {
  if (ell.size() != radices_.size()) return false;
  for (std::size_t c = 0; c < ell.size(); ++c) {
    if (ell[c] >= radices_[c]) return false;
  }
  return true;
}

Randomness RandomnessSpace::sample(std::mt19937_64& rng) const {
  Randomness ell(radices_.size());
  for (std::size_t c = 0; c < radices_.size(); ++c) ell[c] = uniform_below(rng, radices_[c]);
  return ell;
}

std::string RandomnessSpace::describe() const {
  std::ostringstream os;
  os << "uniform element of ";
  if (radices_.empty()) {
    os << "{0}";
    return os.str();
  }
  // Collapse runs of equal radices: Z_7^4 x Z_2.
  for (std::size_t c = 0; c < radices_.size();) {
    std::size_t run = c;
    while (run < radices_.size() && radices_[run] == radices_[c]) ++run;
    if (c != 0) os << " x ";
    os << "Z_" << radices_[c];
    if (run - c > 1) os << "^" << (run - c);
    c = run;
  }
  return os.str();
}

LevelCodec::LevelCodec(std::vector<u64> radices, u64 cardinality, std::string description,
                       Membership member)
    : radices_(std::move(radices)),
      cardinality_(cardinality),
      description_(std::move(description)),
      member_(std::move(member)),
      bytes_(0) {
  if (cardinality_ == 0) throw PirError(ErrorCode::ParamError, "empty level set");
  for (u64 r : radices_) bytes_ += algebra::bytes_for_bound(r);
}

LevelCodec LevelCodec::box(std::vector<u64> radices, std::string description) {
  unsigned __int128 total = 1;
  for (u64 r : radices) {
    total *= r;
    if (total > static_cast<unsigned __int128>(~0ULL)) {
      throw PirError(ErrorCode::ParamError, "level set too large");
    }
  }
  return LevelCodec(std::move(radices), static_cast<u64>(total), std::move(description));
}

double LevelCodec::bits() const { return std::log2(static_cast<double>(cardinality_)); }

bool LevelCodec::contains(const LevelPoint& z) const {
  if (z.size() != radices_.size()) return false;
  for (std::size_t c = 0; c < z.size(); ++c) {
    if (z[c] >= radices_[c]) return false;
  }
  return !member_ || member_(z);
}

void LevelCodec::encode(const LevelPoint& z, std::vector<std::uint8_t>& out) const {
  if (!contains(z)) throw PirError(ErrorCode::MalformedQuery, "point outside the level set");
  for (std::size_t c = 0; c < z.size(); ++c) algebra::put_le(z[c], algebra::bytes_for_bound(radices_[c]), out);
}

std::optional<LevelPoint> LevelCodec::decode(std::span<const std::uint8_t> in) const {
  if (in.size() != bytes_) return std::nullopt;
  LevelPoint z(radices_.size());
  std::size_t off = 0;
  for (std::size_t c = 0; c < radices_.size(); ++c) {
    const std::size_t w = algebra::bytes_for_bound(radices_[c]);
    z[c] = algebra::get_le(in.data() + off, w);
    off += w;
  }
  if (!contains(z)) return std::nullopt;
  return z;
}

void encode_ring_vec(const algebra::ScalarRing& ring, const RingVec& v, std::vector<std::uint8_t>& out) {
  for (Elem e : v.entries) ring.encode(e, out);
}

std::optional<RingVec> decode_ring_vec(const algebra::ScalarRing& ring, std::size_t dim,
                                       std::span<const std::uint8_t> in) {
  const std::size_t w = ring.element_bytes();
  if (in.size() != w * dim) return std::nullopt;
  RingVec v;
  v.entries.reserve(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    auto e = ring.decode(in.subspan(d * w, w));
    if (!e) return std::nullopt;
    v.entries.push_back(*e);
  }
  return v;
}

Elem pair(const algebra::ScalarRing& ring, const RingVec& a, const RingVec& b) {
  if (a.entries.size() != b.entries.size()) {
    throw PirError(ErrorCode::DimensionMismatch, "pairing of ring vectors with different lengths");
  }
  Elem acc = ring.zero();
  for (std::size_t d = 0; d < a.entries.size(); ++d) {
    if (a.entries[d] == 0 || b.entries[d] == 0) continue;
    acc = ring.add(acc, ring.mul(a.entries[d], b.entries[d]));
  }
  return acc;
}

}  // namespace pirlab::foasc
