#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pirlab/algebra/scalar_ring.hpp"

namespace pirlab::foasc {

using algebra::Elem;
using algebra::u64;

// A point of the level set S, as a vector of small coordinates.
using LevelPoint = std::vector<u64>;

// Index l into the rows of every Q^(i), as mixed-radix digits.
using Randomness = std::vector<u64>;

// Element of R = base^D; D = 1 for scalar-answer protocols.
struct RingVec {
  std::vector<Elem> entries;

  bool operator==(const RingVec&) const = default;
};

// lambda holds one RingVec per server; omega is nonzero.
struct ReconCoeff {
  std::vector<RingVec> lambda;
  Elem omega = 1;
};

// User-side state kept between querying and reconstruction.
struct Aux {
  std::size_t i = 0;
  Randomness ell;
};

class Database {
 public:
  Database() = default;
  explicit Database(std::vector<std::uint8_t> bits);
  // Bit tau of mask is entry tau.
  static Database from_mask(std::size_t n, u64 mask);
  static Database zeros(std::size_t n) { return Database(std::vector<std::uint8_t>(n, 0)); }

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t tau) const { return bits_[tau]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const Database&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Unbiased draw from [0, bound) by rejection sampling on a 64-bit generator.
u64 uniform_below(std::mt19937_64& rng, u64 bound);

// The randomness space of an instance: independent uniform digits, digit c in [0, radix_c).
class RandomnessSpace {
 public:
  explicit RandomnessSpace(std::vector<u64> radices);

  const std::vector<u64>& radices() const { return radices_; }
  // Number of rows N, or nullopt if it does not fit in 63 bits.
  std::optional<u64> size() const { return size_; }
  double log2_size() const;

  // Digit order: the last digit varies fastest.
  Randomness at(u64 index) const;
  u64 index_of(const Randomness& ell) const;
  bool contains(const Randomness& ell) const;
  Randomness sample(std::mt19937_64& rng) const;

  std::string describe() const;

 private:
  std::vector<u64> radices_;
  std::optional<u64> size_;
};

// Serialization of level points: coordinate c occupies bytes_for_bound(radix_c) bytes,
// little-endian, concatenated. The level set may be a proper subset of the coordinate box.
class LevelCodec {
 public:
  using Membership = std::function<bool(const LevelPoint&)>;

  LevelCodec(std::vector<u64> radices, u64 cardinality, std::string description,
             Membership member = {});

  // Full box: cardinality is the product of radices.
  static LevelCodec box(std::vector<u64> radices, std::string description);

  const std::vector<u64>& radices() const { return radices_; }
  std::size_t coordinates() const { return radices_.size(); }
  u64 cardinality() const { return cardinality_; }
  double bits() const;
  std::size_t bytes() const { return bytes_; }
  const std::string& description() const { return description_; }

  bool contains(const LevelPoint& z) const;
  // Throws PirError(MalformedQuery) if z is not a level point.
  void encode(const LevelPoint& z, std::vector<std::uint8_t>& out) const;
  std::optional<LevelPoint> decode(std::span<const std::uint8_t> in) const;

 private:
  std::vector<u64> radices_;
  u64 cardinality_;
  std::string description_;
  Membership member_;
  std::size_t bytes_;
};

void encode_ring_vec(const algebra::ScalarRing& ring, const RingVec& v,
                     std::vector<std::uint8_t>& out);
std::optional<RingVec> decode_ring_vec(const algebra::ScalarRing& ring, std::size_t dim,
                                       std::span<const std::uint8_t> in);

// Pairing of two RingVecs: the dot product over the base ring.
Elem pair(const algebra::ScalarRing& ring, const RingVec& a, const RingVec& b);

}  // namespace pirlab::foasc
