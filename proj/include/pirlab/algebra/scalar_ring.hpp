#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pirlab/algebra/ext_field.hpp"
#include "pirlab/algebra/group_ring.hpp"
#include "pirlab/algebra/prime_field.hpp"

namespace pirlab::algebra {

// One-word handle to an element of a finite commutative ring. Zero is always 0 and
// equal handles denote equal elements.
using Elem = std::uint64_t;

// Type-erased view of the answer ring used by the protocol engine.
class ScalarRing {
 public:
  virtual ~ScalarRing() = default;

  virtual std::string name() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem sub(Elem a, Elem b) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual bool contains(Elem a) const = 0;

  // log2 of the number of elements.
  virtual double element_bits() const = 0;
  virtual std::size_t element_bytes() const = 0;
  virtual void encode(Elem a, std::vector<std::uint8_t>& out) const = 0;
  // Exactly element_bytes() bytes; nullopt for a non-canonical encoding.
  virtual std::optional<Elem> decode(std::span<const std::uint8_t> in) const = 0;

  Elem zero() const { return 0; }
};

class PrimeFieldRing final : public ScalarRing {
 public:
  explicit PrimeFieldRing(PrimeField f) : f_(f) {}

  const PrimeField& field() const { return f_; }

  std::string name() const override { return "F_" + std::to_string(f_.modulus()); }
  Elem one() const override { return f_.one(); }
  Elem add(Elem a, Elem b) const override { return f_.add(a, b); }
  Elem sub(Elem a, Elem b) const override { return f_.sub(a, b); }
  Elem mul(Elem a, Elem b) const override { return f_.mul(a, b); }
  bool contains(Elem a) const override { return f_.contains(a); }
  double element_bits() const override;
  std::size_t element_bytes() const override { return f_.element_bytes(); }
  void encode(Elem a, std::vector<std::uint8_t>& out) const override;
  std::optional<Elem> decode(std::span<const std::uint8_t> in) const override;

 private:
  PrimeField f_;
};

class ExtFieldRing final : public ScalarRing {
 public:
  explicit ExtFieldRing(ExtField f) : f_(std::move(f)) {}

  const ExtField& field() const { return f_; }

  std::string name() const override;
  Elem one() const override { return f_.one(); }
  Elem add(Elem a, Elem b) const override { return f_.add(a, b); }
  Elem sub(Elem a, Elem b) const override { return f_.sub(a, b); }
  Elem mul(Elem a, Elem b) const override { return f_.mul(a, b); }
  bool contains(Elem a) const override { return f_.contains(a); }
  double element_bits() const override;
  std::size_t element_bytes() const override { return f_.element_bytes(); }
  void encode(Elem a, std::vector<std::uint8_t>& out) const override;
  std::optional<Elem> decode(std::span<const std::uint8_t> in) const override;

 private:
  ExtField f_;
};

// Group ring elements packed into one word; requires GroupRing::packable().
class GroupRingScalars final : public ScalarRing {
 public:
  explicit GroupRingScalars(GroupRing r);

  const GroupRing& ring() const { return r_; }

  std::string name() const override;
  Elem one() const override { return r_.pack(r_.one()); }
  Elem add(Elem a, Elem b) const override;
  Elem sub(Elem a, Elem b) const override;
  Elem mul(Elem a, Elem b) const override;
  bool contains(Elem a) const override;
  double element_bits() const override { return r_.element_bits(); }
  std::size_t element_bytes() const override { return r_.element_bytes(); }
  void encode(Elem a, std::vector<std::uint8_t>& out) const override;
  std::optional<Elem> decode(std::span<const std::uint8_t> in) const override;

 private:
  GroupRing r_;
};

}  // namespace pirlab::algebra
