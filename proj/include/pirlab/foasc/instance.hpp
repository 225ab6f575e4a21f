#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "pirlab/algebra/scalar_ring.hpp"
#include "pirlab/foasc/report.hpp"
#include "pirlab/foasc/types.hpp"

namespace pirlab::foasc {

// A family of n orthogonal arrays Q^(1..n) with alpha-span capability, given implicitly:
// row(i, l) is the l-th row of Q^(i), alpha(tau, z) evaluates alpha_tau, and recon(i, l)
// returns (lambda, omega) with alpha(Q^(i)_l) * lambda = omega * e_i.
// Indices i and tau are zero-based. Instances are immutable once built.
class FoascInstance {
 public:
  virtual ~FoascInstance() = default;

  const std::string& protocol_id() const { return id_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t t() const { return t_; }
  const RandomnessSpace& randomness() const { return space_; }
  const LevelCodec& level_codec() const { return codec_; }
  const algebra::ScalarRing& ring() const { return *ring_; }
  std::size_t ring_dim() const { return dim_; }

  double ring_bits() const { return static_cast<double>(dim_) * ring_->element_bits(); }
  std::size_t ring_bytes() const { return dim_ * ring_->element_bytes(); }

  virtual std::vector<LevelPoint> row(std::size_t i, const Randomness& ell) const = 0;
  virtual RingVec alpha(std::size_t tau, const LevelPoint& z) const = 0;
  virtual ReconCoeff recon(std::size_t i, const Randomness& ell) const = 0;

  // Public parameters; two deployments agree iff their reports are identical.
  ParamReport report() const;
  // FNV-1a over report().to_kv().
  u64 digest() const;

 protected:
  FoascInstance(std::string id, std::size_t n, std::size_t k, std::size_t t, RandomnessSpace space,
                LevelCodec codec, std::shared_ptr<const algebra::ScalarRing> ring, std::size_t dim);

  // Protocol-specific entries appended after the common ones.
  virtual void describe(ParamReport& report) const { (void)report; }

 private:
  std::string id_;
  std::size_t n_, k_, t_;
  RandomnessSpace space_;
  LevelCodec codec_;
  std::shared_ptr<const algebra::ScalarRing> ring_;
  std::size_t dim_;
};

using InstancePtr = std::shared_ptr<const FoascInstance>;

u64 fnv1a(std::string_view bytes);

}  // namespace pirlab::foasc
