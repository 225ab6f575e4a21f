#include <array>

#include "common.hpp"
#include "pirlab/foasc/report.hpp"
#include "pirlab/protocols/protocols.hpp"

namespace pirlab::protocols {

using namespace foasc;

std::size_t cgks_side(std::size_t n) {
  if (n == 0) throw PirError(ErrorCode::ParamError, "n must be positive");
  std::size_t h = 1;
  while (h * h * h < n) ++h;
  return h;
}

namespace {

// Level points are three h-bit masks (A, B, C); subsets of [h] with XOR as symmetric difference.
class Cgks final : public FoascInstance {
 public:
  Cgks(std::size_t n, std::size_t h)
      : FoascInstance("cgks", n, 2, 1, RandomnessSpace(detail::repeat(u64{1} << h, 3)),
                      LevelCodec::box(detail::repeat(u64{1} << h, 3), "subsets of [h]^3 as 3 h-bit masks"),
                      detail::prime_ring(2), 3 * h + 1),
        h_(h) {
    if (h > 20) throw PirError(ErrorCode::ParamError, "cube side too large");
  }

  std::vector<LevelPoint> row(std::size_t i, const Randomness& ell) const override {
    const auto c = coords(i);
    LevelPoint second(3);
    for (int a = 0; a < 3; ++a) second[a] = ell[a] ^ (u64{1} << c[a]);
    return {LevelPoint(ell), second};
  }

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    const auto c = coords(tau);
    bool in[3];
    for (int a = 0; a < 3; ++a) in[a] = (z[a] >> c[a]) & 1;
    RingVec out{std::vector<Elem>(3 * h_ + 1, 0)};
    out.entries[0] = in[0] && in[1] && in[2];
    // Membership of tau in the box with coordinate x of axis a flipped.
    for (int a = 0; a < 3; ++a) {
      const bool others = in[(a + 1) % 3] && in[(a + 2) % 3];
      for (std::size_t x = 0; x < h_; ++x) {
        out.entries[1 + a * h_ + x] = others && (x == c[a] ? !in[a] : in[a]);
      }
    }
    return out;
  }

  ReconCoeff recon(std::size_t i, const Randomness&) const override {
    const auto c = coords(i);
    RingVec block{std::vector<Elem>(3 * h_ + 1, 0)};
    block.entries[0] = 1;
    for (int a = 0; a < 3; ++a) block.entries[1 + a * h_ + c[a]] = 1;
    return ReconCoeff{{block, block}, 1};
  }

 protected:
  void describe(ParamReport& r) const override {
    r.set("h", h_);
    r.set("formula_bits", "12h+2 = " + std::to_string(12 * h_ + 2));
  }

 private:
  std::array<std::size_t, 3> coords(std::size_t i) const {
    return {i / (h_ * h_), (i / h_) % h_, i % h_};
  }

  std::size_t h_;
};

}  // namespace

InstancePtr build_cgks(std::size_t n) { return std::make_shared<Cgks>(n, cgks_side(n)); }

}  // namespace pirlab::protocols
