#include "pirlab/foasc/toy_instances.hpp"

#include <array>

#include "pirlab/algebra/prime_field.hpp"

namespace pirlab::foasc {
namespace {

using Cell = std::array<u64, 2>;
using Row = std::array<Cell, 2>;

// Rows exactly as tabulated: Q1 for index 1, Q2 for index 2.
constexpr std::array<Row, 9> kQ1 = {{
    {{{1, 0}, {1, 0}}},
    {{{1, 1}, {1, 2}}},
    {{{1, 2}, {1, 1}}},
    {{{2, 0}, {0, 0}}},
    {{{2, 1}, {0, 2}}},
    {{{2, 2}, {0, 1}}},
    {{{0, 0}, {2, 0}}},
    {{{0, 1}, {2, 2}}},
    {{{0, 2}, {2, 1}}},
}};

constexpr std::array<Row, 9> kQ2 = {{
    {{{0, 1}, {0, 1}}},
    {{{0, 2}, {0, 0}}},
    {{{0, 0}, {0, 2}}},
    {{{1, 1}, {2, 1}}},
    {{{1, 2}, {2, 0}}},
    {{{1, 0}, {2, 2}}},
    {{{2, 1}, {1, 1}}},
    {{{2, 2}, {1, 0}}},
    {{{2, 0}, {1, 2}}},
}};

std::shared_ptr<const algebra::ScalarRing> field(u64 p) {
  return std::make_shared<algebra::PrimeFieldRing>(algebra::PrimeField(p));
}

class ToyF3 : public FoascInstance {
 public:
  ToyF3(std::string id, bool ignore_randomness, u64 lambda_value)
      : FoascInstance(std::move(id), 2, 2, 1, RandomnessSpace({9}),
                      LevelCodec::box({3, 3}, "F_3^2"), field(3), 1),
        ignore_randomness_(ignore_randomness),
        lambda_value_(lambda_value) {}

  std::vector<LevelPoint> row(std::size_t i, const Randomness& ell) const override {
    const auto& table = i == 0 ? kQ1 : kQ2;
    const Row& r = table[ignore_randomness_ ? 0 : ell[0]];
    return {LevelPoint{r[0][0], r[0][1]}, LevelPoint{r[1][0], r[1][1]}};
  }

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override { return RingVec{{z[tau]}}; }

  ReconCoeff recon(std::size_t, const Randomness&) const override {
    return ReconCoeff{{RingVec{{lambda_value_}}, RingVec{{lambda_value_}}}, 1};
  }

 protected:
  void describe(ParamReport& r) const override {
    r.set("alpha", "alpha_1(a,b) = a, alpha_2(a,b) = b");
    r.set("lambda", "(" + std::to_string(lambda_value_) + "," + std::to_string(lambda_value_) + ")");
    if (ignore_randomness_) r.set("defect", "rows ignore the randomness");
  }

 private:
  bool ignore_randomness_;
  u64 lambda_value_;
};

class Trivial : public FoascInstance {
 public:
  Trivial()
      : FoascInstance("trivial", 1, 1, 0, RandomnessSpace({2}), LevelCodec::box({2}, "{0,1}"),
                      field(2), 1) {}

  std::vector<LevelPoint> row(std::size_t, const Randomness& ell) const override {
    return {LevelPoint{ell[0]}};
  }
  RingVec alpha(std::size_t, const LevelPoint&) const override { return RingVec{{1}}; }
  ReconCoeff recon(std::size_t, const Randomness&) const override { return ReconCoeff{{RingVec{{1}}}, 1}; }
};

}  // namespace

InstancePtr make_toy_f3() { return std::make_shared<ToyF3>("toy-f3", false, 2); }

InstancePtr make_trivial() { return std::make_shared<Trivial>(); }

InstancePtr make_broken(Defect defect) {
  const bool ignore = defect != Defect::WrongLambda;
  const u64 lambda = defect == Defect::IgnoresRandomness ? 2 : 1;
  return std::make_shared<ToyF3>("broken-demo", ignore, lambda);
}

}  // namespace pirlab::foasc
