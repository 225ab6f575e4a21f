#include "pirlab/algebra/ext_field.hpp"
#include "pirlab/protocols/protocols.hpp"
#include "shift_rows.hpp"

namespace pirlab::protocols {

using namespace foasc;

namespace {

void require_mersenne_family(const mv::MatchingFamily& fam, u64 p) {
  if (fam.m != p) throw PirError(ErrorCode::ParamError, "family must live over F_p");
  if (fam.target != mv::powers_of_two(p)) throw PirError(ErrorCode::ParamError, "family target must be <2>");
  detail::require_family(fam, true);
}

// Answers are p indicator bits over F_2, one per shift rho of z along 1_h.
class Yekhanin final : public detail::ShiftRows {
 public:
  Yekhanin(const mv::MatchingFamily& fam, const mv::NiceSets& nice)
      : ShiftRows("yekhanin", fam, {0, 1, nice.gamma}, detail::prime_ring(2), nice.p), nice_(nice),
        in_s0_(nice.p, false) {
    for (u64 x : nice.s0) in_s0_[x] = true;
  }

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    const u64 p = nice_.p;
    const u64 base = u_dot(tau, z);
    const u64 step = ones_dot(tau);
    RingVec out{std::vector<Elem>(p, 0)};
    for (u64 rho = 0; rho < p; ++rho) out.entries[rho] = in_s0_[(base + rho * step) % p];
    return out;
  }

  ReconCoeff recon(std::size_t i, const Randomness& ell) const override {
    const u64 p = nice_.p;
    const u64 base = u_dot(i, ell);
    const u64 step = ones_dot(i);
    for (u64 rho = 0; rho < p; ++rho) {
      if (in_s0_[(base + rho * step) % p]) {
        RingVec block{std::vector<Elem>(p, 0)};
        block.entries[rho] = 1;
        return ReconCoeff{{block, block, block}, 1};
      }
    }
    throw PirError(ErrorCode::NiceSetError, "no shift rho lands in S_0");
  }

 protected:
  void describe(ParamReport& r) const override {
    describe_family(r);
    r.set("gamma", nice_.gamma);
    r.set("S0", detail::vec_text(nice_.s0));
    r.set("S1", detail::vec_text(nice_.s1));
  }

 private:
  u64 ones_dot(std::size_t tau) const { return u_dot(tau, std::vector<u64>(fam_.h, 1)); }

  mv::NiceSets nice_;
  std::vector<bool> in_s0_;
};

// Answers g^{<u_tau, z>} in F_{2^r}, g = x.
class Raghavendra final : public detail::ShiftRows {
 public:
  Raghavendra(const mv::MatchingFamily& fam, const algebra::ExtField& field, u64 gamma)
      : ShiftRows("raghavendra", fam, {0, 1, gamma}, std::make_shared<algebra::ExtFieldRing>(field), 1),
        field_(field),
        g_(field.x()) {}

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    return RingVec{{field_.pow(g_, u_dot(tau, z))}};
  }

  ReconCoeff recon(std::size_t i, const Randomness& ell) const override {
    const u64 s = field_.pow(g_, (fam_.m - u_dot(i, ell)) % fam_.m);
    return ReconCoeff{{RingVec{{s}}, RingVec{{s}}, RingVec{{s}}}, 1};
  }

 protected:
  void describe(ParamReport& r) const override {
    describe_family(r);
    r.set("gamma", d_[2]);
    r.set("decoding_poly", "1 + theta + theta^" + std::to_string(d_[2]));
  }

 private:
  algebra::ExtField field_;
  u64 g_;
};

}  // namespace

InstancePtr build_yekhanin(const mv::MatchingFamily& family, const mv::NiceSets& nice) {
  if (auto err = mv::check_nice_sets(nice)) throw PirError(ErrorCode::NiceSetError, *err);
  require_mersenne_family(family, nice.p);
  return std::make_shared<Yekhanin>(family, nice);
}

InstancePtr build_raghavendra(const mv::MatchingFamily& family, unsigned r) {
  const u64 p = (u64{1} << r) - 1;
  require_mersenne_family(family, p);
  const auto field = algebra::ExtField::standard(2, r);
  const u64 g = field.x();
  const u64 one = field.one();
  // P(theta) = 1 + theta + theta^gamma must vanish on g^delta, delta in <2>, with P(1) = 1.
  u64 gamma = 0;
  for (u64 e = 2; e < p && gamma == 0; ++e) {
    if (field.add(field.add(one, g), field.pow(g, e)) == 0) gamma = e;
  }
  if (gamma == 0) throw PirError(ErrorCode::ParamError, "no gamma with 1 + g + g^gamma = 0");
  auto eval = [&](u64 theta) { return field.add(field.add(one, theta), field.pow(theta, gamma)); };
  if (eval(one) != one) throw PirError(ErrorCode::DecodingPolyInvalid, "P(1) != 1");
  for (u64 delta : mv::powers_of_two(p)) {
    if (eval(field.pow(g, delta)) != 0) throw PirError(ErrorCode::DecodingPolyInvalid, "P(g^delta) != 0");
  }
  return std::make_shared<Raghavendra>(family, field, gamma);
}

}  // namespace pirlab::protocols
