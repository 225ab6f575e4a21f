#include <doctest.h>

#include "pirlab/errors.hpp"
#include "pirlab/foasc/toy_instances.hpp"
#include "pirlab/protocols/protocols.hpp"
#include "pirlab/registry.hpp"
#include "pirlab/sim/inprocess.hpp"
#include "pirlab/verify/suites.hpp"

using namespace pirlab;
using namespace pirlab::foasc;
using namespace pirlab::verify;

namespace {

// Same protocol, randomness relabeled by l -> (a l + b) mod |L|.
class Relabeled final : public FoascInstance {
 public:
  Relabeled(InstancePtr inner, u64 a, u64 b)
      : FoascInstance(inner->protocol_id(), inner->n(), inner->k(), inner->t(), inner->randomness(),
                      inner->level_codec(), std::make_shared<algebra::PrimeFieldRing>(algebra::PrimeField(3)),
                      inner->ring_dim()),
        inner_(std::move(inner)), a_(a), b_(b) {}
  std::vector<LevelPoint> row(std::size_t i, const Randomness& ell) const override {
    return inner_->row(i, map(ell));
  }
  RingVec alpha(std::size_t tau, const LevelPoint& z) const override { return inner_->alpha(tau, z); }
  ReconCoeff recon(std::size_t i, const Randomness& ell) const override { return inner_->recon(i, map(ell)); }

 private:
  Randomness map(const Randomness& ell) const {
    const u64 n = *randomness().size();
    return randomness().at((a_ * randomness().index_of(ell) + b_) % n);
  }
  InstancePtr inner_;
  u64 a_, b_;
};

}  // namespace

TEST_CASE("toy instance passes every suite") {
  const auto inst = make_toy_f3();
  const auto c = exhaustive_correctness(*inst);
  CHECK(c.pass());
  CHECK(c.databases == 4);
  CHECK(c.round_trips == 4 * 2 * 9);
  const auto p = exhaustive_privacy(*inst, 1);
  CHECK(p.pass());
  CHECK(p.uniform());
  CHECK(p.subsets.size() == 2);
  CHECK(oa_family_check(*inst).pass());
  const auto s = span_sweep(*inst);
  CHECK(s.pass());
  CHECK(s.checked == 18);
}

TEST_CASE("privacy is invariant under relabeling the randomness") {
  const auto base = exhaustive_privacy(*make_toy_f3(), 1);
  for (u64 a : {1, 2, 4, 5, 7, 8}) {
    const Relabeled r(make_toy_f3(), a, 3);
    const auto p = exhaustive_privacy(r, 1);
    CHECK(p.pass() == base.pass());
    CHECK(p.uniform() == base.uniform());
    CHECK(exhaustive_correctness(r).pass());
  }
  const Relabeled broken(make_broken(Defect::IgnoresRandomness), 2, 1);
  CHECK_FALSE(exhaustive_privacy(broken, 1).pass());
}

TEST_CASE("negative controls fail the suite they target") {
  const auto ignores = make_broken(Defect::IgnoresRandomness);
  CHECK(exhaustive_correctness(*ignores).pass());
  const auto p = exhaustive_privacy(*ignores, 1);
  CHECK_FALSE(p.pass());
  REQUIRE(p.counterexample.has_value());
  CHECK(p.counterexample->count1 != p.counterexample->count2);
  CHECK_FALSE(oa_family_check(*ignores).pass());
  CHECK(span_sweep(*ignores).pass());

  const auto wrong = make_broken(Defect::WrongLambda);
  const auto c = exhaustive_correctness(*wrong);
  CHECK_FALSE(c.pass());
  CHECK_FALSE(c.failures.empty());
  CHECK(exhaustive_privacy(*wrong, 1).pass());
  CHECK_FALSE(span_sweep(*wrong).pass());

  const auto both = make_broken(Defect::Both);
  CHECK_FALSE(exhaustive_correctness(*both).pass());
  CHECK_FALSE(exhaustive_privacy(*both, 1).pass());
}

TEST_CASE("tampered answers are detected") {
  const auto inst = protocols::build_cgks(8);
  CorrectnessOptions opt;
  opt.tamper = [](std::size_t server, RingVec& a) {
    if (server == 1) a.entries[0] ^= 1;
  };
  const auto c = exhaustive_correctness(*inst, opt);
  CHECK_FALSE(c.pass());
  CHECK(c.failure_count == c.round_trips);
  CHECK(exhaustive_correctness(*inst).pass());
}

TEST_CASE("budget and unit-basis mode") {
  const auto inst = protocols::build_cgks(27);
  CHECK_THROWS_AS(exhaustive_correctness(*inst), PirError);
  CorrectnessOptions opt;
  opt.unit_basis = true;
  const auto c = exhaustive_correctness(*inst, opt);
  CHECK(c.pass());
  CHECK(c.databases == 28);
  CHECK(c.to_kv().to_kv().find("unit basis") != std::string::npos);
}

TEST_CASE("privacy rejects t above k and trivial t = 0 is fine") {
  CHECK_THROWS_AS(exhaustive_privacy(*make_toy_f3(), 3), PirError);
  CHECK(oa_family_check(*make_trivial()).pass());
}

TEST_CASE("reports are deterministic") {
  const auto a = build_instance("lagrange", {}).inst;
  const auto b = build_instance("lagrange", {}).inst;
  CHECK(exhaustive_correctness(*a).to_text() == exhaustive_correctness(*b).to_text());
  CHECK(exhaustive_privacy(*a, 1).to_text() == exhaustive_privacy(*b, 1).to_text());
  CHECK(oa_family_check(*a).to_text() == oa_family_check(*b).to_text());
  CHECK(span_sweep(*a).to_text() == span_sweep(*b).to_text());
}

TEST_CASE("communication audit") {
  const auto inst = protocols::build_cgks(8);
  const auto r = sim::run_inprocess(inst, Database::from_mask(8, 0x5a), 3, 9);
  const auto good = comm_audit(*inst, r.transcript);
  CHECK(good.pass());
  CHECK(good.raw_bits == doctest::Approx(26));
  CHECK(good.measured_payload_bytes == good.expected_payload_bytes);
  auto t = r.transcript;
  t.servers[0].answer_payload += 1;
  CHECK_FALSE(comm_audit(*inst, t).pass());
  t = r.transcript;
  t.servers.pop_back();
  CHECK_FALSE(comm_audit(*inst, t).pass());
}
