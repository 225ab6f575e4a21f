#include <doctest.h>

#include <random>

#include "pirlab/errors.hpp"
#include "pirlab/foasc/engine.hpp"
#include "pirlab/foasc/instance.hpp"
#include "pirlab/foasc/oa.hpp"
#include "pirlab/foasc/toy_instances.hpp"

using namespace pirlab;
using namespace pirlab::foasc;

namespace {

OAMatrix even_weight_array() {
  OAMatrix a;
  a.columns = 4;
  for (u64 r = 0; r < 16; ++r) {
    std::vector<u64> row(4);
    int w = 0;
    for (int c = 0; c < 4; ++c) w += row[c] = (r >> (3 - c)) & 1;
    if (w % 2 == 0) a.rows.push_back(row);
  }
  return a;
}

}  // namespace

TEST_CASE("even-weight binary array has strength 3 but not 4") {
  const OAMatrix a = even_weight_array();
  REQUIRE(a.rows.size() == 8);
  CHECK(a.rows[1] == std::vector<u64>{0, 0, 1, 1});
  CHECK(a.rows[7] == std::vector<u64>{1, 1, 1, 1});
  for (std::size_t t = 1; t <= 3; ++t) {
    const auto r = oa_strength_check(a, 2, t);
    CHECK(r.ok);
    CHECK(r.index == (8u >> t));
  }
  const auto r4 = oa_strength_check(a, 2, 4);
  CHECK_FALSE(r4.ok);
  CHECK(r4.tuple == std::vector<u64>{0, 0, 0, 0});
  CHECK(r4.count == 1);
  CHECK(!r4.detail.empty());
}

TEST_CASE("strength check reports the first offending tuple") {
  OAMatrix a;
  a.columns = 2;
  a.rows = {{0, 0}, {0, 1}, {1, 0}, {1, 0}};
  const auto r = oa_strength_check(a, 2, 1);
  CHECK_FALSE(r.ok);
  CHECK(r.columns == std::vector<std::size_t>{1});
  CHECK(r.tuple == std::vector<u64>{0});
  CHECK(r.count == 3);
  CHECK_THROWS_AS(oa_strength_check(a, 2, 0), PirError);
  CHECK_THROWS_AS(oa_strength_check(a, 2, 3), PirError);
  CHECK_THROWS_AS(oa_strength_check(a, 2, 1, 3), PirError);
}

TEST_CASE("toy F_3 instance") {
  const auto inst = make_toy_f3();
  CHECK(inst->protocol_id() == "toy-f3");
  CHECK(inst->n() == 2);
  CHECK(inst->k() == 2);
  CHECK(*inst->randomness().size() == 9);

  SUBCASE("rows form strength-1 arrays over a 9-point level set") {
    for (std::size_t i = 0; i < 2; ++i) {
      const auto a = materialize_oa(*inst, i);
      const auto r = oa_strength_check(a, 9, 1);
      CHECK(r.ok);
      CHECK(r.index == 1);
    }
  }
  SUBCASE("span identity for every (i, l)") {
    for (std::size_t i = 0; i < 2; ++i)
      for (u64 l = 0; l < 9; ++l) CHECK(span_check(*inst, i, {l}).pass);
    const ReconCoeff bad{{RingVec{{1}}, RingVec{{1}}}, 1};
    CHECK_FALSE(span_check(*inst, 0, {0}, bad).pass);
  }
  SUBCASE("retrieval over all databases") {
    for (u64 mask = 0; mask < 4; ++mask) {
      const auto x = Database::from_mask(2, mask);
      for (std::size_t i = 0; i < 2; ++i) {
        for (u64 l = 0; l < 9; ++l) {
          const auto q = query_for(*inst, i, {l});
          std::vector<RingVec> a;
          for (const auto& z : q.queries) a.push_back(answer(*inst, x, z));
          CHECK(reconstruct(*inst, q.aux, a) == x[i]);
        }
      }
    }
  }
  SUBCASE("reconstruct rejects inconsistent answers") {
    const auto q = query_for(*inst, 0, {0});
    const std::vector<RingVec> a{RingVec{{1}}, RingVec{{0}}};  // y = 2
    try {
      (void)reconstruct(*inst, q.aux, a);
      FAIL("expected InconsistentAnswer");
    } catch (const PirError& e) {
      CHECK(e.code() == ErrorCode::InconsistentAnswer);
    }
  }
  SUBCASE("communication") {
    const auto c = comm_cost(*inst);
    CHECK(c.total_bits == doctest::Approx(2 * (std::log2(9.0) + std::log2(3.0))));
    CHECK(c.total_bits == doctest::Approx(9.5098).epsilon(1e-4));
    CHECK(c.total_bytes == 2 * (c.query_bytes + c.answer_bytes));
  }
  SUBCASE("out-of-range inputs") {
    CHECK_THROWS_AS(query_for(*inst, 2, {0}), PirError);
    CHECK_THROWS_AS(query_for(*inst, 0, {9}), PirError);
    CHECK_THROWS_AS(answer(*inst, Database::zeros(3), {0, 0}), PirError);
    CHECK_THROWS_AS(answer(*inst, Database::zeros(2), {0, 3}), PirError);
  }
}

TEST_CASE("trivial single-server instance") {
  const auto inst = make_trivial();
  CHECK(inst->t() == 0);
  for (u64 l = 0; l < 2; ++l) CHECK(span_check(*inst, 0, {l}).pass);
  const auto q = query_gen(*inst, 0, 5);
  std::vector<RingVec> a{answer(*inst, Database::from_mask(1, 1), q.queries[0])};
  CHECK(reconstruct(*inst, q.aux, a) == 1);
}

TEST_CASE("defective instances") {
  const auto ignores = make_broken(Defect::IgnoresRandomness);
  CHECK(span_check(*ignores, 1, {4}).pass);
  CHECK_FALSE(oa_strength_check(materialize_oa(*ignores, 0), 9, 1).ok);
  const auto wrong = make_broken(Defect::WrongLambda);
  CHECK_FALSE(span_check(*wrong, 0, {0}).pass);
  CHECK(oa_strength_check(materialize_oa(*wrong, 0), 9, 1).ok);
}

TEST_CASE("randomness space indexing") {
  const RandomnessSpace s({3, 5, 2});
  CHECK(*s.size() == 30);
  CHECK(s.log2_size() == doctest::Approx(std::log2(30.0)));
  for (u64 idx = 0; idx < 30; ++idx) CHECK(s.index_of(s.at(idx)) == idx);
  CHECK_FALSE(s.contains({3, 0, 0}));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) CHECK(s.contains(s.sample(rng)));
}

TEST_CASE("level codec and ring vector round trips") {
  std::mt19937_64 rng(11);
  const LevelCodec box = LevelCodec::box({7, 300, 2}, "box");
  CHECK(box.cardinality() == 4200);
  for (int trial = 0; trial < 200; ++trial) {
    const LevelPoint z{rng() % 7, rng() % 300, rng() % 2};
    std::vector<std::uint8_t> buf;
    box.encode(z, buf);
    CHECK(buf.size() == box.bytes());
    CHECK(box.decode(buf) == z);
  }
  std::vector<std::uint8_t> bad;
  box.encode({6, 299, 1}, bad);
  bad[0] = 7;
  CHECK_FALSE(box.decode(bad).has_value());
  bad.pop_back();
  CHECK_FALSE(box.decode(bad).has_value());

  const LevelCodec odd({3, 3}, 5, "odd", [](const LevelPoint& z) { return (z[0] + z[1]) % 2 == 0; });
  CHECK(odd.contains({1, 1}));
  CHECK_FALSE(odd.contains({0, 1}));

  const algebra::PrimeFieldRing f(algebra::PrimeField(257));
  for (int trial = 0; trial < 100; ++trial) {
    RingVec v{{rng() % 257, rng() % 257, rng() % 257}};
    std::vector<std::uint8_t> buf;
    encode_ring_vec(f, v, buf);
    CHECK(decode_ring_vec(f, 3, buf) == v);
  }
}

TEST_CASE("reports and digests are deterministic") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  const auto a = make_toy_f3(), b = make_toy_f3();
  CHECK(a->report().to_kv() == b->report().to_kv());
  CHECK(a->digest() == b->digest());
  CHECK(a->digest() != make_broken(Defect::WrongLambda)->digest());
  CHECK(format_bits(9.50977500432694) == "9.509775");
}
