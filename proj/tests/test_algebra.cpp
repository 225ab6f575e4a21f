#include <doctest.h>

#include <random>

#include "pirlab/algebra/ext_field.hpp"
#include "pirlab/algebra/group_ring.hpp"
#include "pirlab/algebra/hasse.hpp"
#include "pirlab/algebra/int_ring.hpp"
#include "pirlab/algebra/linalg.hpp"
#include "pirlab/algebra/poly.hpp"
#include "pirlab/algebra/prime_field.hpp"
#include "pirlab/algebra/scalar_ring.hpp"
#include "pirlab/errors.hpp"

using namespace pirlab;
using namespace pirlab::algebra;

TEST_CASE("modular helpers") {
  CHECK(pow_mod(3, 6, 7) == 1);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(2, 6), PirError);
  CHECK(is_prime(3067));
  CHECK(is_prime(2305843009213693951ull));
  CHECK_FALSE(is_prime(511));
  CHECK(factorize(511) == std::vector<u64>{7, 73});
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(bytes_for_bound(2) == 1);
  CHECK(bytes_for_bound(256) == 1);
  CHECK(bytes_for_bound(257) == 2);
  CHECK(reduce_signed(-1, 5) == 4);
  std::vector<std::uint8_t> buf;
  put_le(0x0102, 2, buf);
  CHECK(buf == std::vector<std::uint8_t>{2, 1});
  CHECK(get_le(buf.data(), 2) == 0x0102);
}

TEST_CASE("prime field elements of a given order") {
  const PrimeField f(7);
  CHECK(f.multiplicative_order(3) == 6);
  const u64 g = f.find_order_element(6);
  CHECK(f.multiplicative_order(g) == 6);
  CHECK(f.find_order_element(1) == 1);
  CHECK_THROWS_AS(f.find_order_element(4), PirError);
  try {
    (void)f.inv(0);
    FAIL("expected NonUnit");
  } catch (const PirError& e) {
    CHECK(e.code() == ErrorCode::NonUnit);
  }
  const PrimeField big(3067);
  CHECK(big.multiplicative_order(big.find_order_element(511)) == 511);
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(7);
  const PrimeField f(101);
  const ExtField e = ExtField::standard(3, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const u64 a = rng() % 101, b = rng() % 101, c = rng() % 101;
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    const u64 x = rng() % 9, y = rng() % 9, z = rng() % 9;
    CHECK(e.mul(x, e.add(y, z)) == e.add(e.mul(x, y), e.mul(x, z)));
    CHECK(e.mul(e.mul(x, y), z) == e.mul(x, e.mul(y, z)));
    if (x) CHECK(e.mul(x, e.inv(x)) == 1);
  }
}

TEST_CASE("F_8 with x^3 + x + 1") {
  const ExtField f = ExtField::standard(2, 3);
  CHECK(f.modulus() == std::vector<u64>{1, 1, 0, 1});
  const u64 x = f.x();
  // x^3 = x + 1
  CHECK(f.pow(x, 3) == f.add(x, 1));
  CHECK(f.multiplicative_order(x) == 7);
  CHECK(f.to_coeffs(f.pow(x, 2)) == std::vector<u64>{0, 0, 1});
  CHECK_THROWS_AS(ExtField(2, {1, 0, 1}), PirError);  // x^2 + 1 = (x + 1)^2
}

TEST_CASE("integer ring CRT") {
  const IntRing z(6);
  CHECK(z.prime_factors() == std::vector<u64>{2, 3});
  for (u64 a = 0; a < 6; ++a) CHECK(z.crt_combine(z.crt_split(a)) == a);
  CHECK_THROWS_AS(IntRing(12), PirError);
  const u64 res[2] = {1, 1}, mod[2] = {7, 73};
  CHECK(crt_combine(res, mod) == 1);
}

TEST_CASE("group ring Z_6[g]/(g^6 - 1)") {
  const GroupRing r(6);
  CHECK(r.packable());
  const auto g2 = r.monomial(2), g5 = r.monomial(5);
  CHECK(r.mul(g2, g5) == r.monomial(1));
  const auto a = r.add(r.one(), r.scale(5, r.monomial(3)));
  CHECK(r.unpack(r.pack(a)) == a);
  CHECK(r.reduce_mod(r.scale(3, r.one()), 3) == std::vector<u64>(6, 0));
  CHECK(r.element_bits() == doctest::Approx(6 * std::log2(6.0)));
  CHECK_FALSE(GroupRing(30).packable());
  CHECK_THROWS_AS(GroupRing(16), PirError);
}

TEST_CASE("linear algebra over F_p and Z_m") {
  const PrimeField f(5);
  const Matrix a = {{1, 2}, {3, 4}};
  const std::vector<u64> b{1, 0};
  const auto x = linear_solve(f, a, b);
  CHECK(mat_vec(f, a, x) == b);
  CHECK(determinant(f, a) == f.from_int(-2));
  CHECK(rank(f, {{1, 2}, {2, 4}}) == 1);
  CHECK(nullspace(f, {{1, 2}, {2, 4}}, 2).size() == 1);
  CHECK_THROWS_AS(linear_solve(f, {{1, 2}, {2, 4}}, std::vector<u64>{1, 0}), PirError);
  const IntRing z(6);
  const auto y = linear_solve(z, {{2, 1}, {1, 3}}, std::vector<u64>{1, 0});
  CHECK((2 * y[0] + y[1]) % 6 == 1);
  CHECK((y[0] + 3 * y[1]) % 6 == 0);
  CHECK_THROWS_AS(linear_solve(z, {{5, 1}, {1, 1}}, std::vector<u64>{1, 0}), PirError);
}

TEST_CASE("sparse polynomials and Hasse derivatives") {
  const PrimeField f(7);
  const auto p = UniPoly::from_terms(f, {{3, 1}, {0, 2}, {3, 6}});
  CHECK(p.monomial_count() == 1);  // x^3 terms cancel
  CHECK(poly_eval(f, p, 5) == 2);
  CHECK(binomial(5, 2) == 10);
  const auto idx = multi_indices_below(3, 2);
  REQUIRE(idx.size() == 4);
  CHECK(idx[0].weight() == 0);
  CHECK(idx[1].i == std::vector<u64>{1, 0, 0});
  CHECK(idx[3].i == std::vector<u64>{0, 0, 1});
  // d/dz1 of z1^3 z2 at (2, 3) = 3 * 4 * 3 = 36 = 1 mod 7
  const std::vector<u64> u{3, 1}, z{2, 3};
  CHECK(hasse_of_monomial(f, u, MultiIndex{{1, 0}}, z) == 1);
  CHECK(hasse_of_monomial(f, u, MultiIndex{{0, 2}}, z) == 0);
  // second Hasse derivative of z^7 over F_7 is C(7,2) z^5 = 0, the first is 7 z^6 = 0
  const std::vector<u64> u7{7}, z1{3};
  CHECK(hasse_of_monomial(f, u7, MultiIndex{{1}}, z1) == 0);
}

TEST_CASE("scalar ring adapters encode canonically") {
  const PrimeFieldRing f3(PrimeField(3));
  std::vector<std::uint8_t> buf;
  f3.encode(2, buf);
  CHECK(buf.size() == 1);
  CHECK(f3.decode(buf) == 2u);
  const std::uint8_t bad[1] = {3};
  CHECK_FALSE(f3.decode(bad).has_value());
  const ExtFieldRing f8(ExtField::standard(2, 3));
  buf.clear();
  f8.encode(5, buf);
  CHECK(buf == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(f8.decode(buf) == 5u);
  const GroupRingScalars g6{GroupRing(6)};
  buf.clear();
  const u64 e = g6.mul(g6.one(), g6.one());
  g6.encode(e, buf);
  CHECK(buf.size() == 6);
  CHECK(g6.decode(buf) == e);
}
