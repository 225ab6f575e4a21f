#include <doctest.h>

#include "pirlab/algebra/ext_field.hpp"
#include "pirlab/algebra/prime_field.hpp"
#include "pirlab/errors.hpp"
#include "pirlab/mv/canonical.hpp"
#include "pirlab/mv/decoding_poly.hpp"
#include "pirlab/mv/kr_table.hpp"
#include "pirlab/mv/matching_family.hpp"
#include "pirlab/mv/nice_sets.hpp"

using namespace pirlab;
using namespace pirlab::mv;

TEST_CASE("canonical sets") {
  CHECK(canonical_set(6) == std::vector<u64>{1, 3, 4});
  CHECK(canonical_set_with_zero(6) == std::vector<u64>{0, 1, 3, 4});
  CHECK(canonical_set(511) == std::vector<u64>{1, 147, 365});
  CHECK(canonical_set(15).size() == 3);
}

TEST_CASE("matching family search and checker") {
  const auto fam = search_matching_family(6, 3, {1, 3, 4}, 4);
  CHECK(fam.size() == 4);
  CHECK_FALSE(check_matching_family(fam).has_value());
  for (std::size_t i = 0; i < 4; ++i) CHECK(inner_mod(fam.u[i], fam.v[i], 6) == 0);

  auto broken = fam;
  broken.v[1] = broken.v[0];
  CHECK(check_matching_family(broken).has_value());

  const auto strict = search_matching_family(6, 3, {1, 3, 4}, 4, {.ones_nonzero = true});
  CHECK_FALSE(check_matching_family(strict, true).has_value());

  CHECK_THROWS_AS(search_matching_family(6, 3, {1, 3, 4}, 4, {.vector_cap = 100}), PirError);
  CHECK_THROWS_AS(search_matching_family(6, 3, {1, 3, 4}, 4, {.node_budget = 1}), PirError);
  try {
    (void)search_matching_family(6, 1, {1, 3, 4}, 6);
    FAIL("expected Exhausted");
  } catch (const PirError& e) {
    CHECK(e.code() == ErrorCode::Exhausted);
  }
}

TEST_CASE("decoding polynomials") {
  const algebra::PrimeField f(7);
  CHECK(f.multiplicative_order(3) == 6);
  const auto dp = trivial_decoding_poly(6, 7, 3);
  CHECK_FALSE(check_decoding_poly(dp).has_value());
  CHECK(dp.monomial_count() <= 4);
  CHECK(dp.exponents() == std::vector<u64>{0, 1, 2, 3});
  CHECK(dp.coefficients() == std::vector<u64>{1, 1, 3, 3});

  auto bad = dp;
  bad.poly = algebra::UniPoly::from_terms(f, {{0, 1}, {1, 1}});
  CHECK(check_decoding_poly(bad).has_value());

  CHECK(prime_one_mod(511) == 3067);
  CHECK(prime_one_mod(6) == 7);
}

TEST_CASE("sparse search at m = 511 finds three monomials") {
  const u64 p = prime_one_mod(511);
  const u64 g = algebra::PrimeField(p).find_order_element(511);
  SparseSearchStats stats;
  const auto dp = sparse_decoding_poly_search(511, p, g, 3, {}, &stats);
  CHECK(dp.monomial_count() == 3);
  CHECK_FALSE(check_decoding_poly(dp).has_value());
  CHECK(dp.exponents().front() == 0);
  CHECK(stats.examined > 0);
  CHECK_THROWS_AS(sparse_decoding_poly_search(511, p, g, 2, {.budget = 1000}), PirError);
}

TEST_CASE("nice sets for p = 7") {
  CHECK(powers_of_two(7) == std::vector<u64>{1, 2, 4});
  const auto ns = yekhanin_nice_sets(3);
  CHECK(ns.p == 7);
  CHECK(ns.gamma == 3);
  CHECK(ns.s1 == std::vector<u64>{0, 1, 3});
  CHECK(ns.s0 == std::vector<u64>{0, 2, 3, 4});
  CHECK_FALSE(check_nice_sets(ns).has_value());
  // 1 + x + x^3 = 0 in F_8
  const auto f8 = algebra::ExtField::standard(2, 3);
  const u64 x = f8.x();
  CHECK(f8.add(f8.add(1, x), f8.pow(x, 3)) == 0);
  auto bad = ns;
  bad.s0 = {0, 1, 2};
  CHECK(check_nice_sets(bad).has_value());
  CHECK_THROWS_AS(yekhanin_nice_sets(4), PirError);  // 15 is not prime
}

TEST_CASE("k_r table") {
  CHECK(k_r_table(2) == 3);
  CHECK(k_r_table(3) == 8);
  CHECK(k_r_table(4) == 9);
  CHECK(k_r_table(104) == boost::multiprecision::cpp_int("8614775852302231065242988"));
}
