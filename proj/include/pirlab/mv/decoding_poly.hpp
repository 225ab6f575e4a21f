#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pirlab/algebra/poly.hpp"
#include "pirlab/algebra/prime_field.hpp"

namespace pirlab::mv {

using algebra::u64;

// P(theta) = sum_j rho_j theta^{d_j} over F_p with exponents d_j in Z_m.
struct DecodingPoly {
  u64 m = 0;
  u64 p = 0;
  u64 g = 0;  // element of order m in F_p
  algebra::UniPoly poly;

  std::size_t monomial_count() const { return poly.monomial_count(); }
  std::vector<u64> exponents() const;
  std::vector<u64> coefficients() const;
};

// Returns a description of the first failed identity (P(g^delta) = 0 for delta in S_m,
// P(1) = 1, exponents below m), or nullopt.
std::optional<std::string> check_decoding_poly(const DecodingPoly& dp);

// prod_{delta in S_m} (theta - g^delta) / prod (1 - g^delta); at most 2^r monomials.
DecodingPoly trivial_decoding_poly(u64 m, u64 p, u64 g);

struct SparseSearchOptions {
  // Fix the smallest exponent to 0. Multiplying P by theta^a keeps every root and P(1),
  // so exponent sets are only searched up to translation.
  bool translation_symmetry = true;
  u64 budget = 100'000'000;  // exponent sets examined
};

struct SparseSearchStats {
  u64 examined = 0;
};

// First exponent set (in lexicographic order) of size k_target whose coefficient
// system is solvable. Throws ParamError if k_target >= 2^r, Exhausted otherwise.
DecodingPoly sparse_decoding_poly_search(u64 m, u64 p, u64 g, std::size_t k_target,
                                         const SparseSearchOptions& opt = {},
                                         SparseSearchStats* stats = nullptr);

// Least prime p with p = 1 (mod m) and p > lower.
u64 prime_one_mod(u64 m, u64 lower = 1);

}  // namespace pirlab::mv
