#include "pirlab/mv/decoding_poly.hpp"

#include "pirlab/algebra/linalg.hpp"
#include "pirlab/errors.hpp"
#include "pirlab/mv/canonical.hpp"

namespace pirlab::mv {

using algebra::PrimeField;
using algebra::Term;
using algebra::UniPoly;

std::vector<u64> DecodingPoly::exponents() const {
  std::vector<u64> out;
  for (const Term& t : poly.terms()) out.push_back(t.exponent);
  return out;
}

std::vector<u64> DecodingPoly::coefficients() const {
  std::vector<u64> out;
  for (const Term& t : poly.terms()) out.push_back(t.coeff);
  return out;
}

std::optional<std::string> check_decoding_poly(const DecodingPoly& dp) {
  const PrimeField f(dp.p);
  if ((dp.p - 1) % dp.m != 0) return "m does not divide p - 1";
  if (f.multiplicative_order(dp.g) != dp.m) return "g does not have order m";
  for (const Term& t : dp.poly.terms()) {
    if (t.exponent >= dp.m) return "exponent " + std::to_string(t.exponent) + " not in Z_m";
  }
  if (algebra::poly_eval(f, dp.poly, f.one()) != f.one()) return "P(1) != 1";
  for (u64 delta : canonical_set(dp.m)) {
    if (algebra::poly_eval(f, dp.poly, f.pow(dp.g, delta)) != 0) {
      return "P(g^" + std::to_string(delta) + ") != 0";
    }
  }
  return std::nullopt;
}

namespace {

void require_valid(const DecodingPoly& dp) {
  if (auto err = check_decoding_poly(dp)) throw PirError(ErrorCode::DecodingPolyInvalid, *err);
}

void require_setup(u64 m, u64 p, u64 g) {
  const PrimeField f(p);
  if ((p - 1) % m != 0) throw PirError(ErrorCode::ParamError, "m must divide p - 1");
  if (f.multiplicative_order(g) != m) throw PirError(ErrorCode::ParamError, "g must have order m");
}

}  // namespace

DecodingPoly trivial_decoding_poly(u64 m, u64 p, u64 g) {
  require_setup(m, p, g);
  const PrimeField f(p);
  // Dense product of (theta - g^delta); degree 2^r - 1 < m.
  std::vector<u64> c{f.one()};
  u64 norm = f.one();
  for (u64 delta : canonical_set(m)) {
    const u64 root = f.pow(g, delta);
    std::vector<u64> next(c.size() + 1, 0);
    for (std::size_t e = 0; e < c.size(); ++e) {
      next[e + 1] = f.add(next[e + 1], c[e]);
      next[e] = f.sub(next[e], f.mul(root, c[e]));
    }
    c = std::move(next);
    norm = f.mul(norm, f.sub(f.one(), root));
  }
  const u64 inv = f.inv(norm);
  for (u64& x : c) x = f.mul(x, inv);
  DecodingPoly dp{m, p, g, UniPoly::from_dense(f, c)};
  require_valid(dp);
  return dp;
}

DecodingPoly sparse_decoding_poly_search(u64 m, u64 p, u64 g, std::size_t k_target,
                                         const SparseSearchOptions& opt, SparseSearchStats* stats) {
  require_setup(m, p, g);
  const PrimeField f(p);
  const auto s = canonical_set(m);
  if (k_target == 0 || k_target >= s.size() + 1) {
    throw PirError(ErrorCode::ParamError, "k_target must be below 2^r");
  }
  // powers[delta][d] = g^{delta d}
  std::vector<std::vector<u64>> powers(s.size(), std::vector<u64>(m));
  for (std::size_t r = 0; r < s.size(); ++r) {
    const u64 base = f.pow(g, s[r]);
    u64 acc = f.one();
    for (u64 d = 0; d < m; ++d) {
      powers[r][d] = acc;
      acc = f.mul(acc, base);
    }
  }
  std::vector<u64> rhs(s.size() + 1, 0);
  rhs[0] = f.one();

  std::vector<u64> exps(k_target);
  for (std::size_t j = 0; j < k_target; ++j) exps[j] = j;
  u64 examined = 0;
  while (true) {
    if (opt.translation_symmetry && exps[0] != 0) break;
    if (++examined > opt.budget) {
      if (stats) stats->examined = examined - 1;
      throw PirError(ErrorCode::Exhausted, "sparse search budget exhausted");
    }
    algebra::Matrix a(s.size() + 1, std::vector<u64>(k_target, f.one()));
    for (std::size_t r = 0; r < s.size(); ++r) {
      for (std::size_t j = 0; j < k_target; ++j) a[r + 1][j] = powers[r][exps[j]];
    }
    if (auto rho = algebra::try_solve(f, a, rhs)) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < k_target; ++j) terms.push_back({exps[j], (*rho)[j]});
      DecodingPoly dp{m, p, g, UniPoly::from_terms(f, terms)};
      if (dp.monomial_count() == k_target) {
        require_valid(dp);
        if (stats) stats->examined = examined;
        return dp;
      }
    }
    // Next k-subset of Z_m in lexicographic order.
    std::size_t j = k_target;
    while (j > 0 && exps[j - 1] == m - k_target + (j - 1)) --j;
    if (j == 0) break;
    ++exps[j - 1];
    for (std::size_t q = j; q < k_target; ++q) exps[q] = exps[q - 1] + 1;
  }
  if (stats) stats->examined = examined;
  throw PirError(ErrorCode::Exhausted, "no S_m-decoding polynomial with " + std::to_string(k_target) +
                                           " monomials for m = " + std::to_string(m));
}

u64 prime_one_mod(u64 m, u64 lower) {
  for (u64 p = (lower / m + 1) * m + 1;; p += m) {
    if (algebra::is_prime(p)) return p;
  }
}

}  // namespace pirlab::mv
