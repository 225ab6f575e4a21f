#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::algebra {

struct Term {
  u64 exponent;
  u64 coeff;

  bool operator==(const Term&) const = default;
};

// Sparse univariate polynomial. Exponents strictly increase and no zero coefficient is
// stored; the coefficient structure is supplied by the caller at construction and evaluation.
class UniPoly {
 public:
  UniPoly() = default;

  template <class Ring>
  static UniPoly from_terms(const Ring& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    UniPoly p;
    for (const Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
        p.terms_.back().coeff = ring.add(p.terms_.back().coeff, t.coeff);
      } else {
        p.terms_.push_back(t);
      }
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
  }

  template <class Ring>
  static UniPoly from_dense(const Ring& ring, std::span<const u64> coeffs) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) terms.push_back({e, coeffs[e]});
    return from_terms(ring, std::move(terms));
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t monomial_count() const { return terms_.size(); }

  bool operator==(const UniPoly&) const = default;

 private:
  std::vector<Term> terms_;
};

// Sum of coeff * theta^exp, each power by square-and-multiply.
template <class Ring>
u64 poly_eval(const Ring& ring, const UniPoly& p, u64 theta) {
  u64 acc = ring.zero();
  for (const Term& t : p.terms()) acc = ring.add(acc, ring.mul(t.coeff, ring.pow(theta, t.exponent)));
  return acc;
}

}  // namespace pirlab::algebra
