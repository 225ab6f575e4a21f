#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pirlab/algebra/linalg.hpp"
#include "pirlab/algebra/prime_field.hpp"

namespace pirlab::protocols {

using algebra::u64;

// Rows indexed by the support exponents delta, columns by (point, derivative order):
// column 2j is b_j^delta, column 2j+1 is delta * b_j^{delta-1} (multiplicity 2 only).
// The coefficient delta is reduced mod the characteristic.
algebra::Matrix interpolation_matrix(const algebra::PrimeField& field, const std::vector<u64>& points,
                                     const std::vector<u64>& support, unsigned multiplicity);

// mu with interpolation_matrix * mu = e_1: the constant term of any polynomial supported on
// `support` (which must contain 0 first) is sum_j mu_{2j} phi(b_j) + mu_{2j+1} phi'(b_j).
std::optional<std::vector<u64>> constant_term_weights(const algebra::PrimeField& field,
                                                      const std::vector<u64>& points,
                                                      const std::vector<u64>& support,
                                                      unsigned multiplicity);

// Hermite weights at points 1..k for polynomials of degree < 2k. Throws SingularM.
std::vector<u64> hermite_mu(const algebra::PrimeField& field, std::size_t k);

}  // namespace pirlab::protocols
