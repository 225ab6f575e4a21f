#include "pirlab/protocols/interpolation.hpp"

#include "pirlab/errors.hpp"

namespace pirlab::protocols {

algebra::Matrix interpolation_matrix(const algebra::PrimeField& field, const std::vector<u64>& points,
                                     const std::vector<u64>& support, unsigned multiplicity) {
  if (multiplicity != 1 && multiplicity != 2) throw PirError(ErrorCode::ParamError, "multiplicity must be 1 or 2");
  algebra::Matrix a;
  for (u64 delta : support) {
    std::vector<u64> row;
    for (u64 b : points) {
      const u64 b_pow = field.pow(b, delta);
      row.push_back(b_pow);
      if (multiplicity == 2) {
        const u64 c = field.from_u64(delta);
        row.push_back(c == 0 ? 0 : field.mul(c, field.div(b_pow, b)));
      }
    }
    a.push_back(std::move(row));
  }
  return a;
}

std::optional<std::vector<u64>> constant_term_weights(const algebra::PrimeField& field,
                                                      const std::vector<u64>& points,
                                                      const std::vector<u64>& support,
                                                      unsigned multiplicity) {
  if (support.empty() || support.front() != 0) {
    throw PirError(ErrorCode::ParamError, "support must start with the exponent 0");
  }
  for (u64 b : points) {
    if (b == 0) throw PirError(ErrorCode::ParamError, "evaluation points must be nonzero");
  }
  std::vector<u64> rhs(support.size(), 0);
  rhs[0] = field.one();
  return algebra::try_solve(field, interpolation_matrix(field, points, support, multiplicity), rhs);
}

std::vector<u64> hermite_mu(const algebra::PrimeField& field, std::size_t k) {
  std::vector<u64> points, support;
  for (std::size_t j = 1; j <= k; ++j) points.push_back(j);
  for (std::size_t c = 0; c < 2 * k; ++c) support.push_back(c);
  const auto a = interpolation_matrix(field, points, support, 2);
  if (algebra::determinant(field, a) == 0) {
    throw PirError(ErrorCode::SingularM, "Hermite matrix is singular over F_" + std::to_string(field.modulus()));
  }
  return *constant_term_weights(field, points, support, 2);
}

}  // namespace pirlab::protocols
