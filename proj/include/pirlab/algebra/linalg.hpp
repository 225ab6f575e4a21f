#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pirlab/algebra/int_ring.hpp"
#include "pirlab/algebra/prime_field.hpp"

namespace pirlab::algebra {

// Row-major dense matrix; every row has the same length.
using Matrix = std::vector<std::vector<u64>>;

std::optional<std::vector<u64>> try_solve(const PrimeField& field, const Matrix& a,
                                          std::span<const u64> b);

// Any x with A x = b (free variables set to zero); throws PirError(NoSolution).
std::vector<u64> linear_solve(const PrimeField& field, const Matrix& a, std::span<const u64> b);

// Solves independently modulo each prime factor and recombines by CRT;
// throws NoSolution if any component is inconsistent.
std::vector<u64> linear_solve(const IntRing& ring, const Matrix& a, std::span<const u64> b);

// Basis of {x : A x = 0}.
std::vector<std::vector<u64>> nullspace(const PrimeField& field, const Matrix& a, std::size_t cols);

std::size_t rank(const PrimeField& field, Matrix a);

u64 determinant(const PrimeField& field, Matrix a);

std::vector<u64> mat_vec(const PrimeField& field, const Matrix& a, std::span<const u64> x);

}  // namespace pirlab::algebra
