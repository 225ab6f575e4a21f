#include "pirlab/algebra/linalg.hpp"

#include <utility>

#include "pirlab/errors.hpp"

namespace pirlab::algebra {
namespace {

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> rref(const PrimeField& f, Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const u64 inv = f.inv(a[row][col]);
    for (u64& v : a[row]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const u64 factor = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) {
        a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_shape(const Matrix& a, std::size_t rows_expected) {
  if (a.size() != rows_expected) throw PirError(ErrorCode::DimensionMismatch, "row count mismatch");
  for (const auto& r : a) {
    if (r.size() != a.front().size()) throw PirError(ErrorCode::DimensionMismatch, "ragged matrix");
  }
}

}  // namespace

std::optional<std::vector<u64>> try_solve(const PrimeField& field, const Matrix& a,
                                          std::span<const u64> b) {
  check_shape(a, b.size());
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(field.from_u64(b[r]));
  const auto pivots = rref(field, aug, cols);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (aug[r][cols] != 0) return std::nullopt;
  }
  std::vector<u64> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::vector<u64> linear_solve(const PrimeField& field, const Matrix& a, std::span<const u64> b) {
  auto x = try_solve(field, a, b);
  if (!x) throw PirError(ErrorCode::NoSolution, "inconsistent system over F_" + std::to_string(field.modulus()));
  return *x;
}

std::vector<u64> linear_solve(const IntRing& ring, const Matrix& a, std::span<const u64> b) {
  check_shape(a, b.size());
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<u64>> parts;
  for (u64 q : ring.prime_factors()) {
    const PrimeField f(q);
    Matrix aq = a;
    for (auto& row : aq) {
      for (u64& v : row) v %= q;
    }
    std::vector<u64> bq(b.begin(), b.end());
    for (u64& v : bq) v %= q;
    auto x = try_solve(f, aq, bq);
    if (!x) throw PirError(ErrorCode::NoSolution, "inconsistent modulo prime " + std::to_string(q));
    parts.push_back(std::move(*x));
  }
  std::vector<u64> out(cols);
  std::vector<u64> residues(parts.size());
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t j = 0; j < parts.size(); ++j) residues[j] = parts[j][c];
    out[c] = ring.crt_combine(residues);
  }
  return out;
}

std::vector<std::vector<u64>> nullspace(const PrimeField& field, const Matrix& a, std::size_t cols) {
  Matrix m = a;
  for (const auto& r : m) {
    if (r.size() != cols) throw PirError(ErrorCode::DimensionMismatch, "row length differs from cols");
  }
  const auto pivots = rref(field, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const PrimeField& field, Matrix a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  return rref(field, a, cols).size();
}

u64 determinant(const PrimeField& field, Matrix a) {
  const std::size_t n = a.size();
  for (const auto& r : a) {
    if (r.size() != n) throw PirError(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  }
  u64 det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return field.zero();
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = field.neg(det);
    }
    det = field.mul(det, a[col][col]);
    const u64 inv = field.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const u64 factor = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]));
    }
  }
  return det;
}

std::vector<u64> mat_vec(const PrimeField& field, const Matrix& a, std::span<const u64> x) {
  std::vector<u64> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != x.size()) throw PirError(ErrorCode::DimensionMismatch, "mat_vec shape");
    u64 acc = 0;
    for (std::size_t c = 0; c < row.size(); ++c) acc = field.add(acc, field.mul(row[c], x[c]));
    out.push_back(acc);
  }
  return out;
}

}  // namespace pirlab::algebra
