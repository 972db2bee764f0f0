#include "congrlat/intlinalg.hpp"

#include <cstddef>
#include <utility>

#include "congrlat/errors.hpp"

namespace congrlat {

BezoutCertificate ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) return {0, {0, 0}};
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, {s0, t0}};
}

BezoutCertificate gcd_vec(const std::vector<Int>& values) {
  if (values.empty()) throw UsageError("gcd_vec: empty list");
  BezoutCertificate cert;
  cert.gcd = abs(values.front());
  cert.coefficients.push_back(sgn(values.front()));
  for (std::size_t i = 1; i < values.size(); ++i) {
    BezoutCertificate step = ext_gcd(cert.gcd, values[i]);
    for (Int& c : cert.coefficients) c *= step.coefficients[0];
    cert.coefficients.push_back(step.coefficients[1]);
    cert.gcd = step.gcd;
  }
  return cert;
}

namespace {

// Combine columns c1 and c2 of every row of m so that row `row` becomes
// (g, 0) at those positions. The 2x2 transform has determinant +1.
void combine_columns(std::vector<std::vector<Int>>& m, std::size_t c1,
                     std::size_t c2, const Int& u, const Int& v, const Int& p,
                     const Int& q) {
  for (auto& r : m) {
    Int a = r[c1], b = r[c2];
    r[c1] = u * a + v * b;
    r[c2] = p * b - q * a;
  }
}

void swap_columns(std::vector<std::vector<Int>>& m, std::size_t c1,
                  std::size_t c2) {
  if (c1 == c2) return;
  for (auto& r : m) std::swap(r[c1], r[c2]);
}

void negate_column(std::vector<std::vector<Int>>& m, std::size_t c) {
  for (auto& r : m) r[c] = -r[c];
}

}  // namespace

ColumnEchelon column_echelon(std::vector<std::vector<Int>> matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
  ColumnEchelon out;
  out.transform.assign(cols, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.transform[i][i] = 1;

  std::size_t col = 0;
  for (std::size_t row = 0; row < rows && col < cols; ++row) {
    std::size_t found = cols;
    for (std::size_t j = col; j < cols; ++j) {
      if (matrix[row][j] != 0) {
        found = j;
        break;
      }
    }
    if (found == cols) continue;
    swap_columns(matrix, col, found);
    swap_columns(out.transform, col, found);
    for (std::size_t j = col + 1; j < cols; ++j) {
      if (matrix[row][j] == 0) continue;
      BezoutCertificate bz = ext_gcd(matrix[row][col], matrix[row][j]);
      Int p = matrix[row][col] / bz.gcd;
      Int q = matrix[row][j] / bz.gcd;
      combine_columns(matrix, col, j, bz.coefficients[0], bz.coefficients[1],
                      p, q);
      combine_columns(out.transform, col, j, bz.coefficients[0],
                      bz.coefficients[1], p, q);
    }
    if (matrix[row][col] < 0) {
      negate_column(matrix, col);
      negate_column(out.transform, col);
    }
    out.pivots.emplace_back(row, col);
    ++col;
  }
  out.h = std::move(matrix);
  return out;
}

std::optional<AffineLattice> solve_diophantine_system(
    const std::vector<std::vector<Int>>& matrix, const std::vector<Int>& rhs) {
  const std::size_t rows = matrix.size();
  if (rows == 0) throw UsageError("solve_diophantine_system: no rows");
  const std::size_t cols = matrix.front().size();
  if (cols == 0) throw UsageError("solve_diophantine_system: no unknowns");
  for (const auto& r : matrix) {
    if (r.size() != cols)
      throw UsageError("solve_diophantine_system: ragged matrix");
  }
  if (rhs.size() != rows)
    throw UsageError("solve_diophantine_system: rhs length mismatch");

  ColumnEchelon ech = column_echelon(matrix);

  // Forward substitution over the echelon form. Pivot columns determine their
  // unknowns by exact division; rows without a pivot must balance exactly.
  std::vector<Int> y(cols, 0);
  std::size_t pi = 0;
  for (std::size_t row = 0; row < rows; ++row) {
    Int s = 0;
    for (std::size_t j = 0; j < pi; ++j) s += ech.h[row][j] * y[j];
    if (pi < ech.pivots.size() && ech.pivots[pi].first == row) {
      Int rem = rhs[row] - s;
      const Int& pivot = ech.h[row][pi];
      if (!divides(pivot, rem)) return std::nullopt;
      y[pi] = rem / pivot;
      ++pi;
    } else if (s != rhs[row]) {
      return std::nullopt;
    }
  }

  AffineLattice lat;
  lat.arity = cols;
  lat.particular.assign(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < pi; ++j)
      lat.particular[i] += ech.transform[i][j] * y[j];
  }
  for (std::size_t j = ech.pivots.size(); j < cols; ++j) {
    std::vector<Int> dir(cols);
    for (std::size_t i = 0; i < cols; ++i) dir[i] = ech.transform[i][j];
    lat.basis.push_back(std::move(dir));
  }
  return lat;
}

std::optional<AffineLattice> solve_linear_diophantine(
    const std::vector<Int>& coeffs, const Int& rhs) {
  if (coeffs.empty()) throw UsageError("solve_linear_diophantine: no unknowns");
  return solve_diophantine_system({coeffs}, {rhs});
}

Int lcm_vec(const std::vector<Int>& values) {
  if (values.empty()) throw UsageError("lcm_vec: empty list");
  Int acc = 1;
  for (const Int& v : values) {
    if (v == 0) throw UsageError("lcm_vec: zero entry");
    acc = lcm(acc, v);
  }
  return acc;
}

}  // namespace congrlat
