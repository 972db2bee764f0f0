#pragma once

// Shared helpers for the test suites. The checks in here deliberately take
// routes independent of the library's solvers: rational elimination for
// lattice membership, direct cube scans for integer solutions, and frozen
// solution tables.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "congrlat/congruence.hpp"
#include "congrlat/intlinalg.hpp"

namespace testsupport {

using congrlat::AffineLattice;
using congrlat::Int;
using congrlat::LinearCongruence;
using congrlat::SolutionSet;

using Vec = std::vector<Int>;
using Mat = std::vector<std::vector<Int>>;

// Solve sum_j columns[j] * k_j == target over the rationals by Gauss-Jordan
// elimination, returning an integer assignment when one exists. Free
// positions get 0; the candidate is verified exactly before acceptance.
inline std::optional<Vec> integer_combination(const Mat& columns,
                                              const Vec& target) {
  const std::size_t n = target.size();
  const std::size_t s = columns.size();
  std::vector<std::vector<mpq_class>> a(n,
                                        std::vector<mpq_class>(s + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) a[i][j] = mpq_class(columns[j][i]);
    a[i][s] = mpq_class(target[i]);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < s && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    mpq_class inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j <= s; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (a[i][s] != 0) return std::nullopt;
  }

  Vec k(s, 0);
  for (auto [r, c] : pivots) {
    mpq_class v = a[r][s];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    k[c] = v.get_num();
  }
  // Exact re-check over the integers.
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < s; ++j) acc += columns[j][i] * k[j];
    if (acc != target[i]) return std::nullopt;
  }
  return k;
}

inline bool lattice_contains(const AffineLattice& lat, const Vec& point) {
  if (point.size() != lat.arity) return false;
  Vec diff(lat.arity);
  for (std::size_t i = 0; i < lat.arity; ++i)
    diff[i] = point[i] - lat.particular[i];
  return integer_combination(lat.basis, diff).has_value();
}

// Rank over Q of a set of vectors, by elimination.
inline std::size_t rational_rank(const Mat& columns, std::size_t n) {
  if (columns.empty()) return 0;
  std::vector<std::vector<mpq_class>> a(columns.size(),
                                        std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(columns[i][j]);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// All integer solutions of matrix * x == rhs with every |x_i| <= radius.
// The last coordinate is solved analytically per prefix, so the scan costs
// (2*radius+1)^(n-1) steps instead of (2*radius+1)^n.
inline std::vector<std::vector<std::int64_t>> cube_solutions(
    const std::vector<std::vector<std::int64_t>>& matrix,
    const std::vector<std::int64_t>& rhs, std::int64_t radius) {
  const std::size_t r = matrix.size();
  const std::size_t n = matrix.front().size();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, -radius);

  for (;;) {
    // Residual per row with the last coordinate still open.
    bool feasible = true;
    std::int64_t forced = 0;
    bool have_forced = false;
    bool free_last = true;
    for (std::size_t i = 0; i < r && feasible; ++i) {
      std::int64_t c = rhs[i];
      for (std::size_t j = 0; j + 1 < n; ++j) c -= matrix[i][j] * x[j];
      std::int64_t an = matrix[i][n - 1];
      if (an == 0) {
        if (c != 0) feasible = false;
      } else {
        free_last = false;
        if (c % an != 0) {
          feasible = false;
        } else {
          std::int64_t v = c / an;
          if (have_forced && v != forced) feasible = false;
          forced = v;
          have_forced = true;
        }
      }
    }
    if (feasible) {
      if (free_last) {
        for (std::int64_t v = -radius; v <= radius; ++v) {
          x[n - 1] = v;
          out.push_back(x);
        }
      } else if (have_forced && forced >= -radius && forced <= radius) {
        x[n - 1] = forced;
        out.push_back(x);
      }
    }

    std::size_t j = n - 1;
    bool advanced = false;
    while (j-- > 0) {
      if (++x[j] <= radius) {
        advanced = true;
        break;
      }
      x[j] = -radius;
    }
    if (n == 1 || !advanced) break;
  }
  return out;
}

inline SolutionSet make_set(const Int& modulus, std::size_t arity,
                            std::vector<Vec> vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  SolutionSet s;
  s.modulus = modulus;
  s.arity = arity;
  s.vectors = std::move(vectors);
  return s;
}

inline Vec iv(std::initializer_list<long> values) {
  Vec v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline LinearCongruence lc(std::initializer_list<long> coeffs, long rhs,
                           long modulus) {
  LinearCongruence c;
  for (long a : coeffs) c.coeffs.emplace_back(a);
  c.rhs = rhs;
  c.modulus = modulus;
  return c;
}

// The sixteen solution triples of 2x + 7y - 6z == -3 (mod 4).
inline std::vector<Vec> example1_triples() {
  return {iv({3, 1, 0}), iv({1, 1, 0}), iv({2, 3, 0}), iv({0, 3, 0}),
          iv({2, 1, 1}), iv({0, 1, 1}), iv({1, 3, 1}), iv({3, 3, 1}),
          iv({1, 1, 2}), iv({3, 1, 2}), iv({0, 3, 2}), iv({2, 3, 2}),
          iv({0, 1, 3}), iv({2, 1, 3}), iv({3, 3, 3}), iv({1, 3, 3})};
}

// The eight solution pairs of 2x - 2y == 6 (mod 4).
inline std::vector<Vec> example2_pairs() {
  return {iv({3, 0}), iv({1, 0}), iv({0, 1}), iv({2, 1}),
          iv({1, 2}), iv({3, 2}), iv({2, 3}), iv({0, 3})};
}

}  // namespace testsupport
