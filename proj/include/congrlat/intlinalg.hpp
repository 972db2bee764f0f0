#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "congrlat/integer.hpp"

namespace congrlat {

// gcd of a list of integers together with multipliers witnessing it:
// sum_i coefficients[i] * input[i] == gcd, gcd >= 0, gcd(0,...,0) == 0.
struct BezoutCertificate {
  Int gcd;
  std::vector<Int> coefficients;
};

// Solution set of a linear Diophantine equation or system:
// { particular + k_1*basis[0] + ... + k_s*basis[s-1] : k_j in Z }.
// The basis vectors are independent over Q and span the integer null space of
// the defining map, so basis.size() == arity - rank.
struct AffineLattice {
  std::size_t arity = 0;
  std::vector<Int> particular;
  std::vector<std::vector<Int>> basis;
};

// Result of column-wise elimination on an r x n matrix A: a unimodular U with
// A*U = H, H in column echelon form (pivot rows have zeros right of their
// pivot, pivots positive). transform holds U row-major; pivots are
// (row, column) pairs with columns 0,1,2,... in order.
struct ColumnEchelon {
  std::vector<std::vector<Int>> h;
  std::vector<std::vector<Int>> transform;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

BezoutCertificate ext_gcd(const Int& a, const Int& b);

/// Folded extended gcd of a non-empty list; certificate identity holds.
BezoutCertificate gcd_vec(const std::vector<Int>& values);

ColumnEchelon column_echelon(std::vector<std::vector<Int>> matrix);

/// Integer solutions of coeffs[0]*x_0 + ... + coeffs[n-1]*x_(n-1) = rhs.
/// Empty optional means no integer solution exists.
std::optional<AffineLattice> solve_linear_diophantine(
    const std::vector<Int>& coeffs, const Int& rhs);

/// Integer solutions of matrix * x = rhs (r rows, n unknowns).
std::optional<AffineLattice> solve_diophantine_system(
    const std::vector<std::vector<Int>>& matrix, const std::vector<Int>& rhs);

/// Positive least common multiple of a non-empty list of non-zero integers.
Int lcm_vec(const std::vector<Int>& values);

}  // namespace congrlat
