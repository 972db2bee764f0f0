#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "congrlat/integer.hpp"

namespace congrlat {

// One multivariate linear congruence
//   coeffs[0]*x_0 + ... + coeffs[n-1]*x_(n-1) == rhs  (mod modulus).
// Raw inputs are representable verbatim: the modulus may be negative, and a
// modulus of 0 means equality over Z.
struct LinearCongruence {
  std::vector<Int> coeffs;
  Int rhs = 0;
  Int modulus = 0;

  std::size_t arity() const { return coeffs.size(); }
  friend bool operator==(const LinearCongruence&,
                         const LinearCongruence&) = default;
};

enum class CountKind { none, finite, infinite };

struct SolutionCount {
  CountKind kind = CountKind::none;
  Int value = 0;  // meaningful when kind == finite

  friend bool operator==(const SolutionCount&, const SolutionCount&) = default;
};

// General solution in parametric form over a positive modulus:
//   x_i = offset[i] + sum_j columns[j][i] * k_j   (mod modulus),
// every integer assignment of the k_j satisfies the source congruence, and
// k_j in [0, param_ranges[j]) already generates all solutions, where
// param_ranges[j] = modulus / gcd(columns[j] union {modulus}).
struct ParametricSolution {
  Int modulus;
  std::vector<Int> offset;
  std::vector<std::vector<Int>> columns;
  std::vector<Int> param_ranges;
};

// Canonical duplicate-free residue-vector set, sorted lexicographically.
struct SolutionSet {
  Int modulus;
  std::size_t arity = 0;
  std::vector<std::vector<Int>> vectors;

  bool contains(const std::vector<Int>& v) const;
  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// Same congruence with a positive modulus and all entries in [0, m-1].
/// The solution set is unchanged. Modulus 0 is a usage error.
LinearCongruence normalize(const LinearCongruence& c);

/// True iff gcd(coeffs union {modulus}) divides rhs. Total: handles m == 0
/// and all-zero coefficient lists via the 0 | x <=> x == 0 convention.
bool is_solvable(const LinearCongruence& c);

/// Exact number of distinct solutions. For m != 0 the finite value is
/// d * |m|^(n-1) with d = gcd(coeffs union {m}); for m == 0 the equation is
/// solved over Z (one solution, or infinitely many when a free direction
/// remains).
SolutionCount count_solutions(const LinearCongruence& c);

/// Parametric general solution; empty iff unsolvable. Modulus 0 is a usage
/// error.
std::optional<ParametricSolution> general_solution(const LinearCongruence& c);

/// All distinct solutions mod |m|. Unsolvable yields an empty set; a count
/// above cap raises CapacityError carrying the exact count.
SolutionSet enumerate_solutions(const LinearCongruence& c, const Int& cap);

/// Multiply coefficients and rhs by k coprime to the modulus; the solution
/// set is unchanged.
LinearCongruence scale_coprime(const LinearCongruence& c, const Int& k);

/// Multiply coefficients, rhs AND modulus by k > 0. Solutions mod k*m are the
/// preimage of the original set under reduction mod m.
LinearCongruence scale_full(const LinearCongruence& c, const Int& k);

/// Divide coefficients, rhs AND modulus by a common factor k > 0. Reduction
/// mod m/k maps the original solution set onto the result's.
LinearCongruence reduce_common_factor(const LinearCongruence& c, const Int& k);

/// Direct substitution check (exact equality when modulus == 0).
bool satisfies(const LinearCongruence& c, const std::vector<Int>& x);

// -- shared parametric machinery (also used for systems) --

// Reduce an offset and generator columns mod m (> 0) and attach parameter
// ranges m / gcd(column union {m}).
ParametricSolution make_parametric(const Int& modulus,
                                   std::vector<Int> offset,
                                   std::vector<std::vector<Int>> columns);

// Sweep every parameter tuple (rightmost fastest), reduce mod the modulus,
// deduplicate, and verify each distinct vector. A verifier rejection means a
// parametrization bug and throws logic_error. Sweeps larger than work_limit
// raise CapacityError.
SolutionSet sweep_parametric(
    const ParametricSolution& ps,
    const std::function<bool(const std::vector<Int>&)>& verify,
    const Int& work_limit);

// Sweep size guard used by the enumeration entry points.
Int enumeration_work_limit(const Int& cap);

}  // namespace congrlat
