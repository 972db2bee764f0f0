#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congrlat/congruence.hpp"
#include "congrlat/integer.hpp"

namespace congrlat {

// r linear congruence rows over a shared ordered variable list; each row has
// its own non-zero modulus.
struct CongruenceSystem {
  std::vector<std::string> variables;
  std::vector<LinearCongruence> rows;

  std::size_t arity() const { return variables.size(); }
  friend bool operator==(const CongruenceSystem&,
                         const CongruenceSystem&) = default;
};

// All distinct solutions of a system, read modulo L = lcm of the row moduli.
struct SystemSolution {
  Int modulus;  // L
  SolutionSet set;
};

/// True iff the slack-extended integer linear system has a solution.
bool is_solvable_system(const CongruenceSystem& sys);

/// Pairwise compatibility test for a_i*x == b_i (mod m_i) rows: requires
/// (a_i, m_i) | b_i for every row and (a_i*m_j, a_j*m_i) | a_i*b_j - a_j*b_i
/// for every pair. Diagnostic only; solving never relies on it.
bool univariate_pair_compatible(const CongruenceSystem& sys);

/// x == residues[i] (mod moduli[i]) is solvable iff
/// (m_i, m_j) | residues[i] - residues[j] for every pair.
bool crt_compatible(const std::vector<Int>& residues,
                    const std::vector<Int>& moduli);

/// Merge x == residues[i] (mod moduli[i]) into a single class (residue, L)
/// with L = lcm(moduli) and residue in [0, L). Empty when incompatible.
std::optional<std::pair<Int, Int>> solve_crt(const std::vector<Int>& residues,
                                             const std::vector<Int>& moduli);

/// Parametric general solution of the system mod L, built by solving the
/// slack-extended integer system and dropping the slack coordinates. Empty
/// iff unsolvable.
std::optional<ParametricSolution> system_parametric(
    const CongruenceSystem& sys);

/// Exact number of distinct solutions mod L, without enumerating (lattice
/// index of the projected solution directions). Empty iff unsolvable.
std::optional<Int> count_system_solutions(const CongruenceSystem& sys);

/// Enumerated solution set mod L; every vector is re-checked against every
/// row before emission. Counts above cap raise CapacityError with the exact
/// count.
std::optional<SystemSolution> solve_system(const CongruenceSystem& sys,
                                           const Int& cap);

/// Direct substitution of x into every row.
bool satisfies_all(const CongruenceSystem& sys, const std::vector<Int>& x);

}  // namespace congrlat
