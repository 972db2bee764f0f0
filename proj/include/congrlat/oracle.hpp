#pragma once

#include <chrono>

#include "congrlat/congruence.hpp"
#include "congrlat/congruence_system.hpp"
#include "congrlat/integer.hpp"

namespace congrlat {

// Ground truth by exhaustive substitution over a complete residue system.
// Deliberately shares no arithmetic with the solver paths: agreement between
// the two is the evidence every property test relies on.
struct OracleReport {
  SolutionSet set;
  std::chrono::nanoseconds elapsed{0};
  Int search_space;  // m^n, or L^n for systems
};

inline constexpr long kOracleDefaultBound = 10'000'000;

// int64 stays exact for every intermediate product as long as the candidate
// count (and hence every modulus) is at most 1e9.
inline constexpr long kOracleHardBound = 1'000'000'000;

/// Evaluate every tuple in [0, |m|)^n. Search spaces above max_evaluations
/// raise CapacityError; modulus 0 is a usage error.
OracleReport brute_force(const LinearCongruence& c,
                         const Int& max_evaluations = kOracleDefaultBound);

/// Evaluate every tuple in [0, L)^n against every row, L = lcm of the row
/// moduli.
OracleReport brute_force_system(
    const CongruenceSystem& sys, const Int& max_evaluations = kOracleDefaultBound);

}  // namespace congrlat
