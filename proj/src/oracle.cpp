#include "congrlat/oracle.hpp"

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "congrlat/errors.hpp"
#include "congrlat/oracle_sweep.hpp"

namespace congrlat {

namespace oracle_detail {

void sweep_scalar(const std::vector<SweepRow>& rows, std::int64_t len,
                  std::vector<std::int64_t>& out) {
  for (std::int64_t x = 0; x < len; ++x) {
    bool hit = true;
    for (const SweepRow& r : rows) {
      if ((r.prefix + r.coeff * x) % r.modulus != r.target) {
        hit = false;
        break;
      }
    }
    if (hit) out.push_back(x);
  }
}

SweepFn active_sweep() {
#if defined(CONGRLAT_HAVE_AVX2)
  static const SweepFn chosen = cpu_has_avx2() ? &sweep_avx2 : &sweep_scalar;
  return chosen;
#else
  return &sweep_scalar;
#endif
}

}  // namespace oracle_detail

namespace {

using oracle_detail::SweepRow;

struct ReducedRow {
  std::vector<std::int64_t> coeffs;  // in [0, modulus)
  std::int64_t modulus = 1;
  std::int64_t target = 0;
};

// Exhaustive scan of [0, width)^n. Rows carry their own moduli (width is the
// lcm for systems, |m| for a single congruence).
SolutionSet scan(const std::vector<ReducedRow>& rows, std::size_t n,
                 std::int64_t width, const Int& out_modulus) {
  oracle_detail::SweepFn sweep = oracle_detail::active_sweep();

  SolutionSet set;
  set.modulus = out_modulus;
  set.arity = n;

  std::vector<std::int64_t> prefix(n - 1, 0);
  std::vector<SweepRow> states(rows.size());
  std::vector<std::int64_t> matches;
  for (;;) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ReducedRow& r = rows[i];
      std::int64_t s = 0;
      for (std::size_t j = 0; j + 1 < n; ++j)
        s = (s + r.coeffs[j] * prefix[j]) % r.modulus;
      states[i] = {s, r.coeffs[n - 1], r.modulus, r.target};
    }
    matches.clear();
    sweep(states, width, matches);
    for (std::int64_t x : matches) {
      std::vector<Int> v(n);
      for (std::size_t j = 0; j + 1 < n; ++j) v[j] = prefix[j];
      v[n - 1] = x;
      set.vectors.push_back(std::move(v));
    }

    // Odometer over the leading n-1 coordinates; emission order above is
    // already lexicographic.
    std::size_t j = n - 1;
    bool advanced = false;
    while (j-- > 0) {
      if (++prefix[j] < width) {
        advanced = true;
        break;
      }
      prefix[j] = 0;
    }
    if (!advanced) break;
  }
  return set;
}

ReducedRow reduce_row(const LinearCongruence& row) {
  Int m = abs(row.modulus);
  ReducedRow out;
  out.modulus = m.get_si();
  out.coeffs.reserve(row.coeffs.size());
  for (const Int& a : row.coeffs)
    out.coeffs.push_back(mod_floor(a, m).get_si());
  out.target = mod_floor(row.rhs, m).get_si();
  return out;
}

Int checked_space(const Int& width, std::size_t n, const Int& max_evaluations) {
  if (max_evaluations <= 0 || max_evaluations > kOracleHardBound)
    throw UsageError("oracle: evaluation bound must be in (0, 1e9]");
  Int space = pow_ui(width, static_cast<unsigned long>(n));
  if (space > max_evaluations)
    throw CapacityError("oracle search space " + to_string(space) +
                            " exceeds the safety bound " +
                            to_string(max_evaluations),
                        space, max_evaluations);
  return space;
}

}  // namespace

OracleReport brute_force(const LinearCongruence& c,
                         const Int& max_evaluations) {
  if (c.coeffs.empty()) throw UsageError("oracle: no variables");
  if (c.modulus == 0) throw UsageError("oracle: modulus must be non-zero");
  Int m = abs(c.modulus);
  OracleReport report;
  report.search_space = checked_space(m, c.arity(), max_evaluations);

  auto t0 = std::chrono::steady_clock::now();
  report.set = scan({reduce_row(c)}, c.arity(), m.get_si(), m);
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

OracleReport brute_force_system(const CongruenceSystem& sys,
                                const Int& max_evaluations) {
  if (sys.rows.empty()) throw UsageError("oracle: no rows");
  if (sys.variables.empty()) throw UsageError("oracle: no variables");
  Int width = 1;
  for (const auto& row : sys.rows) {
    if (row.modulus == 0) throw UsageError("oracle: modulus must be non-zero");
    if (row.arity() != sys.arity())
      throw UsageError("oracle: row arity differs from the variable list");
    width = lcm(width, row.modulus);
  }
  OracleReport report;
  report.search_space = checked_space(width, sys.arity(), max_evaluations);

  std::vector<ReducedRow> rows;
  rows.reserve(sys.rows.size());
  for (const auto& row : sys.rows) rows.push_back(reduce_row(row));

  auto t0 = std::chrono::steady_clock::now();
  report.set = scan(rows, sys.arity(), width.get_si(), width);
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

}  // namespace congrlat
