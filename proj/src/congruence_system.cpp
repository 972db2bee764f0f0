#include "congrlat/congruence_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "congrlat/errors.hpp"
#include "congrlat/intlinalg.hpp"

namespace congrlat {

namespace {

void validate(const CongruenceSystem& sys) {
  if (sys.rows.empty()) throw UsageError("system: no rows");
  if (sys.variables.empty()) throw UsageError("system: no variables");
  for (const auto& row : sys.rows) {
    if (row.arity() != sys.arity())
      throw UsageError("system: row arity differs from the variable list");
    if (row.modulus == 0)
      throw UsageError("system: row moduli must be non-zero");
  }
}

// Rows normalized to positive moduli with entries in [0, m_i - 1], extended
// with one slack column -m_i per row.
struct SlackSystem {
  std::vector<std::vector<Int>> matrix;
  std::vector<Int> rhs;
  Int lcm_modulus;
};

SlackSystem build_slack_system(const CongruenceSystem& sys) {
  const std::size_t r = sys.rows.size();
  const std::size_t n = sys.arity();
  SlackSystem out;
  std::vector<Int> moduli;
  moduli.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    LinearCongruence row = normalize(sys.rows[i]);
    std::vector<Int> line(n + r, 0);
    std::copy(row.coeffs.begin(), row.coeffs.end(), line.begin());
    line[n + i] = -row.modulus;
    out.matrix.push_back(std::move(line));
    out.rhs.push_back(row.rhs);
    moduli.push_back(row.modulus);
  }
  out.lcm_modulus = lcm_vec(moduli);
  return out;
}

// Number of residue vectors mod L generated by the given directions: L^n
// divided by the index of the direction lattice in Z^n. Appending L*I makes
// the full rank explicit; it is already contained in the span.
Int lattice_image_count(const std::vector<std::vector<Int>>& columns,
                        const Int& L, std::size_t n) {
  std::vector<std::vector<Int>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].reserve(columns.size() + n);
    for (const auto& col : columns) m[i].push_back(col[i]);
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(i == j ? L : Int(0));
  }
  ColumnEchelon ech = column_echelon(std::move(m));
  if (ech.pivots.size() != n)
    throw std::logic_error("lattice_image_count: directions not full rank");
  Int index = 1;
  for (std::size_t j = 0; j < n; ++j) index *= ech.h[ech.pivots[j].first][j];
  Int total = pow_ui(L, static_cast<unsigned long>(n));
  if (!divides(index, total))
    throw std::logic_error("lattice_image_count: index does not divide L^n");
  return total / index;
}

}  // namespace

bool satisfies_all(const CongruenceSystem& sys, const std::vector<Int>& x) {
  for (const auto& row : sys.rows) {
    if (!satisfies(row, x)) return false;
  }
  return true;
}

bool is_solvable_system(const CongruenceSystem& sys) {
  validate(sys);
  SlackSystem s = build_slack_system(sys);
  return solve_diophantine_system(s.matrix, s.rhs).has_value();
}

bool univariate_pair_compatible(const CongruenceSystem& sys) {
  validate(sys);
  if (sys.arity() != 1)
    throw UsageError("univariate_pair_compatible: needs one variable");
  const std::size_t r = sys.rows.size();
  for (const auto& row : sys.rows) {
    if (!divides(gcd(row.coeffs[0], row.modulus), row.rhs)) return false;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto& ri = sys.rows[i];
      const auto& rj = sys.rows[j];
      Int g = gcd(Int(ri.coeffs[0] * rj.modulus), Int(rj.coeffs[0] * ri.modulus));
      Int diff = ri.coeffs[0] * rj.rhs - rj.coeffs[0] * ri.rhs;
      if (!divides(g, diff)) return false;
    }
  }
  return true;
}

bool crt_compatible(const std::vector<Int>& residues,
                    const std::vector<Int>& moduli) {
  if (residues.empty() || residues.size() != moduli.size())
    throw UsageError("crt: residue and modulus lists must match and be "
                     "non-empty");
  for (const Int& m : moduli) {
    if (m == 0) throw UsageError("crt: moduli must be non-zero");
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (!divides(gcd(moduli[i], moduli[j]), Int(residues[i] - residues[j])))
        return false;
    }
  }
  return true;
}

std::optional<std::pair<Int, Int>> solve_crt(const std::vector<Int>& residues,
                                             const std::vector<Int>& moduli) {
  if (residues.empty() || residues.size() != moduli.size())
    throw UsageError("crt: residue and modulus lists must match and be "
                     "non-empty");
  for (const Int& m : moduli) {
    if (m == 0) throw UsageError("crt: moduli must be non-zero");
  }
  Int mod = abs(moduli[0]);
  Int res = mod_floor(residues[0], mod);
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    Int mi = abs(moduli[i]);
    Int bi = mod_floor(residues[i], mi);
    // Solve res + mod*t == bi (mod mi).
    BezoutCertificate bz = ext_gcd(mod, mi);
    Int diff = bi - res;
    if (!divides(bz.gcd, diff)) return std::nullopt;
    Int step = mi / bz.gcd;
    Int t = mod_floor(Int(bz.coefficients[0] * (diff / bz.gcd)), step);
    Int merged = mod * step;  // lcm(mod, mi)
    res = mod_floor(Int(res + mod * t), merged);
    mod = merged;
  }
  return std::make_pair(res, mod);
}

std::optional<ParametricSolution> system_parametric(
    const CongruenceSystem& sys) {
  validate(sys);
  const std::size_t n = sys.arity();
  SlackSystem s = build_slack_system(sys);
  std::optional<AffineLattice> lat = solve_diophantine_system(s.matrix, s.rhs);
  if (!lat) return std::nullopt;
  const Int& L = s.lcm_modulus;

  std::vector<Int> offset(lat->particular.begin(),
                          lat->particular.begin() + n);
  std::vector<std::vector<Int>> columns;
  for (const auto& dir : lat->basis) {
    std::vector<Int> col(n);
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = mod_floor(dir[i], L);
      if (col[i] != 0) zero = false;
    }
    // Slack-only directions generate nothing mod L; identical columns sweep
    // the same cyclic factor twice.
    if (zero) continue;
    if (std::find(columns.begin(), columns.end(), col) != columns.end())
      continue;
    columns.push_back(std::move(col));
  }
  return make_parametric(L, std::move(offset), std::move(columns));
}

std::optional<Int> count_system_solutions(const CongruenceSystem& sys) {
  std::optional<ParametricSolution> ps = system_parametric(sys);
  if (!ps) return std::nullopt;
  return lattice_image_count(ps->columns, ps->modulus, sys.arity());
}

std::optional<SystemSolution> solve_system(const CongruenceSystem& sys,
                                           const Int& cap) {
  if (cap <= 0) throw UsageError("solve_system: cap must be positive");
  std::optional<ParametricSolution> ps = system_parametric(sys);
  if (!ps) return std::nullopt;
  const Int& L = ps->modulus;

  Int count = lattice_image_count(ps->columns, L, sys.arity());
  if (count > cap)
    throw CapacityError("system has exactly " + to_string(count) +
                            " distinct solutions, above the cap " +
                            to_string(cap),
                        count, cap);

  SolutionSet set = sweep_parametric(
      *ps, [&](const std::vector<Int>& v) { return satisfies_all(sys, v); },
      enumeration_work_limit(cap));
  if (Int(set.vectors.size()) != count)
    throw std::logic_error(
        "solve_system: enumerated set disagrees with the lattice count");
  return SystemSolution{L, std::move(set)};
}

}  // namespace congrlat
