#include "congrlat/congruence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "congrlat/errors.hpp"
#include "congrlat/intlinalg.hpp"

namespace congrlat {

bool SolutionSet::contains(const std::vector<Int>& v) const {
  return std::binary_search(vectors.begin(), vectors.end(), v);
}

LinearCongruence normalize(const LinearCongruence& c) {
  if (c.modulus == 0) throw UsageError("normalize: modulus must be non-zero");
  LinearCongruence out;
  out.modulus = abs(c.modulus);
  out.coeffs.reserve(c.coeffs.size());
  for (const Int& a : c.coeffs) out.coeffs.push_back(mod_floor(a, out.modulus));
  out.rhs = mod_floor(c.rhs, out.modulus);
  return out;
}

bool is_solvable(const LinearCongruence& c) {
  std::vector<Int> all = c.coeffs;
  all.push_back(c.modulus);
  return divides(gcd_vec(all).gcd, c.rhs);
}

SolutionCount count_solutions(const LinearCongruence& c) {
  if (c.coeffs.empty()) throw UsageError("count_solutions: no variables");
  if (!is_solvable(c)) return {CountKind::none, 0};
  if (c.modulus == 0) {
    // Plain equation over Z: unique solution only when nothing is free.
    if (c.arity() == 1 && c.coeffs.front() != 0)
      return {CountKind::finite, 1};
    return {CountKind::infinite, 0};
  }
  std::vector<Int> all = c.coeffs;
  all.push_back(c.modulus);
  Int d = gcd_vec(all).gcd;
  Int m = abs(c.modulus);
  Int count = d * pow_ui(m, static_cast<unsigned long>(c.arity() - 1));
  return {CountKind::finite, count};
}

ParametricSolution make_parametric(const Int& modulus, std::vector<Int> offset,
                                   std::vector<std::vector<Int>> columns) {
  ParametricSolution ps;
  ps.modulus = modulus;
  ps.offset = std::move(offset);
  for (Int& v : ps.offset) v = mod_floor(v, modulus);
  ps.columns = std::move(columns);
  for (auto& col : ps.columns) {
    Int d = modulus;
    for (Int& v : col) {
      v = mod_floor(v, modulus);
      d = gcd(d, v);
    }
    ps.param_ranges.push_back(modulus / d);
  }
  return ps;
}

std::optional<ParametricSolution> general_solution(const LinearCongruence& c) {
  if (c.coeffs.empty()) throw UsageError("general_solution: no variables");
  if (c.modulus == 0)
    throw UsageError("general_solution: modulus must be non-zero");
  LinearCongruence cn = normalize(c);
  const std::size_t n = cn.arity();

  // Solve the underlying equation with one slack unknown for the modulus,
  // then drop the slack coordinate.
  std::vector<Int> eq = cn.coeffs;
  eq.push_back(-cn.modulus);
  std::optional<AffineLattice> lat = solve_linear_diophantine(eq, cn.rhs);
  if (!lat) return std::nullopt;

  std::vector<Int> offset(lat->particular.begin(),
                          lat->particular.begin() + n);
  std::vector<std::vector<Int>> columns;
  columns.reserve(lat->basis.size());
  for (const auto& dir : lat->basis)
    columns.emplace_back(dir.begin(), dir.begin() + n);
  return make_parametric(cn.modulus, std::move(offset), std::move(columns));
}

Int enumeration_work_limit(const Int& cap) {
  Int floor_limit = 10'000'000;
  Int scaled = 16 * cap;
  return std::max(floor_limit, scaled);
}

SolutionSet sweep_parametric(
    const ParametricSolution& ps,
    const std::function<bool(const std::vector<Int>&)>& verify,
    const Int& work_limit) {
  const std::size_t n = ps.offset.size();
  const std::size_t params = ps.columns.size();

  Int work = 1;
  for (const Int& r : ps.param_ranges) work *= r;
  if (work > work_limit)
    throw CapacityError("parameter sweep of " + to_string(work) +
                            " combinations exceeds the work limit " +
                            to_string(work_limit),
                        work, work_limit);

  std::set<std::vector<Int>> distinct;
  std::vector<Int> k(params, 0);
  std::vector<Int> cur = ps.offset;  // offset + sum_j k_j * columns[j]
  for (;;) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = mod_floor(cur[i], ps.modulus);
    auto [it, inserted] = distinct.insert(std::move(v));
    if (inserted && verify && !verify(*it))
      throw std::logic_error(
          "sweep_parametric: generated vector fails verification");

    // Odometer step, rightmost parameter fastest.
    std::size_t j = params;
    bool advanced = false;
    while (j-- > 0) {
      k[j] += 1;
      for (std::size_t i = 0; i < n; ++i) cur[i] += ps.columns[j][i];
      if (k[j] < ps.param_ranges[j]) {
        advanced = true;
        break;
      }
      for (std::size_t i = 0; i < n; ++i)
        cur[i] -= ps.param_ranges[j] * ps.columns[j][i];
      k[j] = 0;
    }
    if (!advanced) break;
  }

  SolutionSet out;
  out.modulus = ps.modulus;
  out.arity = n;
  out.vectors.assign(distinct.begin(), distinct.end());
  return out;
}

bool satisfies(const LinearCongruence& c, const std::vector<Int>& x) {
  if (x.size() != c.arity()) return false;
  Int acc = -c.rhs;
  for (std::size_t i = 0; i < x.size(); ++i) acc += c.coeffs[i] * x[i];
  if (c.modulus == 0) return acc == 0;
  return divides(c.modulus, acc);
}

SolutionSet enumerate_solutions(const LinearCongruence& c, const Int& cap) {
  if (c.modulus == 0)
    throw UsageError("enumerate_solutions: modulus must be non-zero");
  if (cap <= 0) throw UsageError("enumerate_solutions: cap must be positive");

  SolutionCount count = count_solutions(c);
  if (count.kind == CountKind::none) {
    SolutionSet empty;
    empty.modulus = abs(c.modulus);
    empty.arity = c.arity();
    return empty;
  }
  if (count.value > cap)
    throw CapacityError("congruence has exactly " + to_string(count.value) +
                            " distinct solutions, above the cap " +
                            to_string(cap),
                        count.value, cap);

  ParametricSolution ps = *general_solution(c);
  SolutionSet set = sweep_parametric(
      ps, [&](const std::vector<Int>& v) { return satisfies(c, v); },
      enumeration_work_limit(cap));
  if (Int(set.vectors.size()) != count.value)
    throw std::logic_error(
        "enumerate_solutions: enumerated set disagrees with the count law");
  return set;
}

LinearCongruence scale_coprime(const LinearCongruence& c, const Int& k) {
  if (c.modulus == 0)
    throw UsageError("scale_coprime: modulus must be non-zero");
  if (k == 0 || gcd(k, c.modulus) != 1)
    throw UsageError("scale_coprime: factor must be coprime to the modulus");
  LinearCongruence out = c;
  for (Int& a : out.coeffs) a *= k;
  out.rhs *= k;
  return out;
}

LinearCongruence scale_full(const LinearCongruence& c, const Int& k) {
  if (c.modulus == 0) throw UsageError("scale_full: modulus must be non-zero");
  if (k <= 0) throw UsageError("scale_full: factor must be positive");
  LinearCongruence out;
  out.coeffs.reserve(c.coeffs.size());
  for (const Int& a : c.coeffs) out.coeffs.push_back(a * k);
  out.rhs = c.rhs * k;
  out.modulus = c.modulus * k;
  return out;
}

LinearCongruence reduce_common_factor(const LinearCongruence& c,
                                      const Int& k) {
  if (c.modulus == 0)
    throw UsageError("reduce_common_factor: modulus must be non-zero");
  if (k <= 0) throw UsageError("reduce_common_factor: factor must be positive");
  for (const Int& a : c.coeffs) {
    if (!divides(k, a))
      throw UsageError("reduce_common_factor: factor does not divide every "
                       "coefficient");
  }
  if (!divides(k, c.rhs))
    throw UsageError("reduce_common_factor: factor does not divide the rhs");
  if (!divides(k, c.modulus))
    throw UsageError("reduce_common_factor: factor does not divide the "
                     "modulus");
  LinearCongruence out;
  out.coeffs.reserve(c.coeffs.size());
  for (const Int& a : c.coeffs) out.coeffs.push_back(a / k);
  out.rhs = c.rhs / k;
  out.modulus = c.modulus / k;
  return out;
}

}  // namespace congrlat
