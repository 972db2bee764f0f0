// congrlat: solve, count and enumerate linear congruences and systems of
// linear congruences from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "congrlat/congruence.hpp"
#include "congrlat/congruence_system.hpp"
#include "congrlat/errors.hpp"
#include "congrlat/intlinalg.hpp"
#include "congrlat/oracle.hpp"
#include "congrlat/parse.hpp"
#include "json.hpp"

namespace {

using congrlat::CapacityError;
using congrlat::CongruenceSystem;
using congrlat::Int;
using congrlat::LinearCongruence;
using congrlat::ParseError;
using congrlat::SolutionSet;
using congrlat::UsageError;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitMismatch = 4;

constexpr long kDefaultCap = 100'000;

struct CommandOpts {
  std::string text;
  std::string file;
  bool json = false;
  long cap = kDefaultCap;
  bool cap_from_flag = false;
};

void add_common(CLI::App* cmd, CommandOpts& opts, bool takes_input = true) {
  if (takes_input) {
    cmd->add_option("input", opts.text,
                    "Congruence text; reads --file or stdin when omitted");
    cmd->add_option("--file,-f", opts.file, "Read the input from a file");
  }
  cmd->add_flag("--json", opts.json, "Emit JSON instead of text");
  cmd->add_option("--cap", opts.cap, "Enumeration cap (default 100000)")
      ->check(CLI::PositiveNumber);
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string resolve_input(const CommandOpts& opts) {
  if (!opts.text.empty()) return opts.text;
  if (!opts.file.empty()) {
    std::ifstream f(opts.file);
    if (!f) throw UsageError("cannot open input file: " + opts.file);
    return slurp(f);
  }
  return slurp(std::cin);
}

Int resolve_cap(const CommandOpts& opts) {
  if (opts.cap_from_flag) return opts.cap;
  if (const char* env = std::getenv("CONGRLAT_CAP")) {
    try {
      Int v(env);
      if (v <= 0) throw std::invalid_argument("not positive");
      return v;
    } catch (const std::invalid_argument&) {
      throw UsageError(std::string("CONGRLAT_CAP is not a positive integer: ") +
                       env);
    }
  }
  return opts.cap;
}

// Residues can exceed 64 bits (the modulus is unbounded); numbers that fit
// stay JSON numbers, the rest become decimal strings.
Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_vector(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string variable_row(const std::vector<Int>& v) {
  std::string line;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) line += ' ';
    line += congrlat::to_string(v[i]);
  }
  return line;
}

// ---- check ----

int run_check(const congrlat::ParsedInput& pi, const CommandOpts& opts) {
  const CongruenceSystem& sys = pi.system;
  bool solvable;
  std::string criterion;
  std::optional<bool> pairwise;
  std::optional<bool> crt;

  if (sys.rows.size() == 1) {
    solvable = congrlat::is_solvable(sys.rows.front());
    criterion = "coefficient-gcd";
  } else {
    solvable = congrlat::is_solvable_system(sys);
    criterion = "integer-linear-system";
    if (sys.arity() == 1) {
      pairwise = congrlat::univariate_pair_compatible(sys);
      bool unit = true;
      for (const auto& row : sys.rows) unit = unit && row.coeffs[0] == 1;
      if (unit) {
        std::vector<Int> residues, moduli;
        for (const auto& row : sys.rows) {
          residues.push_back(row.rhs);
          moduli.push_back(row.modulus);
        }
        crt = congrlat::crt_compatible(residues, moduli);
      }
    }
  }

  if (opts.json) {
    Json j;
    j["solvable"] = solvable;
    j["criterion"] = criterion;
    if (pairwise) j["pairwise_univariate"] = *pairwise;
    if (crt) j["pairwise_crt"] = *crt;
    emit(j);
  } else {
    std::cout << "solvable: " << (solvable ? "yes" : "no") << "\n";
    std::cout << "criterion: " << criterion << "\n";
    if (pairwise)
      std::cout << "pairwise-univariate: "
                << (*pairwise ? "compatible" : "incompatible") << "\n";
    if (crt)
      std::cout << "pairwise-crt: " << (*crt ? "compatible" : "incompatible")
                << "\n";
  }
  return kExitOk;
}

// ---- count ----

int run_count(const congrlat::ParsedInput& pi, const CommandOpts& opts) {
  const CongruenceSystem& sys = pi.system;
  Int modulus = 0;
  std::string count_text;
  Json count_json;

  if (sys.rows.size() == 1) {
    const LinearCongruence& c = sys.rows.front();
    modulus = abs(c.modulus);
    congrlat::SolutionCount sc = congrlat::count_solutions(c);
    switch (sc.kind) {
      case congrlat::CountKind::none:
        count_text = "0";
        count_json = 0;
        break;
      case congrlat::CountKind::finite:
        count_text = congrlat::to_string(sc.value);
        count_json = json_int(sc.value);
        break;
      case congrlat::CountKind::infinite:
        count_text = "infinite";
        count_json = "infinite";
        break;
    }
  } else {
    std::vector<Int> moduli;
    for (const auto& row : sys.rows) moduli.push_back(row.modulus);
    modulus = congrlat::lcm_vec(moduli);
    std::optional<Int> n = congrlat::count_system_solutions(sys);
    Int value = n ? *n : Int(0);
    count_text = congrlat::to_string(value);
    count_json = json_int(value);
  }

  if (opts.json) {
    Json j;
    j["modulus"] = json_int(modulus);
    j["variables"] = pi.variables;
    j["count"] = count_json;
    emit(j);
  } else {
    std::cout << count_text << "\n";
  }
  return kExitOk;
}

// ---- solve ----

void print_parametric_text(const congrlat::ParametricSolution& ps,
                           const std::vector<std::string>& vars) {
  std::cout << "modulus: " << congrlat::to_string(ps.modulus) << "\n";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string expr;
    for (std::size_t j = 0; j < ps.columns.size(); ++j) {
      const Int& a = ps.columns[j][i];
      if (a == 0) continue;
      if (!expr.empty()) expr += " + ";
      expr += congrlat::to_string(a) + "*k" + std::to_string(j + 1);
    }
    if (ps.offset[i] != 0 || expr.empty()) {
      if (!expr.empty()) expr += " + ";
      expr += congrlat::to_string(ps.offset[i]);
    }
    std::cout << vars[i] << " = " << expr << " (mod "
              << congrlat::to_string(ps.modulus) << ")\n";
  }
  for (std::size_t j = 0; j < ps.param_ranges.size(); ++j) {
    std::cout << "k" << (j + 1) << " in [0, "
              << congrlat::to_string(ps.param_ranges[j]) << ")\n";
  }
}

void print_parametric_json(const congrlat::ParametricSolution& ps,
                           const std::vector<std::string>& vars) {
  Json j;
  j["modulus"] = json_int(ps.modulus);
  j["variables"] = vars;
  j["offset"] = json_vector(ps.offset);
  Json cols = Json::array();
  for (const auto& c : ps.columns) cols.push_back(json_vector(c));
  j["columns"] = cols;
  j["param_ranges"] = json_vector(ps.param_ranges);
  emit(j);
}

// The modulus-0 variant: plain integer lattice, no parameter ranges.
int run_solve_equation(const LinearCongruence& c,
                       const std::vector<std::string>& vars,
                       const CommandOpts& opts) {
  auto lat = congrlat::solve_linear_diophantine(c.coeffs, c.rhs);
  if (!lat) {
    std::cerr << "unsolvable over the integers\n";
    return kExitUnsolvable;
  }
  if (opts.json) {
    Json j;
    j["modulus"] = 0;
    j["variables"] = vars;
    j["offset"] = json_vector(lat->particular);
    Json cols = Json::array();
    for (const auto& b : lat->basis) cols.push_back(json_vector(b));
    j["columns"] = cols;
    emit(j);
    return kExitOk;
  }
  std::cout << "equation over the integers (modulus 0)\n";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string expr;
    for (std::size_t j = 0; j < lat->basis.size(); ++j) {
      const Int& a = lat->basis[j][i];
      if (a == 0) continue;
      if (!expr.empty()) expr += " + ";
      expr += congrlat::to_string(a) + "*k" + std::to_string(j + 1);
    }
    if (lat->particular[i] != 0 || expr.empty()) {
      if (!expr.empty()) expr += " + ";
      expr += congrlat::to_string(lat->particular[i]);
    }
    std::cout << vars[i] << " = " << expr << "\n";
  }
  return kExitOk;
}

int run_solve(const congrlat::ParsedInput& pi, const CommandOpts& opts) {
  const CongruenceSystem& sys = pi.system;
  std::optional<congrlat::ParametricSolution> ps;
  if (sys.rows.size() == 1) {
    const LinearCongruence& c = sys.rows.front();
    if (c.modulus == 0) return run_solve_equation(c, pi.variables, opts);
    ps = congrlat::general_solution(c);
  } else {
    ps = congrlat::system_parametric(sys);
  }
  if (!ps) {
    std::cerr << "unsolvable\n";
    return kExitUnsolvable;
  }
  if (opts.json)
    print_parametric_json(*ps, pi.variables);
  else
    print_parametric_text(*ps, pi.variables);
  return kExitOk;
}

// ---- enumerate ----

int run_enumerate(const congrlat::ParsedInput& pi, const CommandOpts& opts) {
  const CongruenceSystem& sys = pi.system;
  Int cap = resolve_cap(opts);
  Int modulus;
  SolutionSet set;
  bool solvable = true;

  if (sys.rows.size() == 1) {
    set = congrlat::enumerate_solutions(sys.rows.front(), cap);
    modulus = set.modulus;
    solvable = !set.vectors.empty();
  } else {
    auto sol = congrlat::solve_system(sys, cap);
    if (sol) {
      modulus = sol->modulus;
      set = std::move(sol->set);
    } else {
      std::vector<Int> moduli;
      for (const auto& row : sys.rows) moduli.push_back(row.modulus);
      modulus = congrlat::lcm_vec(moduli);
      set.modulus = modulus;
      set.arity = sys.arity();
      solvable = false;
    }
  }

  if (opts.json) {
    Json j;
    j["modulus"] = json_int(modulus);
    j["variables"] = pi.variables;
    j["count"] = json_int(Int(set.vectors.size()));
    Json sols = Json::array();
    for (const auto& v : set.vectors) sols.push_back(json_vector(v));
    j["solutions"] = sols;
    emit(j);
  } else {
    for (const auto& v : set.vectors) std::cout << variable_row(v) << "\n";
  }
  if (!solvable) {
    std::cerr << "unsolvable\n";
    return kExitUnsolvable;
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyOpts {
  long random = 0;
  unsigned long long seed = 0;
  long oracle_bound = congrlat::kOracleDefaultBound;
  long expect_count = -1;
};

struct VerifyOutcome {
  long instances = 0;
  long mismatches = 0;
};

// Solver and oracle must produce the same set; for single congruences the
// count law is checked as well.
bool verify_congruence(const LinearCongruence& c, const Int& cap,
                       const Int& bound) {
  congrlat::OracleReport truth = congrlat::brute_force(c, bound);
  SolutionSet mine = congrlat::enumerate_solutions(c, cap);
  if (!(mine == truth.set)) return false;
  congrlat::SolutionCount sc = congrlat::count_solutions(c);
  if (sc.kind == congrlat::CountKind::none)
    return truth.set.vectors.empty();
  return sc.kind == congrlat::CountKind::finite &&
         sc.value == Int(truth.set.vectors.size());
}

bool verify_system(const CongruenceSystem& sys, const Int& cap,
                   const Int& bound) {
  congrlat::OracleReport truth = congrlat::brute_force_system(sys, bound);
  auto sol = congrlat::solve_system(sys, cap);
  if (!sol) return truth.set.vectors.empty();
  return sol->set == truth.set;
}

LinearCongruence random_congruence(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> arity(1, 3);
  std::uniform_int_distribution<int> modulus(1, 12);
  std::uniform_int_distribution<int> entry(-20, 20);
  LinearCongruence c;
  int n = arity(rng);
  for (int i = 0; i < n; ++i) c.coeffs.emplace_back(entry(rng));
  c.rhs = entry(rng);
  c.modulus = modulus(rng);
  return c;
}

CongruenceSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> arity(1, 2);
  std::uniform_int_distribution<int> modulus(2, 6);
  std::uniform_int_distribution<int> entry(-10, 10);
  CongruenceSystem sys;
  int n = arity(rng);
  for (int i = 0; i < n; ++i) sys.variables.push_back("x" + std::to_string(i));
  for (int r = 0; r < 2; ++r) {
    LinearCongruence row;
    for (int i = 0; i < n; ++i) row.coeffs.emplace_back(entry(rng));
    row.rhs = entry(rng);
    row.modulus = modulus(rng);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

int run_verify(CLI::App* cmd, const CommandOpts& opts, const VerifyOpts& vo) {
  Int cap = resolve_cap(opts);
  Int bound(vo.oracle_bound);
  VerifyOutcome out;

  if (vo.random > 0) {
    std::mt19937_64 rng(vo.seed);
    for (long i = 0; i < vo.random; ++i) {
      ++out.instances;
      if (i % 5 == 4) {
        CongruenceSystem sys = random_system(rng);
        if (!verify_system(sys, cap, bound)) {
          ++out.mismatches;
          std::cerr << "mismatch on system:\n" << congrlat::render_system(sys);
        }
      } else {
        LinearCongruence c = random_congruence(rng);
        if (!verify_congruence(c, cap, bound)) {
          ++out.mismatches;
          std::vector<std::string> vars;
          for (std::size_t v = 0; v < c.arity(); ++v)
            vars.push_back("x" + std::to_string(v));
          std::cerr << "mismatch on congruence: "
                    << congrlat::render_congruence(c, vars) << "\n";
        }
      }
    }
  } else {
    congrlat::ParsedInput pi = congrlat::parse_system(resolve_input(opts));
    ++out.instances;
    bool ok;
    Int solver_count;
    if (pi.system.rows.size() == 1) {
      const LinearCongruence& c = pi.system.rows.front();
      ok = verify_congruence(c, cap, bound);
      solver_count = Int(congrlat::enumerate_solutions(c, cap).vectors.size());
    } else {
      ok = verify_system(pi.system, cap, bound);
      auto sol = congrlat::solve_system(pi.system, cap);
      solver_count = sol ? Int(sol->set.vectors.size()) : Int(0);
    }
    if (!ok) {
      ++out.mismatches;
      std::cerr << "mismatch on input:\n" << congrlat::render_system(pi.system);
    }
    if (cmd->count("--expect-count") && solver_count != Int(vo.expect_count)) {
      ++out.mismatches;
      std::cerr << "expected " << vo.expect_count << " solutions, found "
                << congrlat::to_string(solver_count) << "\n";
    }
  }

  bool ok = out.mismatches == 0;
  if (opts.json) {
    Json j;
    j["instances"] = out.instances;
    j["mismatches"] = out.mismatches;
    j["ok"] = ok;
    emit(j);
  } else {
    std::cout << "verified " << out.instances << " instance"
              << (out.instances == 1 ? "" : "s") << ": " << out.mismatches
              << " mismatch" << (out.mismatches == 1 ? "" : "es") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear congruence and congruence system solver"};
  app.require_subcommand(1);

  CommandOpts check_opts, count_opts, solve_opts, enum_opts, verify_opts;
  VerifyOpts vo;

  CLI::App* check = app.add_subcommand("check", "Decide solvability");
  add_common(check, check_opts);
  CLI::App* count = app.add_subcommand("count", "Count distinct solutions");
  add_common(count, count_opts);
  CLI::App* solve =
      app.add_subcommand("solve", "Print the parametric general solution");
  add_common(solve, solve_opts);
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List all distinct solutions");
  add_common(enumerate, enum_opts);
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check the solver against the "
                                   "brute-force oracle");
  add_common(verify, verify_opts);
  verify->add_option("--random", vo.random,
                     "Verify this many seeded random instances");
  verify->add_option("--seed", vo.seed, "Seed for --random");
  verify->add_option("--oracle-bound", vo.oracle_bound,
                     "Oracle evaluation budget (default 1e7)");
  verify->add_option("--expect-count", vo.expect_count,
                     "Also require the solver to find exactly this many "
                     "solutions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  check_opts.cap_from_flag = check->count("--cap") > 0;
  count_opts.cap_from_flag = count->count("--cap") > 0;
  solve_opts.cap_from_flag = solve->count("--cap") > 0;
  enum_opts.cap_from_flag = enumerate->count("--cap") > 0;
  verify_opts.cap_from_flag = verify->count("--cap") > 0;

  try {
    if (check->parsed())
      return run_check(congrlat::parse_system(resolve_input(check_opts)),
                       check_opts);
    if (count->parsed())
      return run_count(congrlat::parse_system(resolve_input(count_opts)),
                       count_opts);
    if (solve->parsed())
      return run_solve(congrlat::parse_system(resolve_input(solve_opts)),
                       solve_opts);
    if (enumerate->parsed())
      return run_enumerate(congrlat::parse_system(resolve_input(enum_opts)),
                           enum_opts);
    if (verify->parsed()) return run_verify(verify, verify_opts, vo);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << e.what() << "\n";
    return kExitCapacity;
  }
  return kExitUsage;
}
