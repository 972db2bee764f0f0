#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "congrlat/errors.hpp"
#include "congrlat/parse.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace congrlat;
using testsupport::lc;

TEST_CASE("parse_congruence accepts the standard notation") {
  auto [c, vars] = parse_congruence("2x + 7y - 6z \xe2\x89\xa1 -3 (mod 4)");
  CHECK(c == lc({2, 7, -6}, -3, 4));
  CHECK(vars == std::vector<std::string>{"x", "y", "z"});

  auto [unit, uv] = parse_congruence("x = 0 (mod 1)");
  CHECK(unit == lc({1}, 0, 1));
  CHECK(uv == std::vector<std::string>{"x"});

  auto [stars, sv] = parse_congruence("-t + 3*u \xe2\x89\xa1 1 (mod 6)");
  CHECK(stars == lc({-1, 3}, 1, 6));
  CHECK(sv == std::vector<std::string>{"t", "u"});
}

TEST_CASE("parse_congruence grammar corners") {
  // '*' optional, whitespace insignificant.
  CHECK(parse_congruence("3 x=6(mod 9)").first == lc({3}, 6, 9));
  // Constant terms on the left fold into the right-hand side.
  CHECK(parse_congruence("x + 3 = 1 (mod 5)").first == lc({1}, -2, 5));
  // Repeated variables accumulate.
  CHECK(parse_congruence("x + x = 0 (mod 3)").first == lc({2}, 0, 3));
  // Leading sign, signed rhs and signed modulus.
  CHECK(parse_congruence("-2a - b = -7 (mod -4)").first == lc({-2, -1}, -7, -4));
  // Zero modulus is legal input.
  CHECK(parse_congruence("3x = 6 (mod 0)").first == lc({3}, 6, 0));
  // Zero coefficients still introduce their variable.
  auto [z, zv] = parse_congruence("0x + y = 1 (mod 2)");
  CHECK(z == lc({0, 1}, 1, 2));
  CHECK(zv == std::vector<std::string>{"x", "y"});
  // Multi-character identifiers.
  CHECK(parse_congruence("12*foo1 - bar = 0 (mod 7)").first ==
        lc({12, -1}, 0, 7));
}

TEST_CASE("parse_congruence reports locations") {
  try {
    parse_congruence("2x + = 1 (mod 4)");
    REQUIRE(false);
  } catch (const ParseError& e) {
    REQUIRE(e.diagnostics().size() == 1);
    CHECK(e.diagnostics()[0].line == 1);
    CHECK(e.diagnostics()[0].column == 6);
  }
  try {
    parse_congruence("2x = 1 (mood 4)");
    REQUIRE(false);
  } catch (const ParseError& e) {
    CHECK(e.diagnostics()[0].column == 9);
  }
  CHECK_THROWS_AS(parse_congruence(""), ParseError);
  CHECK_THROWS_AS(parse_congruence("2x = 1"), ParseError);
  CHECK_THROWS_AS(parse_congruence("2x = 1 (mod 4) junk"), ParseError);
  CHECK_THROWS_AS(parse_congruence("2 = 1 (mod 4)"), ParseError);
  CHECK_THROWS_AS(parse_congruence("x ? 1 (mod 4)"), ParseError);
}

TEST_CASE("parse_system unifies variables in first-appearance order") {
  ParsedInput pi = parse_system(
      "x + y + z \xe2\x89\xa1 0 (mod 2)\n-y + z \xe2\x89\xa1 1 (mod 3)\n");
  CHECK(pi.variables == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(pi.system.rows.size() == 2);
  CHECK(pi.system.rows[0] == lc({1, 1, 1}, 0, 2));
  CHECK(pi.system.rows[1] == lc({0, -1, 1}, 1, 3));
  CHECK(pi.source_spans[0].line == 1);
  CHECK(pi.source_spans[1].line == 2);

  // Variables introduced later pad earlier rows with zero.
  ParsedInput pad = parse_system("x = 1 (mod 2)\ny = 1 (mod 3)");
  CHECK(pad.variables == std::vector<std::string>{"x", "y"});
  CHECK(pad.system.rows[0] == lc({1, 0}, 1, 2));
  CHECK(pad.system.rows[1] == lc({0, 1}, 1, 3));
}

TEST_CASE("parse_system skips comments and aggregates errors") {
  ParsedInput pi =
      parse_system("x = 1 (mod 2)\n# comment\n\nx = 2 (mod 3)\n");
  CHECK(pi.system.rows.size() == 2);

  try {
    parse_system("x = 1 (mod 2)\nx + = (mod 3)\n\nbad line\n");
    REQUIRE(false);
  } catch (const ParseError& e) {
    REQUIRE(e.diagnostics().size() == 2);
    CHECK(e.diagnostics()[0].line == 2);
    CHECK(e.diagnostics()[1].line == 4);
  }

  CHECK_THROWS_AS(parse_system("# nothing\n\n"), ParseError);
}

TEST_CASE("render and reparse is the identity on the data model") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> rows(1, 3);
  std::uniform_int_distribution<int> arity(1, 4);
  std::uniform_int_distribution<long> entry(-99, 99);
  std::uniform_int_distribution<int> modpick(0, 40);
  const std::vector<std::string> pool = {"x",  "y",  "z",  "t",
                                         "u1", "v2", "aa", "b0"};
  for (int iter = 0; iter < 100; ++iter) {
    CongruenceSystem sys;
    int n = arity(rng);
    for (int i = 0; i < n; ++i) sys.variables.push_back(pool[i]);
    int r = rows(rng);
    for (int i = 0; i < r; ++i) {
      LinearCongruence row;
      for (int j = 0; j < n; ++j) row.coeffs.emplace_back(entry(rng));
      row.rhs = entry(rng);
      int m = modpick(rng) - 20;  // includes 0 and negatives
      row.modulus = m;
      sys.rows.push_back(std::move(row));
    }
    std::string text = render_system(sys);
    ParsedInput back = parse_system(text);
    CHECK(back.system == sys);
    // Re-rendering is also stable.
    CHECK(render_system(back.system) == text);
  }
}

TEST_CASE("render uses plain ASCII") {
  std::string text = render_congruence(lc({2, 7, -6}, -3, 4), {"x", "y", "z"});
  CHECK(text == "2*x + 7*y - 6*z = -3 (mod 4)");
  for (unsigned char ch : text) CHECK(ch < 0x80);
}
