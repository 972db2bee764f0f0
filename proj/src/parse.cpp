#include "congrlat/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "congrlat/errors.hpp"

namespace congrlat {

namespace {

enum class Tok { integer, ident, plus, minus, star, lparen, rparen, rel, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based byte offset
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::integer: return "integer";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::rel: return "'=' or '\xe2\x89\xa1'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::integer, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::plus, "+", col}); ++i; continue;
      case '-': out.push_back({Tok::minus, "-", col}); ++i; continue;
      case '*': out.push_back({Tok::star, "*", col}); ++i; continue;
      case '(': out.push_back({Tok::lparen, "(", col}); ++i; continue;
      case ')': out.push_back({Tok::rparen, ")", col}); ++i; continue;
      case '=': out.push_back({Tok::rel, "=", col}); ++i; continue;
      default: break;
    }
    // UTF-8 for the congruence sign.
    if (s.compare(i, 3, "\xe2\x89\xa1") == 0) {
      out.push_back({Tok::rel, "\xe2\x89\xa1", col});
      i += 3;
      continue;
    }
    throw ParseError(line, col,
                     std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

// Accumulates coefficients keyed by name in first-appearance order; constant
// terms on the left move to the right-hand side.
struct RowBuilder {
  std::vector<std::string> order;
  std::map<std::string, Int> coeffs;
  Int constant = 0;

  void add_term(const std::string& var, const Int& coeff) {
    auto [it, fresh] = coeffs.emplace(var, 0);
    if (fresh) order.push_back(var);
    it->second += coeff;
  }
};

class Parser {
 public:
  Parser(const std::string& text, std::size_t line)
      : line_(line), tokens_(tokenize(text, line)) {}

  std::pair<LinearCongruence, std::vector<std::string>> congruence() {
    RowBuilder row;
    sum(row);
    expect(Tok::rel);
    Int rhs = signed_integer("right-hand side");
    expect(Tok::lparen);
    Token kw = expect(Tok::ident);
    if (kw.text != "mod")
      throw ParseError(line_, kw.column, "expected 'mod', found '" + kw.text +
                                             "'");
    Int modulus = signed_integer("modulus");
    expect(Tok::rparen);
    expect(Tok::end);
    if (row.order.empty())
      throw ParseError(line_, 1, "congruence names no variable");

    LinearCongruence c;
    for (const std::string& v : row.order) c.coeffs.push_back(row.coeffs[v]);
    c.rhs = rhs - row.constant;
    c.modulus = modulus;
    return {std::move(c), std::move(row.order)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  Token expect(Tok kind) {
    if (peek().kind != kind)
      throw ParseError(line_, peek().column,
                       std::string("expected ") + describe(kind) +
                           ", found " + describe(peek().kind));
    return next();
  }

  Int signed_integer(const char* what) {
    Int sign = 1;
    if (peek().kind == Tok::minus) {
      next();
      sign = -1;
    } else if (peek().kind == Tok::plus) {
      next();
    }
    if (peek().kind != Tok::integer)
      throw ParseError(line_, peek().column,
                       std::string("expected integer ") + what + ", found " +
                           describe(peek().kind));
    return sign * Int(next().text);
  }

  // sum := ['+'|'-'] term (('+'|'-') term)*
  void sum(RowBuilder& row) {
    Int sign = 1;
    if (peek().kind == Tok::minus) {
      next();
      sign = -1;
    } else if (peek().kind == Tok::plus) {
      next();
    }
    term(row, sign);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = next().kind == Tok::plus ? 1 : -1;
      term(row, sign);
    }
  }

  // term := integer ['*'] identifier | identifier | integer
  void term(RowBuilder& row, const Int& sign) {
    if (peek().kind == Tok::integer) {
      Int value(next().text);
      if (peek().kind == Tok::star) {
        next();
        Token var = expect(Tok::ident);
        row.add_term(var.text, Int(sign * value));
        return;
      }
      if (peek().kind == Tok::ident) {
        row.add_term(next().text, Int(sign * value));
        return;
      }
      row.constant += sign * value;
      return;
    }
    if (peek().kind == Tok::ident) {
      row.add_term(next().text, sign);
      return;
    }
    throw ParseError(line_, peek().column,
                     std::string("expected a term, found ") +
                         describe(peek().kind));
  }

  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::pair<LinearCongruence, std::vector<std::string>> parse_congruence(
    const std::string& text) {
  return Parser(text, 1).congruence();
}

ParsedInput parse_system(const std::string& text) {
  struct RawRow {
    LinearCongruence row;
    std::vector<std::string> vars;
    SourceSpan span;
  };
  std::vector<RawRow> raw;
  std::vector<ParseDiagnostic> problems;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    try {
      auto [row, vars] = Parser(line, lineno).congruence();
      std::size_t first = line.find_first_not_of(" \t");
      raw.push_back({std::move(row), std::move(vars),
                     {lineno, first + 1, line.size() + 1}});
    } catch (const ParseError& e) {
      for (const auto& d : e.diagnostics()) problems.push_back(d);
    }
  }
  if (!problems.empty()) throw ParseError(std::move(problems));
  if (raw.empty())
    throw ParseError(lineno, 1, "input contains no congruence");

  // Unified variable order: first appearance across the whole input.
  ParsedInput out;
  for (const auto& r : raw) {
    for (const auto& v : r.vars) {
      bool seen = false;
      for (const auto& u : out.variables) {
        if (u == v) {
          seen = true;
          break;
        }
      }
      if (!seen) out.variables.push_back(v);
    }
  }
  out.system.variables = out.variables;
  for (auto& r : raw) {
    LinearCongruence aligned;
    aligned.coeffs.assign(out.variables.size(), 0);
    for (std::size_t i = 0; i < r.vars.size(); ++i) {
      for (std::size_t j = 0; j < out.variables.size(); ++j) {
        if (out.variables[j] == r.vars[i]) {
          aligned.coeffs[j] = r.row.coeffs[i];
          break;
        }
      }
    }
    aligned.rhs = r.row.rhs;
    aligned.modulus = r.row.modulus;
    out.system.rows.push_back(std::move(aligned));
    out.source_spans.push_back(r.span);
  }
  return out;
}

std::string render_congruence(const LinearCongruence& row,
                              const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const Int& a = row.coeffs[i];
    Int mag = abs(a);
    if (i == 0) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    out += to_string(mag) + "*" + variables[i];
  }
  out += " = " + to_string(row.rhs) + " (mod " + to_string(row.modulus) + ")";
  return out;
}

std::string render_system(const CongruenceSystem& sys) {
  std::string out;
  for (const auto& row : sys.rows) {
    out += render_congruence(row, sys.variables);
    out += '\n';
  }
  return out;
}

}  // namespace congrlat
