#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "congrlat/congruence.hpp"
#include "congrlat/congruence_system.hpp"

namespace congrlat {

struct SourceSpan {
  std::size_t line = 0;   // 1-based
  std::size_t begin = 0;  // 1-based byte column of the row's first token
  std::size_t end = 0;    // 1-based byte column just past the row
};

// A parsed system plus where each row came from. Variables are ordered by
// first appearance over the whole input; a variable absent from a row
// contributes coefficient 0 there.
struct ParsedInput {
  std::vector<std::string> variables;
  CongruenceSystem system;
  std::vector<SourceSpan> source_spans;
};

/// Parse one congruence like "2x + 7y - 6z = -3 (mod 4)". Both "=" and the
/// UTF-8 "≡" are accepted; "*" between coefficient and variable is optional;
/// modulus 0 is legal input.
std::pair<LinearCongruence, std::vector<std::string>> parse_congruence(
    const std::string& text);

/// Parse one congruence per non-empty, non-comment ('#') line. Syntax errors
/// are aggregated across lines with their locations.
ParsedInput parse_system(const std::string& text);

/// Canonical text form; re-parsing yields an identical CongruenceSystem.
/// Output is plain ASCII.
std::string render_congruence(const LinearCongruence& row,
                              const std::vector<std::string>& variables);
std::string render_system(const CongruenceSystem& sys);

}  // namespace congrlat
