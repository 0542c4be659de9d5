#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unisynt {

// Sorted, duplicate-free list of proposition names.
using Props = std::vector<std::string>;

Props make_props(std::vector<std::string> names);
bool props_contains(const Props& ps, const std::string& name);
Props props_union(const Props& a, const Props& b);
std::string props_format(const Props& ps);  // "p,q" / "-" when empty
Props props_parse(const std::string& text); // inverse of props_format

// One meaningful line of a model file: 1-based number, whitespace tokens,
// comments ('#' to end of line) and blank lines already dropped.
struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize_lines(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

struct UnisyntError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (arenas, transducers, strategies, formulas).
struct ParseError : UnisyntError {
  ParseError(const std::string& msg, int line)
      : UnisyntError("parse error, line " + std::to_string(line) + ": " + msg), line(line) {}
  explicit ParseError(const std::string& msg) : UnisyntError("parse error: " + msg), line(0) {}
  int line;
};

// Structurally ill-formed model (arena invariants, relation preconditions, ...).
struct ValidationError : UnisyntError {
  using UnisyntError::UnisyntError;
};

// Strategy machine inconsistent with the arena it is applied to.
struct MachineError : UnisyntError {
  using UnisyntError::UnisyntError;
};

// An explicit construction exceeded its configured size cap.
struct ResourceLimitError : UnisyntError {
  using UnisyntError::UnisyntError;
};

}  // namespace unisynt
