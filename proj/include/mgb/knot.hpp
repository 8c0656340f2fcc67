#pragma once

// Euler codes of (virtual) link diagrams, their interlacement graphs, and the
// bracket -> f polynomial -> Jones polynomial pipeline.

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgb/bracket.hpp"
#include "mgb/graph.hpp"
#include "mgb/ring.hpp"

namespace mgb {

enum class Sign { positive, negative };

/// Crossing labels in circuit order. `signs` holds an entry for every label.
struct EulerCode {
  std::vector<std::vector<std::string>> circuits;
  std::map<std::string, Sign> signs;
  std::set<std::string> marks;
  std::size_t free_loops = 0;

  bool operator==(const EulerCode&) const = default;
};

class KnotParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, double_occurrence, split_label, unknown_label };

  /// `line` and `column` are 1-based; 0 when the error has no position.
  KnotParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

class UnexpectedVariable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view to_string(KnotParseError::Kind kind);

// One directive per line, '#' starts a comment:
//   circuit <label>...
//   sign <label> +|-      (default +)
//   mark <label>
//   freeloops <n>
EulerCode parse_euler_code(std::string_view text);
std::string write_euler_code(const EulerCode& code);

/// Checks the occurrence invariants of a code built in memory. Throws
/// KnotParseError without a position.
void validate_euler_code(const EulerCode& code);

/// One vertex per label in order of first appearance. Two labels are adjacent
/// iff their occurrences alternate within their circuit.
MarkedGraph interlacement_graph(const EulerCode& code);

/// Positive minus negative crossings.
int writhe(const EulerCode& code);

/// Bracket with d -> -A^2 - B^2 and B -> A^-1, times (-A^-3)^w.
/// Throws UnexpectedVariable for any variable besides A, B, d.
LaurentPoly f_polynomial(const BracketValue& bracket, int w);

/// Laurent polynomial in q = t^(1/4).
struct JonesValue {
  LaurentPoly poly;

  bool operator==(const JonesValue&) const = default;
};

/// A -> q^-1. Throws UnexpectedVariable unless `f` only involves A.
JonesValue jones(const LaurentPoly& f);

/// Prints in t with descending exponents: "-t^{5/2} - t^{1/2}", "t^2 - 1 + t^-1".
std::string to_string(const JonesValue& v);

BracketValue diagram_bracket(const EulerCode& code, Engine engine,
                             BracketStats* stats = nullptr,
                             std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace mgb
