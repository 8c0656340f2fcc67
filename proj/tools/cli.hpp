#pragma once

// Command implementations behind the mgb executable. Each command writes its
// result to `out`, diagnostics to `err`, and returns the process exit code.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgb/bracket.hpp"
#include "mgb/ring.hpp"

namespace mgb::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kInputError = 1, kLimitExceeded = 2, kPropertyViolation = 3 };

enum class OutputFormat { text, json };

/// [{"coefficient": 2, "exponents": {"A": 1, "B": 1}}, ...] in canonical term
/// order. Coefficients outside int64 are written as decimal strings.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

struct InputDigest {
  std::string path;
  std::string fnv1a64;  // 16 lowercase hex digits
  bool operator==(const InputDigest&) const = default;
};

struct NamedPoly {
  std::string name;
  std::string text;  // rendering shown to users (Jones values print in t)
  LaurentPoly poly;
  bool operator==(const NamedPoly&) const = default;
};

struct RunReport {
  std::string command;
  std::vector<InputDigest> inputs;
  std::string engine;
  std::vector<NamedPoly> results;
  std::map<std::string, std::string> fields;
  std::map<std::string, std::uint64_t> counters;
  double wall_time_ms = 0;

  bool operator==(const RunReport&) const = default;
};

json report_to_json(const RunReport& r);
RunReport report_from_json(const json& j);

std::string fnv1a64_hex(std::string_view bytes);

struct CommonOptions {
  Engine engine = Engine::automatic;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 1;
  std::size_t limit = kDefaultOracleLimit;
  std::string command_line;  // echoed into the report
};

int cmd_bracket(const std::string& graph_path, const CommonOptions& opts, std::ostream& out,
                std::ostream& err);

int cmd_jones(const std::string& code_path, const CommonOptions& opts, std::ostream& out,
              std::ostream& err);

/// Also evaluates the composed graph directly when it has at most
/// `opts.limit` vertices.
int cmd_compose(const std::string& f_path, const std::string& h_path, const std::string& cut,
                const CommonOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t max_n = 4;
  std::size_t trials = 50;
  bool inject_fault = false;
};

int cmd_verify(const VerifyOptions& v, const CommonOptions& opts, std::ostream& out,
               std::ostream& err);

struct BenchOptions {
  std::size_t n = 12;
  std::size_t trials = 5;
};

int cmd_bench(const BenchOptions& b, const CommonOptions& opts, std::ostream& out,
              std::ostream& err);

}  // namespace mgb::cli
