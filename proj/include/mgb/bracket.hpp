#pragma once

// The weighted marked-graph bracket: a brute-force state sum over all vertex
// subsets, and a recursive evaluator built from pivots and local complements.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mgb/graph.hpp"
#include "mgb/ring.hpp"

namespace mgb {

using BracketValue = LaurentPoly;

enum class Engine { statesum, recursive, automatic };

Engine parse_engine(std::string_view name);
std::string to_string(Engine engine);

inline constexpr std::size_t kDefaultOracleLimit = 24;

/// Work counters. Deterministic for a fixed input and engine.
struct BracketStats {
  std::uint64_t subsets = 0;          // subsets whose nullity was evaluated
  std::uint64_t recursion_calls = 0;  // recursive engine invocations
  std::uint64_t twin_reductions = 0;  // consolidations done by the auto engine

  BracketStats& operator+=(const BracketStats& o) {
    subsets += o.subsets;
    recursion_calls += o.recursion_calls;
    twin_reductions += o.twin_reductions;
    return *this;
  }
};

class OracleLimitExceeded : public std::runtime_error {
 public:
  OracleLimitExceeded(std::size_t n, std::size_t limit)
      : std::runtime_error("state sum over " + std::to_string(n) +
                           " vertices exceeds the oracle limit of " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  std::size_t vertices() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// d^phi * sum over all T of (prod_{v not in T} alpha(v)) (prod_{v in T} beta(v))
/// d^{nullity of the restricted matrix}. No size guard; callers enforce one.
BracketValue bracket_state_sum(const MarkedGraph& g, BracketStats* stats = nullptr);

/// Free loops, loop removal, component splitting, marked pivots, then the
/// marked-vertex and edge expansions down to isolated unmarked vertices.
/// Always picks the lowest-index eligible vertex or edge.
BracketValue bracket_recursive(const MarkedGraph& g, BracketStats* stats = nullptr);

/// statesum enforces `oracle_limit`; automatic = loop removal and twin
/// consolidation followed by the recursive engine.
BracketValue bracket(const MarkedGraph& g, Engine engine, BracketStats* stats = nullptr,
                     std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace mgb
