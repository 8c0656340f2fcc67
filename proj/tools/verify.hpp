#pragma once

// Property checks against the state-sum oracle. Each check is deterministic
// for a fixed seed and stops at the first counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgb/graph.hpp"

namespace mgb::verify {

struct Counterexample {
  std::string detail;
  MarkedGraph graph;
  std::optional<MarkedGraph> second;  // h of a composition pair
};

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure; }
};

/// Every labelled graph on 0..max_n vertices with every loop/mark assignment
/// and standard weights: recursive engine and automatic engine vs state sum.
CheckResult oracle_exhaustive(std::size_t max_n);

/// Random graphs with symbolic per-vertex weights.
CheckResult oracle_random(std::uint64_t seed, std::size_t trials, std::size_t min_n,
                          std::size_t max_n);

/// [g] is unchanged by a marked pivot. `inject_fault` swaps in a broken
/// marked pivot that also toggles the pivot edge.
CheckResult marked_pivot_invariance(std::uint64_t seed, std::size_t trials,
                                    bool inject_fault = false);

/// [g] = [unloop_swap(g)], and one more free loop multiplies by d.
CheckResult loop_swap(std::uint64_t seed, std::size_t trials);

CheckResult union_multiplicativity(std::uint64_t seed, std::size_t trials);

/// Weights of a vertex enter linearly.
CheckResult weight_linearity(std::uint64_t seed, std::size_t trials);

CheckResult twin_pair_reduce_contract(std::uint64_t seed, std::size_t trials);
CheckResult twin_pair_split_contract(std::uint64_t seed, std::size_t trials);
CheckResult twin_chain_contract(std::uint64_t seed, std::size_t trials);
CheckResult dual_parallel_contract(std::uint64_t seed, std::size_t trials);
CheckResult clique_twin_contract(std::uint64_t seed, std::size_t trials);

/// Random (f, h) pairs with |V(f)|, |V(h)| <= max_side: the composition sum,
/// the five-term formula, the beta gauge shift, equality of the three weight
/// derivations, the F+/F- identities and the contribution decomposition.
CheckResult composition_identities(std::uint64_t seed, std::size_t trials,
                                   std::size_t max_side = 7);

/// For random (f, a) and every subset of V(f-a), the three nullities form
/// the (v+1, v, v) pattern with one maximizer.
CheckResult subset_type_pattern(std::uint64_t seed, std::size_t trials, std::size_t max_rest = 8);

struct Options {
  std::size_t max_n = 4;
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  bool inject_fault = false;
};

/// Runs every check; stops after the first failing one.
std::vector<CheckResult> run_all(const Options& opts);

}  // namespace mgb::verify
