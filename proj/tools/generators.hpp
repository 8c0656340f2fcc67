#pragma once

// Seeded random instances for the verification harness, the benchmarks and
// the test suites. Every draw comes straight from mt19937_64 output bits, so a
// seed reproduces the same instance on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mgb/graph.hpp"
#include "mgb/knot.hpp"
#include "mgb/ring.hpp"

namespace mgb::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);
/// True with probability 1/2^k.
bool one_in_pow2(Rng& rng, unsigned k);

struct GraphOptions {
  std::string prefix = "v";
  bool loops = true;      // each vertex looped with probability 1/4
  bool marks = true;      // each vertex marked with probability 1/4
  bool symbolic = false;  // weights x_<label>, y_<label> instead of A, B
};

/// n vertices labelled <prefix>0.., each edge present with probability 1/2.
MarkedGraph random_graph(Rng& rng, std::size_t n, const GraphOptions& opts = {});

/// Random polynomial over `vars` with up to `terms` terms, coefficients in
/// [-3, 3] and exponents in [-2, 2].
LaurentPoly random_poly(Rng& rng, const std::vector<std::string>& vars, std::size_t terms);

/// Appends k unlooped twins sharing a random neighborhood in g. Twins are
/// pairwise adjacent when `clique` holds; `marked[i]` sets the i-th mark.
/// Returns the new vertex ids.
std::vector<VertexId> plant_twins(Rng& rng, MarkedGraph& g, const std::vector<bool>& marked,
                                  bool clique, bool symbolic);

/// Adds an unlooped, unmarked, standard-weight cut vertex `label` adjacent to
/// a random nonempty subset of g (when g is nonempty).
VertexId add_cut_vertex(Rng& rng, MarkedGraph& g, const std::string& label);

/// Random code with the given number of crossings spread over 1..3 circuits.
EulerCode random_euler_code(Rng& rng, std::size_t crossings);

}  // namespace mgb::gen
