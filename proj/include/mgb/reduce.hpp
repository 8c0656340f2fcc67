#pragma once

// Bracket-preserving reductions: twin consolidation, clique and dual-parallel
// collapses, and the weight triples that let a composition F*H be evaluated
// from brackets of graphs the size of H.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "mgb/bracket.hpp"
#include "mgb/graph.hpp"
#include "mgb/ring.hpp"

namespace mgb {

class ReduceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotTwins : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

class NotCliqueTwins : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

/// Twin pattern with no consolidation formula for the requested operation.
class UncoveredTwinCase : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

/// dual_parallel_reduce needs an odd count of at least three.
class EvenK : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

/// The three nullities of a subset did not form the (v+1, v, v) pattern.
class ClassificationViolation : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

/// The cut vertex has a marked neighbor where the composition formula
/// forbids one.
class MarkedNeighborInH : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

class MarkedNeighbor : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

/// The cut vertex must be unlooped, unmarked and carry standard weights.
class BadCutVertex : public ReduceError {
 public:
  using ReduceError::ReduceError;
};

/// Weights of the replacement vertices a and a_m; beta(a_m) is fixed at 0.
struct WeightTriple {
  LaurentPoly alpha_a;
  LaurentPoly beta_a;
  LaurentPoly alpha_am;

  bool operator==(const WeightTriple&) const = default;
};

enum class SubsetType { type1 = 1, type2 = 2, type3 = 3 };

// ------------------------------------------------------------------- twins

/// Pairwise adjacent, unlooped twins v1..vk collapse onto v1.
MarkedGraph clique_twin_reduce(const MarkedGraph& g, std::span<const VertexId> vs);

/// Consolidates unlooped twins v,w into v for the patterns
/// (marked, marked, nonadjacent), (marked, marked, adjacent),
/// (unmarked, unmarked, adjacent) and (unmarked, marked, adjacent).
/// (marked, unmarked, adjacent) is accepted by symmetry; v ends unmarked.
MarkedGraph twin_pair_reduce(const MarkedGraph& g, VertexId v, VertexId w);

/// [g] = [reduced] + gamma * [removed].
struct TwinSplit {
  MarkedGraph reduced;
  LaurentPoly gamma;
  MarkedGraph removed;
};

/// Nonadjacent unlooped twins with at most one of them marked.
TwinSplit twin_pair_split(const MarkedGraph& g, VertexId v, VertexId w);

/// Pairwise nonadjacent unlooped twins v1..vk collapse onto v1, leaving one
/// correction term on g - v1 - ... - vk.
TwinSplit nonadjacent_twin_chain(const MarkedGraph& g, std::span<const VertexId> vs);

/// Odd k >= 3 unmarked, pairwise nonadjacent, unlooped twins collapse onto v1
/// with no correction term.
MarkedGraph dual_parallel_reduce(const MarkedGraph& g, std::span<const VertexId> vs);

/// Repeatedly applies twin_pair_reduce to the first covered unlooped twin
/// pair. `applied` receives the number of consolidations.
MarkedGraph consolidate_twins(const MarkedGraph& g, std::size_t* applied = nullptr);

// ------------------------------------------------------------ composition

/// f with the cut vertex reweighted to (1, 0) and to (0, 1).
std::pair<MarkedGraph, MarkedGraph> build_F10_F01(const MarkedGraph& f, VertexId a);

/// f with the cut vertex unlooped (F+) and looped (F-), standard weights.
std::pair<MarkedGraph, MarkedGraph> build_Fpm(const MarkedGraph& f, VertexId a);

/// Solves for the triple from [F-a], [F^10], [F^01]; divides by 2 - d - d^2.
WeightTriple pjoin_weights_cor1(const LaurentPoly& f_minus_a, const LaurentPoly& f10,
                                const LaurentPoly& f01);

/// Solves for the triple from [F-a], [F+], [F-]; divides by A + B and A^2 - B^2.
WeightTriple pjoin_weights_cor3(const LaurentPoly& f_minus_a, const LaurentPoly& f_plus,
                                const LaurentPoly& f_minus);

/// Which of nullity(A(F)_T), nullity(A(F)_{T+a}), nullity(A(F-a)_T) is the
/// larger one. `subset` is a membership vector over V(f) with a excluded.
SubsetType subset_type(const MarkedGraph& f, VertexId a, const std::vector<bool>& subset);

/// Contributions to [F-a] (free loops of f included) grouped by subset type.
struct Contributions {
  LaurentPoly type1;
  LaurentPoly type2;
  LaurentPoly type3;
  std::uint64_t subsets = 0;
};
Contributions subset_contributions(const MarkedGraph& f, VertexId a);

/// (contr3 / d, contr2, contr1).
WeightTriple pjoin_weights_cor4(const MarkedGraph& f, VertexId a, BracketStats* stats = nullptr);

struct PjoinGraphs {
  MarkedGraph h_prime;   // cut vertex reweighted to (alpha_a, beta_a)
  MarkedGraph h_marked;  // cut vertex marked, weights (alpha_am, beta_am)
};
PjoinGraphs pjoin_graphs(const MarkedGraph& h, std::string_view cut, const WeightTriple& w,
                         const LaurentPoly& beta_am = LaurentPoly());

struct CompositionBracket {
  WeightTriple weights;
  BracketValue h_prime;
  BracketValue h_marked;
  BracketValue total;
  BracketStats weight_stats;
  BracketStats h_stats;
};

/// [F*H] = [H'] + [H'_m]. Throws MarkedNeighborInH when a neighbor of the
/// cut vertex in h is marked.
CompositionBracket composition_bracket(const MarkedGraph& f, const MarkedGraph& h,
                                       std::string_view cut, Engine engine,
                                       std::size_t oracle_limit = kDefaultOracleLimit);

BracketValue bracket_via_composition(const MarkedGraph& f, const MarkedGraph& h,
                                     std::string_view cut, Engine engine);

/// Five-term bilinear combination of the triples of both sides.
BracketValue double_composition(const WeightTriple& f_side, const WeightTriple& h_side);

/// Requires that neither f nor h has a marked neighbor of the cut vertex.
BracketValue bracket_double_composition(const MarkedGraph& f, const MarkedGraph& h,
                                        std::string_view cut);

}  // namespace mgb
