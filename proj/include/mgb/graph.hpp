#pragma once

// Marked, vertex-weighted graphs and the structural transforms that act on
// them: local complement, pivot, marked pivot, deletion, loop removal and
// composition along a shared cut vertex.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgb/gf2.hpp"
#include "mgb/ring.hpp"

namespace mgb {

using VertexId = std::size_t;

struct VertexRecord {
  std::string label;
  bool looped = false;
  bool marked = false;
  LaurentPoly alpha = vars::A();
  LaurentPoly beta = vars::B();

  bool has_standard_weights() const;
  bool operator==(const VertexRecord&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotAdjacent : public GraphError {
 public:
  using GraphError::GraphError;
};

class CompositionError : public GraphError {
 public:
  enum class Reason {
    missing_cut_vertex,
    looped_cut_vertex,
    marked_cut_vertex,
    nonstandard_weights,
    label_collision,
  };
  CompositionError(Reason reason, const std::string& what)
      : GraphError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

class GraphParseError : public GraphError {
 public:
  GraphParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Labels are nonempty runs of [A-Za-z0-9_].
bool is_valid_label(std::string_view label);

/// A marked graph with per-vertex weights and a count of free loops.
/// Adjacency is simple and irreflexive; loops live on the vertex records.
/// Vertex order is significant and preserved by every transform.
class MarkedGraph {
 public:
  MarkedGraph() = default;

  VertexId add_vertex(VertexRecord record);
  /// Unlooped, unmarked vertex with standard weights.
  VertexId add_vertex(std::string label);
  void set_edge(VertexId a, VertexId b, bool present = true);
  void toggle_edge(VertexId a, VertexId b);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::size_t free_loops() const { return free_loops_; }
  void set_free_loops(std::size_t n) { free_loops_ = n; }

  const VertexRecord& vertex(VertexId v) const { return vertices_.at(v); }
  VertexRecord& vertex(VertexId v) { return vertices_.at(v); }
  const std::vector<VertexRecord>& vertices() const { return vertices_; }

  bool adjacent(VertexId a, VertexId b) const { return adjacency_.get(a, b); }
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t edge_count() const;
  /// Symmetric, zero-diagonal adjacency relation.
  const gf2::BitMatrix& adjacency() const { return adjacency_; }

  std::optional<VertexId> find(std::string_view label) const;
  /// Throws UnknownVertex.
  VertexId index_of(std::string_view label) const;
  void check_vertex(VertexId v) const;

  bool operator==(const MarkedGraph&) const = default;

 private:
  std::vector<VertexRecord> vertices_;
  gf2::BitMatrix adjacency_;
  std::size_t free_loops_ = 0;
};

/// Toggles adjacency between every pair of distinct neighbors of `v` and the
/// loop on every neighbor of `v`.
MarkedGraph local_complement(const MarkedGraph& g, VertexId v);

/// Toggles {a,b} for a in N(v), b in N(w), a != b, a,b outside {v,w}, unless
/// both a and b lie in N(v) ∩ N(w). `v` and `w` need not be adjacent.
MarkedGraph pivot(const MarkedGraph& g, VertexId v, VertexId w);

/// Pivot, then exchange the neighborhoods of v and w and toggle both marks.
/// Throws NotAdjacent.
MarkedGraph marked_pivot(const MarkedGraph& g, VertexId v, VertexId w);

/// Induced subgraph on the complement of `s`. Free loops are kept.
MarkedGraph delete_vertices(const MarkedGraph& g, std::span<const VertexId> s);
MarkedGraph delete_vertices(const MarkedGraph& g, std::initializer_list<VertexId> s);

/// Induced subgraph on `keep`, in the order given. Free loops are kept.
MarkedGraph induced_subgraph(const MarkedGraph& g, std::span<const VertexId> keep);

/// Removes every loop and swaps alpha/beta on the formerly looped vertices.
MarkedGraph unloop_swap(const MarkedGraph& g);

/// N(v) - {w} == N(w) - {v}. Throws std::invalid_argument when v == w.
bool are_twins(const MarkedGraph& g, VertexId v, VertexId w);

/// Glues f and h along the shared unlooped, unmarked, standard-weight vertex
/// `cut`: every f-neighbor of `cut` becomes adjacent to every h-neighbor.
/// Result order is f's vertices then h's, both without `cut`.
MarkedGraph compose(const MarkedGraph& f, const MarkedGraph& h, std::string_view cut);

/// Vertex-disjoint union; labels must be distinct.
MarkedGraph disjoint_union(const MarkedGraph& a, const MarkedGraph& b);

std::vector<std::vector<VertexId>> connected_components(const MarkedGraph& g);

/// Same vertex records, edges and free loops after matching vertices by label.
bool equal_up_to_vertex_order(const MarkedGraph& a, const MarkedGraph& b);

// Text format, one directive per line, '#' starts a comment:
//   vertex <label> [loop] [mark] [alpha=<poly>] [beta=<poly>]
//   edge <label> <label>
//   freeloops <n>
// Polynomial values may be quoted to allow spaces: alpha="A + B".
MarkedGraph parse_graph(std::string_view text);
std::string write_graph(const MarkedGraph& g);

}  // namespace mgb
