#include "mgb/bracket.hpp"

#include <vector>

#include "mgb/gf2.hpp"
#include "mgb/reduce.hpp"
#include "subset_sum.hpp"

namespace mgb {

Engine parse_engine(std::string_view name) {
  if (name == "statesum") return Engine::statesum;
  if (name == "recursive") return Engine::recursive;
  if (name == "auto") return Engine::automatic;
  throw std::invalid_argument("unknown engine '" + std::string(name) +
                              "' (expected statesum, recursive or auto)");
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::statesum:
      return "statesum";
    case Engine::recursive:
      return "recursive";
    case Engine::automatic:
      return "auto";
  }
  return "?";
}

// --------------------------------------------------------------- state sum

BracketValue bracket_state_sum(const MarkedGraph& g, BracketStats* stats) {
  const std::size_t n = g.size();
  if (n > gf2::kWordBits) throw OracleLimitExceeded(n, gf2::kWordBits);

  std::vector<gf2::Word> adjacency(n);
  gf2::Word looped = 0;
  gf2::Word marked = 0;
  std::vector<LaurentPoly> alpha;
  std::vector<LaurentPoly> beta;
  for (VertexId v = 0; v < n; ++v) {
    adjacency[v] = g.adjacency().row(v)[0];
    if (g.vertex(v).looped) looped |= gf2::Word{1} << v;
    if (g.vertex(v).marked) marked |= gf2::Word{1} << v;
    alpha.push_back(g.vertex(v).alpha);
    beta.push_back(g.vertex(v).beta);
  }

  detail::SubsetSum sum(alpha, beta);
  std::vector<gf2::Word> rows(n);
  sum.run([&](std::uint64_t subset) -> std::optional<detail::SubsetTerm> {
    const gf2::Word diagonal = looped ^ subset;
    const gf2::Word keep = ~(marked & ~diagonal);
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = adjacency[i] | (diagonal & (gf2::Word{1} << i));
    }
    const gf2::Word all = n == gf2::kWordBits ? ~gf2::Word{0} : (gf2::Word{1} << n) - 1;
    return detail::SubsetTerm{0, static_cast<int>(gf2::masked_nullity(rows, keep & all))};
  });
  if (stats) stats->subsets += sum.visited();
  return sum.total(0) * LaurentPoly::var("d", static_cast<int>(g.free_loops()));
}

// --------------------------------------------------------------- recursion

namespace {

BracketValue recurse(const MarkedGraph& input, BracketStats& stats) {
  ++stats.recursion_calls;
  if (input.free_loops() != 0) {
    MarkedGraph h = input;
    h.set_free_loops(0);
    return LaurentPoly::var("d", static_cast<int>(input.free_loops())) * recurse(h, stats);
  }
  if (input.empty()) return LaurentPoly(1);

  MarkedGraph g = unloop_swap(input);

  const auto components = connected_components(g);
  if (components.size() > 1) {
    LaurentPoly product(1);
    for (const auto& comp : components) {
      if (comp.size() == 1 && !g.vertex(comp[0]).marked) {
        const VertexRecord& r = g.vertex(comp[0]);
        product *= r.alpha * vars::d() + r.beta;
      } else {
        product *= recurse(induced_subgraph(g, comp), stats);
      }
      if (product.is_zero()) break;
    }
    return product;
  }

  // Marked pivots until no two marked vertices are adjacent; each one unmarks two.
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < g.size() && !changed; ++v) {
      if (!g.vertex(v).marked) continue;
      for (VertexId w = v + 1; w < g.size(); ++w) {
        if (g.vertex(w).marked && g.adjacent(v, w)) {
          g = marked_pivot(g, v, w);
          changed = true;
          break;
        }
      }
    }
  }

  for (VertexId v = 0; v < g.size(); ++v) {
    if (!g.vertex(v).marked) continue;
    const VertexRecord& r = g.vertex(v);
    LaurentPoly out;
    if (!r.alpha.is_zero()) out += r.alpha * recurse(delete_vertices(g, {v}), stats);
    if (!r.beta.is_zero()) {
      out += r.beta * recurse(delete_vertices(local_complement(g, v), {v}), stats);
    }
    return out;
  }

  // Every vertex is unmarked and unlooped here.
  for (VertexId v = 0; v < g.size(); ++v) {
    for (VertexId w = 0; w < g.size(); ++w) {
      if (w == v || !g.adjacent(v, w)) continue;
      const VertexRecord& rv = g.vertex(v);
      const VertexRecord& rw = g.vertex(w);
      LaurentPoly out;
      if (!rv.alpha.is_zero()) {
        const MarkedGraph p = pivot(g, v, w);
        const LaurentPoly aa = rv.alpha * rw.alpha;
        const LaurentPoly ab = rv.alpha * rw.beta;
        if (!aa.is_zero()) out += aa * recurse(delete_vertices(p, {v, w}), stats);
        if (!ab.is_zero()) {
          out += ab * recurse(delete_vertices(local_complement(p, v), {v, w}), stats);
        }
      }
      if (!rv.beta.is_zero()) {
        out += rv.beta * recurse(delete_vertices(local_complement(g, v), {v}), stats);
      }
      return out;
    }
  }

  LaurentPoly product(1);
  for (const auto& r : g.vertices()) product *= r.alpha * vars::d() + r.beta;
  return product;
}

}  // namespace

BracketValue bracket_recursive(const MarkedGraph& g, BracketStats* stats) {
  BracketStats local;
  BracketValue out = recurse(g, local);
  if (stats) *stats += local;
  return out;
}

BracketValue bracket(const MarkedGraph& g, Engine engine, BracketStats* stats,
                     std::size_t oracle_limit) {
  switch (engine) {
    case Engine::statesum:
      if (g.size() > oracle_limit) throw OracleLimitExceeded(g.size(), oracle_limit);
      return bracket_state_sum(g, stats);
    case Engine::recursive:
      return bracket_recursive(g, stats);
    case Engine::automatic: {
      std::size_t reductions = 0;
      const MarkedGraph reduced = consolidate_twins(unloop_swap(g), &reductions);
      if (stats) stats->twin_reductions += reductions;
      return bracket_recursive(reduced, stats);
    }
  }
  throw std::logic_error("unhandled engine");
}

}  // namespace mgb
