#include "mgb/reduce.hpp"

#include <algorithm>

#include "mgb/gf2.hpp"
#include "subset_sum.hpp"

namespace mgb {

namespace {

using vars::A;
using vars::B;
using vars::d;

LaurentPoly product_of(std::span<const LaurentPoly> factors) {
  LaurentPoly out(1);
  for (const auto& f : factors) out *= f;
  return out;
}

void require_distinct(const MarkedGraph& g, std::span<const VertexId> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    g.check_vertex(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) throw std::invalid_argument("vertex listed twice");
    }
  }
}

// True iff every vertex of `vs` sees the same vertices outside `vs`.
bool common_outside_neighbors(const MarkedGraph& g, std::span<const VertexId> vs) {
  std::vector<bool> in_set(g.size(), false);
  for (VertexId v : vs) in_set[v] = true;
  for (VertexId u = 0; u < g.size(); ++u) {
    if (in_set[u]) continue;
    for (VertexId v : vs) {
      if (g.adjacent(v, u) != g.adjacent(vs[0], u)) return false;
    }
  }
  return true;
}

// g minus every vertex of vs except the first, whose record is replaced.
MarkedGraph collapse_onto_first(const MarkedGraph& g, std::span<const VertexId> vs,
                                bool marked, LaurentPoly alpha, LaurentPoly beta) {
  MarkedGraph h = delete_vertices(g, vs.subspan(1));
  VertexRecord& r = h.vertex(h.index_of(g.vertex(vs[0]).label));
  r.marked = marked;
  r.alpha = std::move(alpha);
  r.beta = std::move(beta);
  return h;
}

void require_unlooped_twins(const MarkedGraph& g, VertexId v, VertexId w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw NotTwins("a vertex is not its own twin");
  if (g.vertex(v).looped || g.vertex(w).looped) {
    throw NotTwins("twin reductions need unlooped vertices ('" + g.vertex(v).label + "', '" +
                   g.vertex(w).label + "')");
  }
  if (!are_twins(g, v, w)) {
    throw NotTwins("'" + g.vertex(v).label + "' and '" + g.vertex(w).label + "' are not twins");
  }
}

void require_cut_vertex(const MarkedGraph& f, VertexId a) {
  f.check_vertex(a);
  const VertexRecord& r = f.vertex(a);
  if (r.looped || r.marked || !r.has_standard_weights()) {
    throw BadCutVertex("cut vertex '" + r.label +
                       "' must be unlooped, unmarked and carry standard weights");
  }
}

// Weights of a single twin in a class of pairwise nonadjacent twins.
struct TwinRecord {
  bool marked;
  LaurentPoly alpha;
  LaurentPoly beta;
};

// Two marked nonadjacent twins merge into one marked twin.
TwinRecord merge_marked_pair(const TwinRecord& v, const TwinRecord& w) {
  return {true, v.alpha * w.alpha + v.beta * w.beta, v.alpha * w.beta + v.beta * w.alpha};
}

// Unmarked v with unmarked or marked w; the merged twin is unmarked and the
// correction coefficient is beta(v) beta(w).
TwinRecord split_pair(const TwinRecord& v, const TwinRecord& w) {
  if (!w.marked) {
    return {false, v.alpha * w.alpha * d() + v.alpha * w.beta + v.beta * w.alpha, LaurentPoly()};
  }
  return {false, v.alpha * w.alpha + v.alpha * w.beta, v.beta * w.alpha};
}

// Reduces a class with at most one marked twin:
// [class] = [class -> {x}] + gamma * [class -> {}].
std::pair<TwinRecord, LaurentPoly> reduce_class(std::vector<TwinRecord> records) {
  if (records.size() == 1) return {records[0], LaurentPoly()};
  auto marked_it = std::find_if(records.begin(), records.end(),
                                [](const TwinRecord& r) { return r.marked; });
  TwinRecord first;
  TwinRecord second;
  if (marked_it != records.end()) {
    second = *marked_it;
    records.erase(marked_it);
    first = records.front();
    records.erase(records.begin());
  } else {
    first = records[0];
    second = records[1];
    records.erase(records.begin(), records.begin() + 2);
  }
  const TwinRecord merged = split_pair(first, second);
  const LaurentPoly coefficient = first.beta * second.beta;
  if (records.empty()) return {merged, coefficient};

  std::vector<TwinRecord> with_merged{merged};
  with_merged.insert(with_merged.end(), records.begin(), records.end());
  auto [y, gamma_y] = reduce_class(std::move(with_merged));
  if (coefficient.is_zero()) return {y, gamma_y};
  // Both y and z are unmarked, so their weights combine linearly.
  auto [z, gamma_z] = reduce_class(std::move(records));
  y.alpha += coefficient * z.alpha;
  y.beta += coefficient * z.beta;
  return {y, gamma_y + coefficient * gamma_z};
}

}  // namespace

// ------------------------------------------------------------------- twins

MarkedGraph clique_twin_reduce(const MarkedGraph& g, std::span<const VertexId> vs) {
  if (vs.empty()) throw NotCliqueTwins("empty twin list");
  require_distinct(g, vs);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (g.vertex(vs[i]).looped) throw NotCliqueTwins("'" + g.vertex(vs[i]).label + "' is looped");
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) {
        throw NotCliqueTwins("'" + g.vertex(vs[i]).label + "' and '" + g.vertex(vs[j]).label +
                             "' are not adjacent");
      }
    }
  }
  if (!common_outside_neighbors(g, vs)) throw NotCliqueTwins("vertices are not twins");

  std::vector<LaurentPoly> alphas;
  std::vector<LaurentPoly> shifted;
  std::size_t unmarked = 0;
  for (VertexId v : vs) {
    const VertexRecord& r = g.vertex(v);
    alphas.push_back(r.alpha);
    shifted.push_back(r.alpha + d() * r.beta);
    if (!r.marked) ++unmarked;
  }
  LaurentPoly alpha = product_of(alphas);
  LaurentPoly beta = exact_div(product_of(shifted) - alpha, d());
  return collapse_onto_first(g, vs, unmarked % 2 == 0, std::move(alpha), std::move(beta));
}

MarkedGraph twin_pair_reduce(const MarkedGraph& g, VertexId v, VertexId w) {
  require_unlooped_twins(g, v, w);
  const VertexRecord& rv = g.vertex(v);
  const VertexRecord& rw = g.vertex(w);
  const std::vector<VertexId> pair{v, w};
  const bool adjacent = g.adjacent(v, w);

  if (!adjacent) {
    if (rv.marked && rw.marked) {
      return collapse_onto_first(g, pair, true, rv.alpha * rw.alpha + rv.beta * rw.beta,
                                 rv.alpha * rw.beta + rv.beta * rw.alpha);
    }
    throw UncoveredTwinCase("nonadjacent twins '" + rv.label + "', '" + rw.label +
                            "' with an unmarked vertex need twin_pair_split");
  }
  LaurentPoly alpha = rv.alpha * rw.alpha;
  LaurentPoly beta = rv.alpha * rw.beta + rv.beta * rw.alpha + rv.beta * rw.beta * d();
  // Both marked: stays marked. Both unmarked: becomes marked. Mixed: unmarked.
  const bool marked = rv.marked == rw.marked;
  return collapse_onto_first(g, pair, marked, std::move(alpha), std::move(beta));
}

TwinSplit twin_pair_split(const MarkedGraph& g, VertexId v, VertexId w) {
  require_unlooped_twins(g, v, w);
  const VertexRecord& rv = g.vertex(v);
  const VertexRecord& rw = g.vertex(w);
  if (g.adjacent(v, w)) {
    throw UncoveredTwinCase("adjacent twins '" + rv.label + "', '" + rw.label +
                            "' are consolidated by twin_pair_reduce");
  }
  if (rv.marked && rw.marked) {
    throw UncoveredTwinCase("marked nonadjacent twins '" + rv.label + "', '" + rw.label +
                            "' are consolidated by twin_pair_reduce");
  }
  TwinRecord tv{rv.marked, rv.alpha, rv.beta};
  TwinRecord tw{rw.marked, rw.alpha, rw.beta};
  // Nonadjacent twins are interchangeable; keep the unmarked one's role first.
  if (tv.marked) std::swap(tv, tw);
  TwinRecord merged = split_pair(tv, tw);
  const std::vector<VertexId> pair{v, w};
  return {collapse_onto_first(g, pair, false, std::move(merged.alpha), std::move(merged.beta)),
          tv.beta * tw.beta, delete_vertices(g, {v, w})};
}

TwinSplit nonadjacent_twin_chain(const MarkedGraph& g, std::span<const VertexId> vs) {
  if (vs.empty()) throw NotTwins("empty twin list");
  require_distinct(g, vs);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (g.vertex(vs[i]).looped) throw NotTwins("'" + g.vertex(vs[i]).label + "' is looped");
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) {
        throw NotTwins("'" + g.vertex(vs[i]).label + "' and '" + g.vertex(vs[j]).label +
                       "' are adjacent");
      }
    }
  }
  if (!common_outside_neighbors(g, vs)) throw NotTwins("vertices are not twins");

  std::vector<TwinRecord> records;
  std::vector<TwinRecord> marked;
  for (VertexId v : vs) {
    const VertexRecord& r = g.vertex(v);
    (r.marked ? marked : records).push_back({r.marked, r.alpha, r.beta});
  }
  while (marked.size() > 1) {
    TwinRecord last = marked.back();
    marked.pop_back();
    marked.back() = merge_marked_pair(marked.back(), last);
  }
  records.insert(records.end(), marked.begin(), marked.end());

  auto [x, gamma] = reduce_class(std::move(records));
  std::vector<VertexId> all(vs.begin(), vs.end());
  return {collapse_onto_first(g, vs, x.marked, std::move(x.alpha), std::move(x.beta)),
          std::move(gamma), delete_vertices(g, all)};
}

MarkedGraph dual_parallel_reduce(const MarkedGraph& g, std::span<const VertexId> vs) {
  if (vs.size() < 3 || vs.size() % 2 == 0) {
    throw EvenK("dual parallel reduction needs an odd count >= 3, got " +
                           std::to_string(vs.size()));
  }
  require_distinct(g, vs);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const VertexRecord& r = g.vertex(vs[i]);
    if (r.looped || r.marked) throw NotTwins("'" + r.label + "' must be unlooped and unmarked");
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) throw NotTwins("twins must be pairwise nonadjacent");
    }
  }
  if (!common_outside_neighbors(g, vs)) throw NotTwins("vertices are not twins");

  std::vector<LaurentPoly> betas;
  std::vector<LaurentPoly> shifted;
  for (VertexId v : vs) {
    const VertexRecord& r = g.vertex(v);
    betas.push_back(r.beta);
    shifted.push_back(r.alpha * d() + r.beta);
  }
  LaurentPoly beta = product_of(betas);
  LaurentPoly alpha = exact_div(product_of(shifted) - beta, d());
  return collapse_onto_first(g, vs, false, std::move(alpha), std::move(beta));
}

MarkedGraph consolidate_twins(const MarkedGraph& g, std::size_t* applied) {
  MarkedGraph h = g;
  std::size_t count = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < h.size() && !changed; ++v) {
      if (h.vertex(v).looped) continue;
      for (VertexId w = v + 1; w < h.size(); ++w) {
        if (h.vertex(w).looped || !are_twins(h, v, w)) continue;
        const bool mv = h.vertex(v).marked;
        const bool mw = h.vertex(w).marked;
        if (!h.adjacent(v, w) && !(mv && mw)) continue;
        // Keep the unmarked vertex of a mixed pair.
        h = (mv && !mw) ? twin_pair_reduce(h, w, v) : twin_pair_reduce(h, v, w);
        ++count;
        changed = true;
        break;
      }
    }
  }
  if (applied) *applied = count;
  return h;
}

// ------------------------------------------------------------ composition

std::pair<MarkedGraph, MarkedGraph> build_F10_F01(const MarkedGraph& f, VertexId a) {
  require_cut_vertex(f, a);
  MarkedGraph f10 = f;
  MarkedGraph f01 = f;
  f10.vertex(a).alpha = 1;
  f10.vertex(a).beta = 0;
  f01.vertex(a).alpha = 0;
  f01.vertex(a).beta = 1;
  return {std::move(f10), std::move(f01)};
}

std::pair<MarkedGraph, MarkedGraph> build_Fpm(const MarkedGraph& f, VertexId a) {
  require_cut_vertex(f, a);
  MarkedGraph f_minus = f;
  f_minus.vertex(a).looped = true;
  return {f, std::move(f_minus)};
}

WeightTriple pjoin_weights_cor1(const LaurentPoly& f_minus_a, const LaurentPoly& f10,
                                const LaurentPoly& f01) {
  const LaurentPoly den = 2 - d() - d() * d();
  const LaurentPoly d1 = d() + 1;
  return {exact_div(-(d1 * f_minus_a) + f10 + f01, den),
          exact_div(f_minus_a + f10 - d1 * f01, den),
          exact_div(f_minus_a - d1 * f10 + f01, den)};
}

WeightTriple pjoin_weights_cor3(const LaurentPoly& f_minus_a, const LaurentPoly& f_plus,
                                const LaurentPoly& f_minus) {
  const LaurentPoly den = 2 - d() - d() * d();
  const LaurentPoly a_plus_b = A() + B();
  const LaurentPoly a2_minus_b2 = A() * A() - B() * B();
  const LaurentPoly p = A() + B() + B() * d();
  const LaurentPoly m = A() + A() * d() + B();
  return {exact_div(-((d() + 1) * f_minus_a) + exact_div(f_plus + f_minus, a_plus_b), den),
          exact_div(f_minus_a + exact_div(p * f_plus - m * f_minus, a2_minus_b2), den),
          exact_div(f_minus_a + exact_div(p * f_minus - m * f_plus, a2_minus_b2), den)};
}

namespace {

SubsetType classify(std::size_t with_corner0, std::size_t with_corner1, std::size_t unbordered) {
  const std::size_t hi = std::max({with_corner0, with_corner1, unbordered});
  const int at_hi = (with_corner0 == hi) + (with_corner1 == hi) + (unbordered == hi);
  const int below = (with_corner0 + 1 == hi) + (with_corner1 + 1 == hi) + (unbordered + 1 == hi);
  if (at_hi != 1 || below != 2) {
    throw ClassificationViolation("nullities (" + std::to_string(with_corner0) + ", " +
                                  std::to_string(with_corner1) + ", " +
                                  std::to_string(unbordered) + ") are not of the form v+1, v, v");
  }
  if (with_corner0 == hi) return SubsetType::type1;
  if (with_corner1 == hi) return SubsetType::type2;
  return SubsetType::type3;
}

}  // namespace

SubsetType subset_type(const MarkedGraph& f, VertexId a, const std::vector<bool>& subset) {
  require_cut_vertex(f, a);
  if (subset.size() != f.size()) throw std::invalid_argument("subset size mismatch");
  if (subset[a]) throw std::invalid_argument("subset must not contain the cut vertex");
  std::vector<bool> with_a = subset;
  with_a[a] = true;
  std::vector<bool> without_a;
  for (VertexId v = 0; v < f.size(); ++v) {
    if (v != a) without_a.push_back(subset[v]);
  }
  return classify(gf2::nullity(gf2::restricted_matrix(f, subset)),
                  gf2::nullity(gf2::restricted_matrix(f, with_a)),
                  gf2::nullity(gf2::restricted_matrix(delete_vertices(f, {a}), without_a)));
}

Contributions subset_contributions(const MarkedGraph& f, VertexId a) {
  require_cut_vertex(f, a);
  const MarkedGraph rest = delete_vertices(f, {a});
  const std::size_t m = rest.size();
  if (m + 1 > gf2::kWordBits) {
    throw std::invalid_argument("subset contributions support at most 63 vertices besides the cut");
  }
  std::vector<gf2::Word> adjacency(m);
  gf2::Word looped = 0;
  gf2::Word marked = 0;
  gf2::Word border = 0;
  std::vector<LaurentPoly> alpha;
  std::vector<LaurentPoly> beta;
  for (VertexId v = 0; v < m; ++v) {
    adjacency[v] = m == 0 ? 0 : rest.adjacency().row(v)[0];
    if (rest.vertex(v).looped) looped |= gf2::Word{1} << v;
    if (rest.vertex(v).marked) marked |= gf2::Word{1} << v;
    if (f.adjacent(a, v < a ? v : v + 1)) border |= gf2::Word{1} << v;
    alpha.push_back(rest.vertex(v).alpha);
    beta.push_back(rest.vertex(v).beta);
  }
  const gf2::Word all = (gf2::Word{1} << m) - 1;
  const gf2::Word border_bit = gf2::Word{1} << m;

  detail::SubsetSum sum(alpha, beta);
  std::vector<gf2::Word> rows(m + 1);
  sum.run([&](std::uint64_t subset) -> std::optional<detail::SubsetTerm> {
    const gf2::Word diagonal = looped ^ subset;
    const gf2::Word keep = ~(marked & ~diagonal) & all;
    for (std::size_t i = 0; i < m; ++i) {
      rows[i] = adjacency[i] | (diagonal & (gf2::Word{1} << i));
    }
    const std::size_t unbordered = gf2::masked_nullity(std::span(rows.data(), m), keep);
    for (std::size_t i = 0; i < m; ++i) {
      if ((border >> i) & 1U) rows[i] |= border_bit;
    }
    rows[m] = border;
    const std::size_t corner0 = gf2::masked_nullity(rows, keep | border_bit);
    rows[m] = border | border_bit;
    const std::size_t corner1 = gf2::masked_nullity(rows, keep | border_bit);
    const SubsetType type = classify(corner0, corner1, unbordered);
    int exponent = static_cast<int>(unbordered);
    // Type 3 has unbordered nullity >= 1, so the division by d is exact.
    if (type == SubsetType::type3) --exponent;
    return detail::SubsetTerm{static_cast<std::size_t>(type), exponent};
  });

  const LaurentPoly loops = LaurentPoly::var("d", static_cast<int>(f.free_loops()));
  Contributions out;
  out.type1 = sum.total(1) * loops;
  out.type2 = sum.total(2) * loops;
  out.type3 = sum.total(3) * loops * d();
  out.subsets = sum.visited();
  return out;
}

WeightTriple pjoin_weights_cor4(const MarkedGraph& f, VertexId a, BracketStats* stats) {
  const Contributions c = subset_contributions(f, a);
  if (stats) stats->subsets += c.subsets;
  return {exact_div(c.type3, d()), c.type2, c.type1};
}

PjoinGraphs pjoin_graphs(const MarkedGraph& h, std::string_view cut, const WeightTriple& w,
                         const LaurentPoly& beta_am) {
  const VertexId a = h.index_of(cut);
  require_cut_vertex(h, a);
  PjoinGraphs out{h, h};
  out.h_prime.vertex(a).alpha = w.alpha_a;
  out.h_prime.vertex(a).beta = w.beta_a;
  VertexRecord& m = out.h_marked.vertex(a);
  m.marked = true;
  m.alpha = w.alpha_am;
  m.beta = beta_am;
  return out;
}

namespace {

void require_unmarked_neighbors(const MarkedGraph& g, VertexId a, const char* which) {
  for (VertexId v : g.neighbors(a)) {
    if (g.vertex(v).marked) {
      throw MarkedNeighborInH(std::string("the cut vertex has a marked neighbor '") +
                              g.vertex(v).label + "' in the " + which +
                              " graph; swap the two graphs");
    }
  }
}

void check_composable(const MarkedGraph& f, const MarkedGraph& h, std::string_view cut) {
  // compose() performs every structural precondition check.
  (void)compose(f, h, cut);
}

}  // namespace

CompositionBracket composition_bracket(const MarkedGraph& f, const MarkedGraph& h,
                                       std::string_view cut, Engine engine,
                                       std::size_t oracle_limit) {
  check_composable(f, h, cut);
  require_unmarked_neighbors(h, h.index_of(cut), "second");
  CompositionBracket out;
  out.weights = pjoin_weights_cor4(f, f.index_of(cut), &out.weight_stats);
  const PjoinGraphs graphs = pjoin_graphs(h, cut, out.weights);
  out.h_prime = bracket(graphs.h_prime, engine, &out.h_stats, oracle_limit);
  out.h_marked = bracket(graphs.h_marked, engine, &out.h_stats, oracle_limit);
  out.total = out.h_prime + out.h_marked;
  return out;
}

BracketValue bracket_via_composition(const MarkedGraph& f, const MarkedGraph& h,
                                     std::string_view cut, Engine engine) {
  return composition_bracket(f, h, cut, engine).total;
}

BracketValue double_composition(const WeightTriple& f_side, const WeightTriple& h_side) {
  const LaurentPoly& af = f_side.alpha_a;
  const LaurentPoly& bf = f_side.beta_a;
  const LaurentPoly& mf = f_side.alpha_am;
  const LaurentPoly& ah = h_side.alpha_a;
  const LaurentPoly& bh = h_side.beta_a;
  const LaurentPoly& mh = h_side.alpha_am;
  return af * (ah + bh) + bf * (ah + bh * d()) + (af * d() + bf) * mh + mf * (ah * d() + bh) +
         mf * mh;
}

BracketValue bracket_double_composition(const MarkedGraph& f, const MarkedGraph& h,
                                        std::string_view cut) {
  check_composable(f, h, cut);
  const VertexId af = f.index_of(cut);
  const VertexId ah = h.index_of(cut);
  for (const auto& [g, a] : {std::pair{&f, af}, std::pair{&h, ah}}) {
    for (VertexId v : g->neighbors(a)) {
      if (g->vertex(v).marked) {
        throw MarkedNeighbor("the cut vertex has a marked neighbor '" + g->vertex(v).label + "'");
      }
    }
  }
  return double_composition(pjoin_weights_cor4(f, af), pjoin_weights_cor4(h, ah));
}

}  // namespace mgb
