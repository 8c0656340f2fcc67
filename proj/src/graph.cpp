#include "mgb/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace mgb {

bool VertexRecord::has_standard_weights() const {
  return alpha == vars::A() && beta == vars::B();
}

bool is_valid_label(std::string_view label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ------------------------------------------------------------- MarkedGraph

VertexId MarkedGraph::add_vertex(VertexRecord record) {
  if (!is_valid_label(record.label)) {
    throw GraphError("invalid vertex label '" + record.label + "'");
  }
  if (find(record.label)) throw GraphError("duplicate vertex label '" + record.label + "'");
  const std::size_t n = vertices_.size();
  gf2::BitMatrix grown(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adjacency_.get(i, j)) grown.set(i, j, true);
    }
  }
  adjacency_ = std::move(grown);
  vertices_.push_back(std::move(record));
  return n;
}

VertexId MarkedGraph::add_vertex(std::string label) {
  VertexRecord r;
  r.label = std::move(label);
  return add_vertex(std::move(r));
}

void MarkedGraph::check_vertex(VertexId v) const {
  if (v >= vertices_.size()) throw UnknownVertex("no vertex with index " + std::to_string(v));
}

void MarkedGraph::set_edge(VertexId a, VertexId b, bool present) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError("self-adjacency is represented by the loop flag");
  adjacency_.set(a, b, present);
  adjacency_.set(b, a, present);
}

void MarkedGraph::toggle_edge(VertexId a, VertexId b) { set_edge(a, b, !adjacent(a, b)); }

std::vector<VertexId> MarkedGraph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (VertexId u = 0; u < size(); ++u) {
    if (adjacency_.get(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t MarkedGraph::degree(VertexId v) const { return neighbors(v).size(); }

std::size_t MarkedGraph::edge_count() const {
  std::size_t count = 0;
  for (VertexId a = 0; a < size(); ++a) {
    for (VertexId b = a + 1; b < size(); ++b) count += adjacent(a, b) ? 1 : 0;
  }
  return count;
}

std::optional<VertexId> MarkedGraph::find(std::string_view label) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].label == label) return v;
  }
  return std::nullopt;
}

VertexId MarkedGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UnknownVertex("unknown vertex '" + std::string(label) + "'");
}

// -------------------------------------------------------------- transforms

MarkedGraph local_complement(const MarkedGraph& g, VertexId v) {
  const auto nb = g.neighbors(v);
  MarkedGraph h = g;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    h.vertex(nb[i]).looped = !h.vertex(nb[i]).looped;
    for (std::size_t j = i + 1; j < nb.size(); ++j) h.toggle_edge(nb[i], nb[j]);
  }
  return h;
}

MarkedGraph pivot(const MarkedGraph& g, VertexId v, VertexId w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw std::invalid_argument("pivot needs two distinct vertices");
  MarkedGraph h = g;
  auto qualifies = [&](VertexId a, VertexId b) {
    return g.adjacent(v, a) && g.adjacent(w, b) && (!g.adjacent(w, a) || !g.adjacent(v, b));
  };
  for (VertexId a = 0; a < g.size(); ++a) {
    if (a == v || a == w) continue;
    for (VertexId b = a + 1; b < g.size(); ++b) {
      if (b == v || b == w) continue;
      if (qualifies(a, b) || qualifies(b, a)) h.toggle_edge(a, b);
    }
  }
  return h;
}

MarkedGraph marked_pivot(const MarkedGraph& g, VertexId v, VertexId w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w || !g.adjacent(v, w)) {
    throw NotAdjacent("marked pivot needs adjacent vertices '" + g.vertex(v).label + "' and '" +
                      g.vertex(w).label + "'");
  }
  const MarkedGraph p = pivot(g, v, w);
  auto swap_vw = [&](VertexId x) { return x == v ? w : (x == w ? v : x); };
  MarkedGraph h = p;
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId b = a + 1; b < g.size(); ++b) {
      h.set_edge(a, b, p.adjacent(swap_vw(a), swap_vw(b)));
    }
  }
  h.vertex(v).marked = !h.vertex(v).marked;
  h.vertex(w).marked = !h.vertex(w).marked;
  return h;
}

MarkedGraph induced_subgraph(const MarkedGraph& g, std::span<const VertexId> keep) {
  MarkedGraph h;
  for (VertexId v : keep) h.add_vertex(g.vertex(v));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) h.set_edge(i, j);
    }
  }
  h.set_free_loops(g.free_loops());
  return h;
}

MarkedGraph delete_vertices(const MarkedGraph& g, std::span<const VertexId> s) {
  std::vector<bool> drop(g.size(), false);
  for (VertexId v : s) {
    g.check_vertex(v);
    drop[v] = true;
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

MarkedGraph delete_vertices(const MarkedGraph& g, std::initializer_list<VertexId> s) {
  return delete_vertices(g, std::span<const VertexId>(s.begin(), s.size()));
}

MarkedGraph unloop_swap(const MarkedGraph& g) {
  MarkedGraph h = g;
  for (VertexId v = 0; v < h.size(); ++v) {
    VertexRecord& r = h.vertex(v);
    if (r.looped) {
      r.looped = false;
      std::swap(r.alpha, r.beta);
    }
  }
  return h;
}

bool are_twins(const MarkedGraph& g, VertexId v, VertexId w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw std::invalid_argument("twin test needs two distinct vertices");
  for (VertexId u = 0; u < g.size(); ++u) {
    if (u == v || u == w) continue;
    if (g.adjacent(v, u) != g.adjacent(w, u)) return false;
  }
  return true;
}

namespace {

void check_cut_vertex(const MarkedGraph& g, std::string_view cut, const char* which) {
  const auto a = g.find(cut);
  const std::string where = std::string(" in ") + which;
  if (!a) {
    throw CompositionError(CompositionError::Reason::missing_cut_vertex,
                           "cut vertex '" + std::string(cut) + "' missing" + where);
  }
  const VertexRecord& r = g.vertex(*a);
  if (r.looped) {
    throw CompositionError(CompositionError::Reason::looped_cut_vertex,
                           "cut vertex '" + r.label + "' is looped" + where);
  }
  if (r.marked) {
    throw CompositionError(CompositionError::Reason::marked_cut_vertex,
                           "cut vertex '" + r.label + "' is marked" + where);
  }
  if (!r.has_standard_weights()) {
    throw CompositionError(CompositionError::Reason::nonstandard_weights,
                           "cut vertex '" + r.label + "' lacks standard weights" + where);
  }
}

}  // namespace

MarkedGraph compose(const MarkedGraph& f, const MarkedGraph& h, std::string_view cut) {
  check_cut_vertex(f, cut, "the first graph");
  check_cut_vertex(h, cut, "the second graph");
  for (const auto& r : f.vertices()) {
    if (r.label != cut && h.find(r.label)) {
      throw CompositionError(CompositionError::Reason::label_collision,
                             "label '" + r.label + "' occurs in both graphs");
    }
  }
  const VertexId af = f.index_of(cut);
  const VertexId ah = h.index_of(cut);

  MarkedGraph g;
  std::vector<VertexId> from_f(f.size());
  std::vector<VertexId> from_h(h.size());
  for (VertexId v = 0; v < f.size(); ++v) {
    if (v != af) from_f[v] = g.add_vertex(f.vertex(v));
  }
  for (VertexId v = 0; v < h.size(); ++v) {
    if (v != ah) from_h[v] = g.add_vertex(h.vertex(v));
  }
  for (VertexId a = 0; a < f.size(); ++a) {
    for (VertexId b = a + 1; b < f.size(); ++b) {
      if (a != af && b != af && f.adjacent(a, b)) g.set_edge(from_f[a], from_f[b]);
    }
  }
  for (VertexId a = 0; a < h.size(); ++a) {
    for (VertexId b = a + 1; b < h.size(); ++b) {
      if (a != ah && b != ah && h.adjacent(a, b)) g.set_edge(from_h[a], from_h[b]);
    }
  }
  for (VertexId v : f.neighbors(af)) {
    for (VertexId w : h.neighbors(ah)) g.set_edge(from_f[v], from_h[w]);
  }
  g.set_free_loops(f.free_loops() + h.free_loops());
  return g;
}

MarkedGraph disjoint_union(const MarkedGraph& a, const MarkedGraph& b) {
  MarkedGraph g = a;
  const std::size_t offset = a.size();
  for (const auto& r : b.vertices()) g.add_vertex(r);
  for (VertexId x = 0; x < b.size(); ++x) {
    for (VertexId y = x + 1; y < b.size(); ++y) {
      if (b.adjacent(x, y)) g.set_edge(offset + x, offset + y);
    }
  }
  g.set_free_loops(a.free_loops() + b.free_loops());
  return g;
}

std::vector<std::vector<VertexId>> connected_components(const MarkedGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.size(), false);
  for (VertexId start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId u : g.neighbors(comp[i])) {
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool equal_up_to_vertex_order(const MarkedGraph& a, const MarkedGraph& b) {
  if (a.size() != b.size() || a.free_loops() != b.free_loops()) return false;
  std::vector<VertexId> image(a.size());
  for (VertexId v = 0; v < a.size(); ++v) {
    auto w = b.find(a.vertex(v).label);
    if (!w || !(b.vertex(*w) == a.vertex(v))) return false;
    image[v] = *w;
  }
  for (VertexId x = 0; x < a.size(); ++x) {
    for (VertexId y = x + 1; y < a.size(); ++y) {
      if (a.adjacent(x, y) != b.adjacent(image[x], image[y])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- text I/O

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    Token t{{}, i + 1};
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      if (line[i] == '"') {
        std::size_t close = line.find('"', i + 1);
        if (close == std::string_view::npos) throw GraphParseError(line_no, "unterminated quote");
        t.text.append(line.substr(i + 1, close - i - 1));
        i = close + 1;
      } else {
        t.text += line[i++];
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

MarkedGraph parse_graph(std::string_view text) {
  MarkedGraph g;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> edges;
  bool saw_freeloops = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize_line(line, line_no);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0].text;
    if (directive == "vertex") {
      if (tokens.size() < 2) throw GraphParseError(line_no, "vertex needs a label");
      VertexRecord r;
      r.label = tokens[1].text;
      if (!is_valid_label(r.label)) throw GraphParseError(line_no, "invalid label '" + r.label + "'");
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        const std::string& opt = tokens[k].text;
        if (opt == "loop") {
          r.looped = true;
        } else if (opt == "mark") {
          r.marked = true;
        } else if (opt.starts_with("alpha=") || opt.starts_with("beta=")) {
          const bool is_alpha = opt.starts_with("alpha=");
          const std::string value = opt.substr(is_alpha ? 6 : 5);
          try {
            (is_alpha ? r.alpha : r.beta) = parse_poly(value);
          } catch (const PolyParseError& e) {
            throw GraphParseError(line_no, std::string("bad weight: ") + e.what());
          }
        } else {
          throw GraphParseError(line_no, "unknown vertex option '" + opt + "'");
        }
      }
      if (g.find(r.label)) throw GraphParseError(line_no, "duplicate vertex '" + r.label + "'");
      g.add_vertex(std::move(r));
    } else if (directive == "edge") {
      if (tokens.size() != 3) throw GraphParseError(line_no, "edge needs exactly two labels");
      edges.push_back({line_no, {tokens[1].text, tokens[2].text}});
    } else if (directive == "freeloops") {
      if (tokens.size() != 2) throw GraphParseError(line_no, "freeloops needs one count");
      if (saw_freeloops) throw GraphParseError(line_no, "freeloops given twice");
      const std::string& n = tokens[1].text;
      if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw GraphParseError(line_no, "freeloops count must be a natural number");
      }
      g.set_free_loops(std::stoul(n));
      saw_freeloops = true;
    } else {
      throw GraphParseError(line_no, "unknown directive '" + directive + "'");
    }
  }
  for (const auto& [ln, ends] : edges) {
    auto a = g.find(ends.first);
    auto b = g.find(ends.second);
    if (!a) throw GraphParseError(ln, "unknown vertex '" + ends.first + "'");
    if (!b) throw GraphParseError(ln, "unknown vertex '" + ends.second + "'");
    if (*a == *b) throw GraphParseError(ln, "self-edge; use the loop flag");
    g.set_edge(*a, *b);
  }
  return g;
}

std::string write_graph(const MarkedGraph& g) {
  std::string out;
  for (const auto& r : g.vertices()) {
    out += "vertex " + r.label;
    if (r.looped) out += " loop";
    if (r.marked) out += " mark";
    if (!(r.alpha == vars::A())) out += " alpha=" + to_compact_string(r.alpha);
    if (!(r.beta == vars::B())) out += " beta=" + to_compact_string(r.beta);
    out += '\n';
  }
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId b = a + 1; b < g.size(); ++b) {
      if (g.adjacent(a, b)) out += "edge " + g.vertex(a).label + ' ' + g.vertex(b).label + '\n';
    }
  }
  if (g.free_loops() != 0) out += "freeloops " + std::to_string(g.free_loops()) + '\n';
  return out;
}

}  // namespace mgb
