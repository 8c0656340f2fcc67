#include "generators.hpp"

#include <algorithm>

namespace mgb::gen {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  return span == 0 ? rng() : lo + rng() % span;
}

bool one_in_pow2(Rng& rng, unsigned k) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return (rng() & mask) == 0;
}

MarkedGraph random_graph(Rng& rng, std::size_t n, const GraphOptions& opts) {
  MarkedGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    VertexRecord r;
    r.label = opts.prefix + std::to_string(i);
    r.looped = opts.loops && one_in_pow2(rng, 2);
    r.marked = opts.marks && one_in_pow2(rng, 2);
    if (opts.symbolic) {
      r.alpha = LaurentPoly::var("x_" + r.label);
      r.beta = LaurentPoly::var("y_" + r.label);
    }
    g.add_vertex(std::move(r));
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = v + 1; w < n; ++w) {
      if (one_in_pow2(rng, 1)) g.set_edge(v, w);
    }
  }
  return g;
}

LaurentPoly random_poly(Rng& rng, const std::vector<std::string>& vars, std::size_t terms) {
  LaurentPoly p;
  const std::size_t count = uniform(rng, 1, terms);
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m;
    for (const auto& v : vars) {
      const int e = static_cast<int>(uniform(rng, 0, 4)) - 2;
      if (e != 0) m = m * Monomial::var(v, e);
    }
    const long c = static_cast<long>(uniform(rng, 0, 6)) - 3;
    p.add_term(Integer(c), m);
  }
  return p;
}

std::vector<VertexId> plant_twins(Rng& rng, MarkedGraph& g, const std::vector<bool>& marked,
                                  bool clique, bool symbolic) {
  std::vector<VertexId> hosts;
  for (VertexId u = 0; u < g.size(); ++u) {
    if (one_in_pow2(rng, 1)) hosts.push_back(u);
  }
  std::vector<VertexId> twins;
  const std::size_t base = g.size();
  for (std::size_t i = 0; i < marked.size(); ++i) {
    VertexRecord r;
    r.label = "t" + std::to_string(base + i);
    r.marked = marked[i];
    if (symbolic) {
      r.alpha = LaurentPoly::var("x_" + r.label);
      r.beta = LaurentPoly::var("y_" + r.label);
    }
    const VertexId v = g.add_vertex(std::move(r));
    for (VertexId u : hosts) g.set_edge(v, u);
    if (clique) {
      for (VertexId w : twins) g.set_edge(v, w);
    }
    twins.push_back(v);
  }
  return twins;
}

VertexId add_cut_vertex(Rng& rng, MarkedGraph& g, const std::string& label) {
  const std::size_t n = g.size();
  const VertexId a = g.add_vertex(label);
  if (n == 0) return a;
  bool any = false;
  for (VertexId u = 0; u < n; ++u) {
    if (one_in_pow2(rng, 1)) {
      g.set_edge(a, u);
      any = true;
    }
  }
  if (!any) g.set_edge(a, uniform(rng, 0, n - 1));
  return a;
}

EulerCode random_euler_code(Rng& rng, std::size_t crossings) {
  EulerCode code;
  const std::size_t circuits = uniform(rng, 1, 3);
  std::vector<std::vector<std::string>> words(circuits);
  for (std::size_t i = 0; i < crossings; ++i) {
    const std::string label = "c" + std::to_string(i);
    auto& word = words[uniform(rng, 0, circuits - 1)];
    for (int k = 0; k < 2; ++k) {
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, word.size())), label);
    }
    code.signs[label] = one_in_pow2(rng, 1) ? Sign::negative : Sign::positive;
    if (one_in_pow2(rng, 2)) code.marks.insert(label);
  }
  for (auto& word : words) {
    if (!word.empty()) code.circuits.push_back(std::move(word));
  }
  code.free_loops = uniform(rng, 0, 2);
  return code;
}

}  // namespace mgb::gen
