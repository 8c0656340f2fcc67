#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "mgb/graph.hpp"
#include "support.hpp"

using namespace mgb;
using mgb::test::G;
using mgb::test::P;

namespace {

VertexId id(const MarkedGraph& g, std::string_view label) { return g.index_of(label); }

bool edge(const MarkedGraph& g, std::string_view a, std::string_view b) {
  return g.adjacent(id(g, a), id(g, b));
}

}  // namespace

TEST_CASE("local complement") {
  CHECK_THROWS_AS(G("edge a b"), GraphParseError);

  const MarkedGraph single = G("vertex v\nvertex x");
  CHECK(local_complement(single, 0) == single);

  const MarkedGraph path = G("vertex x\nvertex v\nvertex y\nedge x v\nedge v y");
  const MarkedGraph p = local_complement(path, id(path, "v"));
  CHECK(edge(p, "x", "y"));
  CHECK(p.vertex(id(p, "x")).looped);
  CHECK(p.vertex(id(p, "y")).looped);
  CHECK_FALSE(p.vertex(id(p, "v")).looped);

  const MarkedGraph tri = G("vertex x\nvertex v\nvertex y\nedge x v\nedge v y\nedge x y");
  const MarkedGraph t = local_complement(tri, id(tri, "v"));
  CHECK_FALSE(edge(t, "x", "y"));
  CHECK(t.vertex(id(t, "x")).looped);
  CHECK(t.vertex(id(t, "y")).looped);
}

TEST_CASE("local complement is an involution") {
  gen::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const MarkedGraph g = gen::random_graph(rng, 1 + rng() % 8);
    const VertexId v = rng() % g.size();
    CHECK(local_complement(local_complement(g, v), v) == g);
  }
}

TEST_CASE("pivot") {
  const MarkedGraph k2 = G("vertex v\nvertex w\nedge v w");
  CHECK(pivot(k2, 0, 1) == k2);

  const MarkedGraph path = G("vertex a\nvertex v\nvertex w\nvertex b\nedge a v\nedge v w\nedge w b");
  const MarkedGraph p = pivot(path, id(path, "v"), id(path, "w"));
  CHECK(edge(p, "a", "b"));
  CHECK(p.edge_count() == path.edge_count() + 1);

  const MarkedGraph c4 = G("vertex v\nvertex a\nvertex w\nvertex b\nedge v a\nedge a w\nedge w b\nedge b v");
  CHECK(pivot(c4, id(c4, "v"), id(c4, "w")) == c4);
}

TEST_CASE("marked pivot") {
  const MarkedGraph k2 = G("vertex v\nvertex w\nedge v w");
  const MarkedGraph m = marked_pivot(k2, 0, 1);
  CHECK(m.adjacent(0, 1));
  CHECK(m.vertex(0).marked);
  CHECK(m.vertex(1).marked);

  const MarkedGraph path = G("vertex a\nvertex v\nvertex w\nedge a v\nedge v w");
  const MarkedGraph p = marked_pivot(path, id(path, "v"), id(path, "w"));
  CHECK(edge(p, "a", "w"));
  CHECK_FALSE(edge(p, "a", "v"));
  CHECK(edge(p, "v", "w"));
  CHECK(p.vertex(id(p, "v")).marked);
  CHECK(p.vertex(id(p, "w")).marked);
  CHECK_FALSE(p.vertex(id(p, "a")).marked);

  CHECK_THROWS_AS(marked_pivot(G("vertex v\nvertex w"), 0, 1), NotAdjacent);

  gen::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    MarkedGraph g = gen::random_graph(rng, 2 + rng() % 6, {.symbolic = true});
    g.set_edge(0, 1);
    CHECK(marked_pivot(marked_pivot(g, 0, 1), 0, 1) == g);
  }
}

TEST_CASE("delete vertices") {
  MarkedGraph k3 = G("vertex x\nvertex y\nvertex z\nedge x y\nedge y z\nedge x z\nfreeloops 2");
  const MarkedGraph none = delete_vertices(k3, {0, 1, 2});
  CHECK(none.empty());
  CHECK(none.free_loops() == 2);
  CHECK(delete_vertices(k3, std::span<const VertexId>()) == k3);
  const MarkedGraph k2 = delete_vertices(k3, {1});
  CHECK(k2.size() == 2);
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.vertex(1).label == "z");
  CHECK_THROWS_AS(delete_vertices(k3, {5}), UnknownVertex);
}

TEST_CASE("unloop swap") {
  const MarkedGraph plain = G("vertex v\nvertex w\nedge v w");
  CHECK(unloop_swap(plain) == plain);
  const MarkedGraph one = unloop_swap(G("vertex v loop alpha=x beta=y"));
  CHECK_FALSE(one.vertex(0).looped);
  CHECK(one.vertex(0).alpha == P("y"));
  CHECK(one.vertex(0).beta == P("x"));
  const MarkedGraph two = unloop_swap(G("vertex v loop\nvertex w loop alpha=2*A\nedge v w"));
  CHECK(two.adjacent(0, 1));
  CHECK(two.vertex(0).alpha == P("B"));
  CHECK(two.vertex(1).beta == P("2*A"));
}

TEST_CASE("twins") {
  CHECK(are_twins(G("vertex v\nvertex w"), 0, 1));
  CHECK(are_twins(G("vertex v\nvertex w\nedge v w"), 0, 1));
  const MarkedGraph path = G("vertex a\nvertex v\nvertex w\nedge a v\nedge v w");
  CHECK_FALSE(are_twins(path, 1, 2));
  CHECK_THROWS_AS(are_twins(path, 1, 1), std::invalid_argument);
}

TEST_CASE("compose") {
  const MarkedGraph h = G("vertex a\nvertex x\nvertex y mark\nedge a x\nedge a y\nfreeloops 2");
  const MarkedGraph f_edge = G("vertex a\nvertex v loop alpha=q\nedge a v\nfreeloops 1");
  const MarkedGraph g = compose(f_edge, h, "a");
  CHECK(g.size() == 3);
  CHECK(edge(g, "v", "x"));
  CHECK(edge(g, "v", "y"));
  CHECK(g.vertex(id(g, "v")).looped);
  CHECK(g.vertex(id(g, "v")).alpha == P("q"));
  CHECK(g.free_loops() == 3);

  const MarkedGraph k3 = G("vertex a\nvertex s\nvertex u\nedge a s\nedge a u\nedge s u");
  const MarkedGraph g3 = compose(k3, h, "a");
  CHECK(edge(g3, "s", "u"));
  for (auto p : {"s", "u"}) {
    for (auto q : {"x", "y"}) CHECK(edge(g3, p, q));
  }
  CHECK(equal_up_to_vertex_order(compose(k3, h, "a"), compose(h, k3, "a")));
}

TEST_CASE("compose rejects bad cut vertices individually") {
  const MarkedGraph h = G("vertex a\nvertex x\nedge a x");
  auto reason = [&](std::string_view f_text) {
    try {
      (void)compose(G(f_text), h, "a");
    } catch (const CompositionError& e) {
      return e.reason();
    }
    FAIL("expected a CompositionError");
    return CompositionError::Reason::missing_cut_vertex;
  };
  using R = CompositionError::Reason;
  CHECK(reason("vertex b") == R::missing_cut_vertex);
  CHECK(reason("vertex a loop") == R::looped_cut_vertex);
  CHECK(reason("vertex a mark") == R::marked_cut_vertex);
  CHECK(reason("vertex a alpha=B") == R::nonstandard_weights);
  CHECK(reason("vertex a\nvertex x") == R::label_collision);
}

TEST_CASE("graph text format") {
  const MarkedGraph g = G(
      "# a comment\n"
      "vertex v loop mark alpha=\"A + B\" beta=-d^-1\n"
      "vertex w   # trailing comment\n"
      "edge v w\n"
      "freeloops 3\n");
  CHECK(g.size() == 2);
  CHECK(g.vertex(0).looped);
  CHECK(g.vertex(0).marked);
  CHECK(g.vertex(0).alpha == P("A + B"));
  CHECK(g.vertex(0).beta == P("-d^-1"));
  CHECK(g.free_loops() == 3);
  CHECK(parse_graph(write_graph(g)) == g);
  CHECK(parse_graph("").empty());

  CHECK_THROWS_AS(G("vertex v\nvertex v"), GraphParseError);
  CHECK_THROWS_AS(G("vertex v\nedge v v"), GraphParseError);
  CHECK_THROWS_AS(G("vertex v bogus"), GraphParseError);
  CHECK_THROWS_AS(G("vertex v alpha=A+"), GraphParseError);
  CHECK_THROWS_AS(G("freeloops -1"), GraphParseError);
  try {
    G("vertex v\n\nnode w");
    FAIL("expected a parse error");
  } catch (const GraphParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("graph format round trip on seeded graphs") {
  gen::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    MarkedGraph g = gen::random_graph(rng, rng() % 9, {.symbolic = (i % 2 == 1)});
    g.set_free_loops(rng() % 3);
    if (!g.empty() && i % 3 == 0) {
      g.vertex(0).alpha = gen::random_poly(rng, {"A", "B", "d"}, 4);
      g.vertex(0).beta = gen::random_poly(rng, {"A", "d"}, 3);
    }
    CHECK(parse_graph(write_graph(g)) == g);
  }
}

TEST_CASE("connected components and disjoint union") {
  const MarkedGraph g = G("vertex a\nvertex b\nvertex c\nvertex d\nedge a c");
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<VertexId>{0, 2});
  const MarkedGraph u = disjoint_union(G("vertex p\nfreeloops 1"), G("vertex q\nfreeloops 2"));
  CHECK(u.size() == 2);
  CHECK(u.free_loops() == 3);
  CHECK_THROWS(disjoint_union(G("vertex p"), G("vertex p")));
}
