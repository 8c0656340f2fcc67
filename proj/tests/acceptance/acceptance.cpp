// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "generators.hpp"
#include "mgb/bracket.hpp"
#include "mgb/graph.hpp"
#include "mgb/knot.hpp"
#include "mgb/reduce.hpp"
#include "mgb/ring.hpp"
#include "verify.hpp"

namespace {

using namespace mgb;
using Clock = std::chrono::steady_clock;

LaurentPoly P(std::string_view s) { return parse_poly(s); }

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
  void require(const verify::CheckResult& r) {
    std::string what = r.name + " failed";
    if (r.failure) what += ": " + r.failure->detail;
    require(r.passed(), what);
    if (r.passed()) cases += r.cases;
  }
  std::size_t cases = 0;
};

Outcome golden() {
  Outcome o;
  const auto start = Clock::now();
  const LaurentPoly a = vars::A(), b = vars::B(), dd = vars::d();

  o.require(pjoin_weights_cor1(a * dd + b, a + b, a + b * dd) == WeightTriple{a, b, LaurentPoly()},
            "cor1 on K2 unmarked");
  o.require(pjoin_weights_cor1(a + b, a * dd + b, a + b * dd) == WeightTriple{LaurentPoly(), b, a},
            "cor1 on K2 with marked neighbor");

  const WeightTriple ft = pjoin_weights_cor1(
      P("A^4*d^2 + 4*A^3*B*d + 5*A^2*B^2 + A^2*B^2*d^2 + 4*A*B^3*d + B^4*d^2"),
      P("A^4*d + 2*A^3*B + 2*A^3*B*d^2 + 5*A^2*B^2*d + A^2*B^2*d^3 + 4*A*B^3*d^2 + B^4*d^3"),
      P("A^4*d + 2*A^3*B + 2*A^3*B*d + 5*A^2*B^2 + A^2*B^2*d^2 + 4*A*B^3*d + B^4*d^2"));
  const WeightTriple ht = pjoin_weights_cor1(P("A^3*d + 3*A^2*B + 3*A*B^2*d + B^3*d^2"),
                                             P("A^3*d^2 + 3*A^2*B*d + A*B^2*d^2 + 2*A*B^2 + B^3*d"),
                                             P("A^3*d + 3*A^2*B + A*B^2*d + 2*A*B^2 + B^3*d"));
  const WeightTriple ft_want{P("A^4*d + 2*A^3*B"), LaurentPoly(),
                             P("2*A^3*B*d + A^2*B^2*(5 + d^2) + 4*A*B^3*d + B^4*d^2")};
  const WeightTriple ht_want{P("2*A*B^2 + B^3*d"), LaurentPoly(), P("A^3*d + 3*A^2*B + A*B^2*d")};
  o.require(ft == ft_want, "tangle F triple");
  o.require(ht == ht_want, "tangle H triple");
  const LaurentPoly four_line = ft_want.alpha_a * ht_want.alpha_a +
                                (ft_want.alpha_a * dd) * ht_want.alpha_am +
                                ft_want.alpha_am * (ht_want.alpha_a * dd) +
                                ft_want.alpha_am * ht_want.alpha_am;
  const LaurentPoly knot = double_composition(ft, ht);
  o.require(knot == four_line, "double composition of the tangle triples");

  auto jones_text = [](const LaurentPoly& br, int w) {
    return to_string(jones(f_polynomial(br, w)));
  };
  o.require(jones_text(P("A^2*(A^2*d + 2*A*B + B^2*d) + (2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2)"),
                       0) == "-t^{1/2} - t^{-1/2}",
            "unlink Jones");
  o.require(jones_text(P("A^2*(A^2 + 2*A*B*d + B^2) + (2*A*B + B^2*d)*(A^2*d + A*B + A*B*d^2 + B^2*d)"),
                       2) == "-t^{5/2} - t^{1/2}",
            "Hopf Jones");
  o.require(jones_text(P("(2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2) + A^2*(A^2*d + 2*A*B + B^2)"),
                       0) == "1",
            "unknot Jones");
  o.require(jones_text(knot, 3) == "-t^6 + 2*t^5 - 3*t^4 + 4*t^3 - 3*t^2 + 3*t - 2 + t^-1",
            "tangle knot Jones");

  const MarkedGraph clique = parse_graph(
      "vertex h\n"
      "vertex t0 mark alpha=B beta=A\nvertex t1 mark alpha=B beta=A\nvertex t2 alpha=A beta=B\n"
      "edge h t0\nedge h t1\nedge h t2\nedge t0 t1\nedge t0 t2\nedge t1 t2\n");
  const std::vector<VertexId> twins{1, 2, 3};
  const MarkedGraph reduced = clique_twin_reduce(clique, twins);
  const VertexRecord& v = reduced.vertex(reduced.index_of("t0"));
  o.require(reduced.size() == 2, "clique reduction size");
  o.require(v.alpha == P("A*B^2"), "clique alpha");
  o.require(v.beta == exact_div(P("-A*B^2 + (A + B*d)*(B + A*d)^2"), dd), "clique beta");

  const double t = seconds_since(start);
  o.require(t < 1.0, "golden vectors took " + std::to_string(t) + " s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  o.require(verify::oracle_exhaustive(4));
  o.require(verify::oracle_random(1001, 500, 5, 10));
  return o;
}

Outcome reduction_contracts() {
  Outcome o;
  const std::size_t n = 200;
  o.require(verify::loop_swap(2001, n));
  o.require(verify::twin_pair_reduce_contract(2002, 5 * n));
  o.require(verify::twin_pair_split_contract(2003, 3 * n));
  o.require(verify::twin_chain_contract(2004, n));
  o.require(verify::dual_parallel_contract(2005, n));
  o.require(verify::clique_twin_contract(2006, n));
  o.require(verify::marked_pivot_invariance(2007, n));
  o.require(verify::union_multiplicativity(2008, n));
  return o;
}

Outcome composition() {
  Outcome o;
  o.require(verify::composition_identities(3001, 100, 7));
  return o;
}

Outcome subset_types() {
  Outcome o;
  o.require(verify::subset_type_pattern(4001, 100, 8));
  return o;
}

// Side of a composition: the cut vertex `a` plus `m` other vertices.
MarkedGraph composition_side(gen::Rng& rng, std::size_t m, const std::string& prefix, bool marks) {
  gen::GraphOptions opts;
  opts.prefix = prefix;
  opts.marks = marks;
  MarkedGraph g = gen::random_graph(rng, m, opts);
  gen::add_cut_vertex(rng, g, "a");
  return g;
}

Outcome performance() {
  Outcome o;
  const std::size_t m = 12;
  gen::Rng rng(6001);
  const MarkedGraph f = composition_side(rng, m, "f", true);
  const MarkedGraph h = composition_side(rng, m, "h", false);
  const auto dir = std::filesystem::temp_directory_path() / "mgb_acceptance";
  std::filesystem::create_directories(dir);
  const auto f_path = (dir / "f.graph").string();
  const auto h_path = (dir / "h.graph").string();
  std::ofstream(f_path) << write_graph(f);
  std::ofstream(h_path) << write_graph(h);

  cli::CommonOptions opts;
  opts.engine = Engine::statesum;
  opts.format = cli::OutputFormat::json;
  opts.limit = 20;  // the composed graph has 24 vertices; skip the direct sum
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::cmd_compose(f_path, h_path, "a", opts, out, err);
  const double t = seconds_since(start);
  o.require(code == cli::kOk, "cmd_compose exited " + std::to_string(code) + ": " + err.str());
  if (!o.pass) return o;

  const cli::RunReport r = cli::report_from_json(nlohmann::json::parse(out.str()));
  const std::uint64_t composed = r.counters.at("composed_subsets");
  const std::uint64_t direct = r.counters.at("direct_subsets_required");
  const std::uint64_t bound = 10 * (std::uint64_t{1} << m);
  o.require(composed < bound,
            "composed count " + std::to_string(composed) + " >= " + std::to_string(bound));
  o.require(direct >= (std::uint64_t{1} << (2 * m)), "direct count smaller than expected");
  o.require(t < 60.0, "composed path took " + std::to_string(t) + " s");
  o.note = "composed " + std::to_string(composed) + " subsets vs direct " + std::to_string(direct) +
           ", " + std::to_string(t) + " s";
  return o;
}

Outcome parsers() {
  Outcome o;
  gen::Rng rng(7001);
  for (int i = 0; i < 100 && o.pass; ++i) {
    const EulerCode code = gen::random_euler_code(rng, rng() % 10);
    o.require(parse_euler_code(write_euler_code(code)) == code, "Euler code round trip");
    const MarkedGraph g = gen::random_graph(rng, rng() % 9, {.symbolic = (i % 2 == 1)});
    o.require(parse_graph(write_graph(g)) == g, "graph round trip");
  }

  const MarkedGraph k2 = interlacement_graph(parse_euler_code("circuit a b a b"));
  o.require(k2.size() == 2 && k2.adjacent(0, 1) && !k2.vertex(0).looped && !k2.vertex(1).looped &&
                !k2.vertex(0).marked && !k2.vertex(1).marked,
            "a b a b interlacement");
  const MarkedGraph two = interlacement_graph(parse_euler_code("circuit a a b b"));
  o.require(two.size() == 2 && two.edge_count() == 0, "a a b b interlacement");
  const MarkedGraph k3 = interlacement_graph(
      parse_euler_code("circuit a b c a b c\nsign a -\nsign b -\nsign c -"));
  bool looped = k3.size() == 3 && k3.edge_count() == 3;
  for (VertexId v = 0; looped && v < 3; ++v) looped = k3.vertex(v).looped && !k3.vertex(v).marked;
  o.require(looped, "a b c a b c interlacement");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden vectors", golden},
      {"oracle equivalence", oracle_equivalence},
      {"reduction contracts", reduction_contracts},
      {"composition identities", composition},
      {"subset type pattern", subset_types},
      {"composition performance", performance},
      {"parser round trips", parsers},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): "
              << (o.pass ? "PASS" : "FAIL");
    if (o.cases) std::cout << ", " << o.cases << " cases";
    if (!o.note.empty()) std::cout << ", " << o.note;
    std::cout << " [" << seconds_since(start) << " s]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
