#include "verify.hpp"

#include <exception>
#include <functional>

#include "generators.hpp"
#include "mgb/bracket.hpp"
#include "mgb/reduce.hpp"

namespace mgb::verify {

namespace {

using gen::Rng;

BracketValue oracle(const MarkedGraph& g) { return bracket_state_sum(g); }

// Runs `body(i)` for i < trials; body returns a failure description or "".
// Exceptions become failures too.
CheckResult run_trials(std::string name, std::size_t trials,
                       const std::function<std::optional<Counterexample>(std::size_t)>& body) {
  CheckResult out{std::move(name), 0, std::nullopt};
  for (std::size_t i = 0; i < trials; ++i) {
    try {
      out.failure = body(i);
    } catch (const std::exception& e) {
      out.failure = Counterexample{std::string("exception: ") + e.what(), MarkedGraph(), std::nullopt};
    }
    if (out.failure) return out;
    ++out.cases;
  }
  return out;
}

std::optional<Counterexample> mismatch(const std::string& what, const LaurentPoly& got,
                                       const LaurentPoly& want, const MarkedGraph& g) {
  if (got == want) return std::nullopt;
  return Counterexample{what + ": got " + to_string(got) + ", expected " + to_string(want), g,
                        std::nullopt};
}

MarkedGraph faulty_marked_pivot(const MarkedGraph& g, VertexId v, VertexId w) {
  MarkedGraph h = marked_pivot(g, v, w);
  h.toggle_edge(v, w);
  return h;
}

std::vector<VertexId> host_and_twins(Rng& rng, MarkedGraph& g, std::size_t max_host,
                                     const std::vector<bool>& marks, bool clique) {
  g = gen::random_graph(rng, gen::uniform(rng, 0, max_host), {.prefix = "v", .symbolic = true});
  return gen::plant_twins(rng, g, marks, clique, true);
}

}  // namespace

CheckResult oracle_exhaustive(std::size_t max_n) {
  CheckResult out{"oracle_exhaustive", 0, std::nullopt};
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w = v + 1; w < n; ++w) pairs.emplace_back(v, w);
    }
    const std::uint64_t edge_sets = std::uint64_t{1} << pairs.size();
    const std::uint64_t flag_sets = std::uint64_t{1} << (2 * n);
    for (std::uint64_t edges = 0; edges < edge_sets; ++edges) {
      for (std::uint64_t flags = 0; flags < flag_sets; ++flags) {
        MarkedGraph g;
        for (VertexId v = 0; v < n; ++v) {
          VertexRecord r;
          r.label = "v" + std::to_string(v);
          r.looped = (flags >> (2 * v)) & 1U;
          r.marked = (flags >> (2 * v + 1)) & 1U;
          g.add_vertex(std::move(r));
        }
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if ((edges >> k) & 1U) g.set_edge(pairs[k].first, pairs[k].second);
        }
        const BracketValue want = oracle(g);
        if (auto f = mismatch("recursive engine", bracket_recursive(g), want, g)) {
          out.failure = f;
          return out;
        }
        if (auto f = mismatch("auto engine", bracket(g, Engine::automatic), want, g)) {
          out.failure = f;
          return out;
        }
        ++out.cases;
      }
    }
  }
  return out;
}

CheckResult oracle_random(std::uint64_t seed, std::size_t trials, std::size_t min_n,
                          std::size_t max_n) {
  Rng rng(seed);
  return run_trials("oracle_random", trials, [&](std::size_t) {
    const MarkedGraph g =
        gen::random_graph(rng, gen::uniform(rng, min_n, max_n), {.symbolic = true});
    const BracketValue want = oracle(g);
    auto f = mismatch("recursive engine", bracket_recursive(g), want, g);
    return f ? f : mismatch("auto engine", bracket(g, Engine::automatic), want, g);
  });
}

CheckResult marked_pivot_invariance(std::uint64_t seed, std::size_t trials, bool inject_fault) {
  Rng rng(seed + 1);
  return run_trials("marked_pivot_invariance", trials, [&](std::size_t) {
    const std::size_t n = gen::uniform(rng, 2, 7);
    MarkedGraph g = gen::random_graph(rng, n, {.symbolic = true});
    const VertexId v = gen::uniform(rng, 0, n - 1);
    VertexId w = gen::uniform(rng, 0, n - 2);
    if (w >= v) ++w;
    g.vertex(v).marked = true;
    g.vertex(w).marked = true;
    g.set_edge(v, w);
    const MarkedGraph p = inject_fault ? faulty_marked_pivot(g, v, w) : marked_pivot(g, v, w);
    return mismatch("marked pivot on '" + g.vertex(v).label + "', '" + g.vertex(w).label + "'",
                    oracle(p), oracle(g), g);
  });
}

CheckResult loop_swap(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 2);
  return run_trials("loop_swap", trials, [&](std::size_t) {
    MarkedGraph g = gen::random_graph(rng, gen::uniform(rng, 1, 7), {.symbolic = true});
    g.set_free_loops(gen::uniform(rng, 0, 2));
    const BracketValue want = oracle(g);
    if (auto f = mismatch("unloop_swap", oracle(unloop_swap(g)), want, g)) return f;
    MarkedGraph more = g;
    more.set_free_loops(g.free_loops() + 1);
    return mismatch("extra free loop", oracle(more), vars::d() * want, g);
  });
}

CheckResult union_multiplicativity(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 3);
  return run_trials("union_multiplicativity", trials, [&](std::size_t) {
    MarkedGraph g1 =
        gen::random_graph(rng, gen::uniform(rng, 0, 5), {.prefix = "p", .symbolic = true});
    MarkedGraph g2 =
        gen::random_graph(rng, gen::uniform(rng, 0, 5), {.prefix = "q", .symbolic = true});
    g1.set_free_loops(gen::uniform(rng, 0, 1));
    g2.set_free_loops(gen::uniform(rng, 0, 1));
    const MarkedGraph u = disjoint_union(g1, g2);
    return mismatch("disjoint union", oracle(u), oracle(g1) * oracle(g2), u);
  });
}

CheckResult weight_linearity(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 4);
  const std::vector<std::string> ab{"A", "B"};
  return run_trials("weight_linearity", trials, [&](std::size_t) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    MarkedGraph g = gen::random_graph(rng, n);
    const VertexId v = gen::uniform(rng, 0, n - 1);
    const LaurentPoly r1 = gen::random_poly(rng, ab, 2);
    const LaurentPoly r2 = gen::random_poly(rng, ab, 2);
    MarkedGraph g1 = g;
    MarkedGraph g2 = g;
    g1.vertex(v).alpha = gen::random_poly(rng, ab, 2);
    g1.vertex(v).beta = gen::random_poly(rng, ab, 2);
    g2.vertex(v).alpha = gen::random_poly(rng, ab, 2);
    g2.vertex(v).beta = gen::random_poly(rng, ab, 2);
    g.vertex(v).alpha = r1 * g1.vertex(v).alpha + r2 * g2.vertex(v).alpha;
    g.vertex(v).beta = r1 * g1.vertex(v).beta + r2 * g2.vertex(v).beta;
    return mismatch("weight linearity", oracle(g), r1 * oracle(g1) + r2 * oracle(g2), g);
  });
}

CheckResult twin_pair_reduce_contract(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 5);
  // (mark v, mark w, adjacent): the four covered patterns and the mirrored one.
  const bool cases[5][3] = {
      {true, true, false}, {true, true, true}, {false, false, true},
      {false, true, true}, {true, false, true}};
  return run_trials("twin_pair_reduce", trials, [&](std::size_t i) {
    const auto& c = cases[i % 5];
    MarkedGraph g;
    const auto t = host_and_twins(rng, g, 5, {c[0], c[1]}, c[2]);
    return mismatch("twin_pair_reduce", oracle(twin_pair_reduce(g, t[0], t[1])), oracle(g), g);
  });
}

CheckResult twin_pair_split_contract(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 6);
  const bool cases[3][2] = {{false, false}, {false, true}, {true, false}};
  return run_trials("twin_pair_split", trials, [&](std::size_t i) {
    const auto& c = cases[i % 3];
    MarkedGraph g;
    const auto t = host_and_twins(rng, g, 5, {c[0], c[1]}, false);
    const TwinSplit s = twin_pair_split(g, t[0], t[1]);
    return mismatch("twin_pair_split", oracle(s.reduced) + s.gamma * oracle(s.removed), oracle(g),
                    g);
  });
}

CheckResult twin_chain_contract(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 7);
  return run_trials("nonadjacent_twin_chain", trials, [&](std::size_t) {
    const std::size_t k = gen::uniform(rng, 1, 4);
    std::vector<bool> marks;
    for (std::size_t j = 0; j < k; ++j) marks.push_back(gen::one_in_pow2(rng, 1));
    MarkedGraph g;
    const auto t = host_and_twins(rng, g, 5, marks, false);
    const TwinSplit s = nonadjacent_twin_chain(g, t);
    if (auto f = mismatch("nonadjacent_twin_chain",
                          oracle(s.reduced) + s.gamma * oracle(s.removed), oracle(g), g)) {
      return f;
    }
    const bool all_unmarked = std::none_of(marks.begin(), marks.end(), [](bool m) { return m; });
    if (k == 3 && all_unmarked) {
      if (!s.gamma.is_zero()) {
        return std::optional<Counterexample>(
            Counterexample{"three unmarked twins left gamma = " + to_string(s.gamma), g, {}});
      }
      if (!(s.reduced == dual_parallel_reduce(g, t))) {
        return std::optional<Counterexample>(
            Counterexample{"three unmarked twins disagree with dual_parallel_reduce", g, {}});
      }
    }
    return std::optional<Counterexample>();
  });
}

CheckResult dual_parallel_contract(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 8);
  return run_trials("dual_parallel_reduce", trials, [&](std::size_t i) {
    const std::size_t k = i % 2 == 0 ? 3 : 5;
    MarkedGraph g;
    const auto t = host_and_twins(rng, g, k == 3 ? 5 : 4, std::vector<bool>(k, false), false);
    return mismatch("dual_parallel_reduce", oracle(dual_parallel_reduce(g, t)), oracle(g), g);
  });
}

CheckResult clique_twin_contract(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed + 9);
  return run_trials("clique_twin_reduce", trials, [&](std::size_t) {
    const std::size_t k = gen::uniform(rng, 1, 4);
    std::vector<bool> marks;
    for (std::size_t j = 0; j < k; ++j) marks.push_back(gen::one_in_pow2(rng, 1));
    MarkedGraph g;
    const auto t = host_and_twins(rng, g, 5, marks, true);
    return mismatch("clique_twin_reduce", oracle(clique_twin_reduce(g, t)), oracle(g), g);
  });
}

CheckResult composition_identities(std::uint64_t seed, std::size_t trials, std::size_t max_side) {
  Rng rng(seed + 10);
  using vars::A;
  using vars::B;
  using vars::d;
  return run_trials("composition_identities", trials, [&](std::size_t i) {
    const bool symbolic = i % 2 == 1;
    MarkedGraph f = gen::random_graph(rng, gen::uniform(rng, 0, max_side - 1),
                                      {.prefix = "f", .symbolic = symbolic});
    MarkedGraph h = gen::random_graph(rng, gen::uniform(rng, 0, max_side - 1),
                                      {.prefix = "h", .symbolic = symbolic});
    f.set_free_loops(gen::uniform(rng, 0, 1));
    const VertexId af = gen::add_cut_vertex(rng, f, "a");
    const VertexId ah = gen::add_cut_vertex(rng, h, "a");
    for (VertexId v : h.neighbors(ah)) h.vertex(v).marked = false;
    if (i % 4 == 0) {
      for (VertexId v : f.neighbors(af)) f.vertex(v).marked = false;
    }
    auto fail = [&](const std::string& what) {
      return std::optional<Counterexample>(Counterexample{what, f, h});
    };

    const BracketValue want = oracle(compose(f, h, "a"));
    const CompositionBracket cb = composition_bracket(f, h, "a", Engine::statesum, 64);
    if (cb.total != want) return fail("[H'] + [H'_m] differs from [F*H]");

    const LaurentPoly r = gen::random_poly(rng, {"A", "B", "d"}, 2);
    const WeightTriple shifted{cb.weights.alpha_a, cb.weights.beta_a - r, cb.weights.alpha_am};
    const PjoinGraphs pg = pjoin_graphs(h, "a", shifted, r);
    if (oracle(pg.h_prime) + oracle(pg.h_marked) != want) return fail("beta gauge shift");

    const MarkedGraph rest = delete_vertices(f, {af});
    const auto [f10, f01] = build_F10_F01(f, af);
    const auto [fplus, fminus] = build_Fpm(f, af);
    const BracketValue b_rest = oracle(rest);
    const BracketValue b10 = oracle(f10);
    const BracketValue b01 = oracle(f01);
    const BracketValue bplus = oracle(fplus);
    const BracketValue bminus = oracle(fminus);
    if (bplus != A() * b10 + B() * b01) return fail("[F+] != A[F10] + B[F01]");
    if (bminus != B() * b10 + A() * b01) return fail("[F-] != B[F10] + A[F01]");
    if (pjoin_weights_cor1(b_rest, b10, b01) != cb.weights) return fail("cor1 != cor4 weights");
    if (pjoin_weights_cor3(b_rest, bplus, bminus) != cb.weights) return fail("cor3 != cor4 weights");

    const Contributions c = subset_contributions(f, af);
    const LaurentPoly c3_over_d = exact_div(c.type3, d());
    if (b_rest != c.type1 + c.type2 + c.type3) return fail("[F-a] contribution decomposition");
    if (b10 != d() * c.type1 + c.type2 + c3_over_d) return fail("[F10] contribution decomposition");
    if (b01 != c.type1 + d() * c.type2 + c3_over_d) return fail("[F01] contribution decomposition");

    bool f_clean = true;
    for (VertexId v : f.neighbors(af)) f_clean = f_clean && !f.vertex(v).marked;
    if (f_clean && bracket_double_composition(f, h, "a") != want) {
      return fail("five-term double composition differs from [F*H]");
    }
    return std::optional<Counterexample>();
  });
}

CheckResult subset_type_pattern(std::uint64_t seed, std::size_t trials, std::size_t max_rest) {
  Rng rng(seed + 11);
  return run_trials("subset_type_pattern", trials, [&](std::size_t) {
    MarkedGraph f = gen::random_graph(rng, gen::uniform(rng, 0, max_rest), {.prefix = "f"});
    const VertexId a = gen::add_cut_vertex(rng, f, "a");
    const std::size_t m = f.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<bool> subset(f.size(), false);
      for (std::size_t j = 0; j < m; ++j) subset[j] = (mask >> j) & 1U;
      (void)subset_type(f, a, subset);  // throws ClassificationViolation
    }
    (void)subset_contributions(f, a);
    return std::optional<Counterexample>();
  });
}

std::vector<CheckResult> run_all(const Options& opts) {
  const std::uint64_t s = opts.seed;
  const std::size_t t = opts.trials;
  const std::vector<std::function<CheckResult()>> checks = {
      [&] { return oracle_exhaustive(opts.max_n); },
      [&] { return marked_pivot_invariance(s, t, opts.inject_fault); },
      [&] { return oracle_random(s, t, 5, 8); },
      [&] { return loop_swap(s, t); },
      [&] { return union_multiplicativity(s, t); },
      [&] { return weight_linearity(s, t); },
      [&] { return twin_pair_reduce_contract(s, t); },
      [&] { return twin_pair_split_contract(s, t); },
      [&] { return twin_chain_contract(s, t); },
      [&] { return dual_parallel_contract(s, t); },
      [&] { return clique_twin_contract(s, t); },
      [&] { return composition_identities(s, t, 6); },
      [&] { return subset_type_pattern(s, t, 6); },
  };
  std::vector<CheckResult> out;
  for (const auto& check : checks) {
    out.push_back(check());
    if (!out.back().passed()) break;
  }
  return out;
}

}  // namespace mgb::verify
