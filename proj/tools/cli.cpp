#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "generators.hpp"
#include "mgb/graph.hpp"
#include "mgb/knot.hpp"
#include "mgb/reduce.hpp"
#include "verify.hpp"

namespace mgb::cli {

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coef] : p.terms()) {
    json exponents = json::object();
    for (const auto& [name, e] : mono.factors()) exponents[name] = e;
    json c = coef.fits_slong_p() ? json(coef.get_si()) : json(coef.get_str());
    terms.push_back({{"coefficient", std::move(c)}, {"exponents", std::move(exponents)}});
  }
  return terms;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  LaurentPoly p;
  for (const auto& term : j) {
    const json& c = term.at("coefficient");
    Integer coef;
    if (c.is_number_integer()) {
      coef = c.get<long>();
    } else if (c.is_string()) {
      if (coef.set_str(c.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("bad coefficient string");
      }
    } else {
      throw std::invalid_argument("coefficient must be an integer or a decimal string");
    }
    Monomial m;
    for (const auto& [name, e] : term.at("exponents").items()) {
      m = m * Monomial::var(name, e.get<int>());
    }
    p.add_term(coef, m);
  }
  return p;
}

json report_to_json(const RunReport& r) {
  json inputs = json::array();
  for (const auto& in : r.inputs) inputs.push_back({{"path", in.path}, {"fnv1a64", in.fnv1a64}});
  json results = json::array();
  for (const auto& np : r.results) {
    results.push_back({{"name", np.name}, {"text", np.text}, {"poly", poly_to_json(np.poly)}});
  }
  return {{"command", r.command},     {"inputs", inputs},   {"engine", r.engine},
          {"results", results},       {"fields", r.fields}, {"counters", r.counters},
          {"wall_time_ms", r.wall_time_ms}};
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  for (const auto& in : j.at("inputs")) {
    r.inputs.push_back({in.at("path").get<std::string>(), in.at("fnv1a64").get<std::string>()});
  }
  r.engine = j.at("engine").get<std::string>();
  for (const auto& np : j.at("results")) {
    r.results.push_back({np.at("name").get<std::string>(), np.at("text").get<std::string>(),
                         poly_from_json(np.at("poly"))});
  }
  r.fields = j.at("fields").get<std::map<std::string, std::string>>();
  r.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, RunReport& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  report.inputs.push_back({path, fnv1a64_hex(text)});
  return text;
}

void add_poly(RunReport& r, std::string name, const LaurentPoly& p) {
  r.results.push_back({std::move(name), to_string(p), p});
}

void add_stats(RunReport& r, const BracketStats& s, const std::string& prefix = "") {
  r.counters[prefix + "subsets"] += s.subsets;
  r.counters[prefix + "recursion_calls"] += s.recursion_calls;
  r.counters[prefix + "twin_reductions"] += s.twin_reductions;
}

void print_text(const RunReport& r, std::ostream& out) {
  for (const auto& np : r.results) out << np.name << ": " << np.text << '\n';
  for (const auto& [k, v] : r.fields) out << k << ": " << v << '\n';
  for (const auto& [k, v] : r.counters) out << k << ": " << v << '\n';
}

void emit(const RunReport& r, const CommonOptions& opts, std::ostream& out,
          const std::function<void()>& text) {
  if (opts.format == OutputFormat::json) {
    out << report_to_json(r).dump(2) << '\n';
  } else {
    text();
  }
}

// Runs `body` and maps exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const MarkedNeighborInH& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Violation& e) {
    err << "property violation: " << e.what() << '\n';
    return kPropertyViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

RunReport new_report(const CommonOptions& opts, std::string engine) {
  RunReport r;
  r.command = opts.command_line;
  r.engine = std::move(engine);
  return r;
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int cmd_bracket(const std::string& graph_path, const CommonOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    RunReport r = new_report(opts, to_string(opts.engine));
    const MarkedGraph g = parse_graph(read_file(graph_path, r));
    BracketStats stats;
    const BracketValue value = bracket(g, opts.engine, &stats, opts.limit);
    add_poly(r, "bracket", value);
    add_stats(r, stats);
    r.fields["vertices"] = std::to_string(g.size());
    r.wall_time_ms = elapsed_ms(start);
    emit(r, opts, out, [&] { out << to_string(value) << '\n'; });
    return kOk;
  });
}

int cmd_jones(const std::string& code_path, const CommonOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    RunReport r = new_report(opts, to_string(opts.engine));
    const EulerCode code = parse_euler_code(read_file(code_path, r));
    BracketStats stats;
    const BracketValue b = diagram_bracket(code, opts.engine, &stats, opts.limit);
    const int w = writhe(code);
    const LaurentPoly f = f_polynomial(b, w);
    const JonesValue v = jones(f);
    add_poly(r, "bracket", b);
    add_poly(r, "f", f);
    r.results.push_back({"jones", to_string(v), v.poly});
    r.fields["writhe"] = std::to_string(w);
    add_stats(r, stats);
    r.wall_time_ms = elapsed_ms(start);
    emit(r, opts, out, [&] { print_text(r, out); });
    return kOk;
  });
}

int cmd_compose(const std::string& f_path, const std::string& h_path, const std::string& cut,
                const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    RunReport r = new_report(opts, to_string(opts.engine));
    const MarkedGraph f = parse_graph(read_file(f_path, r));
    const MarkedGraph h = parse_graph(read_file(h_path, r));
    CompositionBracket cb;
    try {
      cb = composition_bracket(f, h, cut, opts.engine, opts.limit);
    } catch (const MarkedNeighborInH& e) {
      throw MarkedNeighborInH(std::string(e.what()) +
                              " (hint: the formula needs one side without marked neighbors of "
                              "the cut vertex; pass that side second)");
    }
    add_poly(r, "alpha_a", cb.weights.alpha_a);
    add_poly(r, "beta_a", cb.weights.beta_a);
    add_poly(r, "alpha_am", cb.weights.alpha_am);
    add_poly(r, "h_prime", cb.h_prime);
    add_poly(r, "h_marked", cb.h_marked);
    add_poly(r, "total", cb.total);

    BracketStats composed = cb.weight_stats;
    composed += cb.h_stats;
    add_stats(r, composed, "composed_");
    const MarkedGraph g = compose(f, h, cut);
    r.fields["composed_vertices"] = std::to_string(g.size());
    if (g.size() < 64) r.counters["direct_subsets_required"] = std::uint64_t{1} << g.size();
    bool equal = true;
    if (g.size() <= opts.limit) {
      BracketStats direct;
      const BracketValue want = bracket_state_sum(g, &direct);
      add_poly(r, "direct", want);
      r.counters["direct_subsets"] = direct.subsets;
      equal = want == cb.total;
      r.fields["equal"] = equal ? "yes" : "no";
    } else {
      r.fields["equal"] = "not checked (composed graph exceeds the oracle limit)";
    }
    r.wall_time_ms = elapsed_ms(start);
    emit(r, opts, out, [&] { print_text(r, out); });
    if (!equal) throw Violation("composition bracket differs from the direct state sum");
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& v, const CommonOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (v.max_n > opts.limit) {
      throw OracleLimitExceeded(v.max_n, opts.limit);
    }
    const auto start = Clock::now();
    RunReport r = new_report(opts, "statesum");
    const auto results = verify::run_all(
        {.max_n = v.max_n, .seed = opts.seed, .trials = v.trials, .inject_fault = v.inject_fault});
    const verify::CheckResult* failed = nullptr;
    for (const auto& c : results) {
      r.counters[c.name] = c.cases;
      r.fields[c.name] = c.passed() ? "ok" : "FAILED";
      if (!c.passed()) failed = &c;
    }
    std::string counterexample;
    if (failed) {
      const auto& f = *failed->failure;
      counterexample = "# " + failed->name + ": " + f.detail + "\n" + write_graph(f.graph);
      if (f.second) counterexample += "# second graph\n" + write_graph(*f.second);
      r.fields["counterexample"] = counterexample;
    }
    r.wall_time_ms = elapsed_ms(start);
    emit(r, opts, out, [&] {
      for (const auto& c : results) {
        out << c.name << ": " << (c.passed() ? "ok" : "FAILED") << " (" << c.cases
            << " cases)\n";
      }
      if (failed) out << "counterexample:\n" << counterexample;
    });
    if (failed) {
      err << "property violation in " << failed->name << ": " << failed->failure->detail << '\n';
      return kPropertyViolation;
    }
    return kOk;
  });
}

int cmd_bench(const BenchOptions& b, const CommonOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    RunReport r = new_report(opts, to_string(opts.engine));
    gen::Rng rng(opts.seed);
    BracketStats stats;
    for (std::size_t t = 0; t < b.trials; ++t) {
      const MarkedGraph g = gen::random_graph(rng, b.n);
      (void)bracket(g, opts.engine, &stats, opts.limit);
    }
    add_stats(r, stats);
    r.fields["vertices"] = std::to_string(b.n);
    r.fields["trials"] = std::to_string(b.trials);
    r.wall_time_ms = elapsed_ms(start);
    emit(r, opts, out, [&] {
      print_text(r, out);
      out << "wall_time_ms: " << r.wall_time_ms << '\n';
    });
    return kOk;
  });
}

}  // namespace mgb::cli
