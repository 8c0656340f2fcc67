#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace mgb;
using namespace mgb::cli;
using mgb::test::P;

namespace {

std::string data(const char* name) { return std::string(MGB_TEST_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run capture(F&& f) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

CommonOptions with(Engine engine, OutputFormat format = OutputFormat::text) {
  CommonOptions o;
  o.engine = engine;
  o.format = format;
  o.command_line = "test";
  return o;
}

}  // namespace

TEST_CASE("polynomial JSON round trip") {
  const LaurentPoly p = P("A^2*d - 2*A*B^-1 + 7 + 123456789012345678901234567890*x_1^3");
  const json j = poly_to_json(p);
  CHECK(j.size() == 4);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(json::parse(j.dump())) == p);
  CHECK_THROWS(poly_from_json(json::parse(R"([{"coefficient": 1.5, "exponents": {}}])")));
}

TEST_CASE("FNV digest") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("bracket command") {
  auto run = [](const char* file, Engine e, std::size_t limit = kDefaultOracleLimit) {
    return capture([&](std::ostream& o, std::ostream& r) {
      CommonOptions opts = with(e);
      opts.limit = limit;
      return cmd_bracket(data(file), opts, o, r);
    });
  };
  CHECK(run("empty.graph", Engine::statesum).out == "1\n");
  CHECK(run("k2.graph", Engine::statesum).out == "A^2 + 2*A*B + B^2*d\n");
  CHECK(run("k2.graph", Engine::automatic).out == "A^2 + 2*A*B + B^2*d\n");
  const Run big = run("thirty.graph", Engine::statesum);
  CHECK(big.code == kLimitExceeded);
  CHECK(big.err.find("oracle limit") != std::string::npos);
  CHECK(run("bad.graph", Engine::statesum).code == kInputError);
  CHECK(run("missing.graph", Engine::statesum).code == kInputError);
}

TEST_CASE("bracket command JSON report round trips") {
  const Run r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_bracket(data("k2.graph"), with(Engine::statesum, OutputFormat::json), o, e);
  });
  REQUIRE(r.code == kOk);
  const json j = json::parse(r.out);
  const RunReport report = report_from_json(j);
  CHECK(report_to_json(report) == j);
  CHECK(report.results.at(0).poly == P("A^2 + 2*A*B + B^2*d"));
  CHECK(report.counters.at("subsets") == 4);
  CHECK(report.inputs.at(0).fnv1a64.size() == 16);
  CHECK(report.engine == "statesum");
}

TEST_CASE("jones command") {
  auto run = [](const char* file) {
    return capture([&](std::ostream& o, std::ostream& e) {
      return cmd_jones(data(file), with(Engine::automatic), o, e);
    });
  };
  const Run hopf = run("hopf.code");
  CHECK(hopf.code == kOk);
  CHECK(hopf.out.find("jones: -t^{5/2} - t^{1/2}\n") != std::string::npos);
  CHECK(hopf.out.find("writhe: 2\n") != std::string::npos);

  const Run loop = run("free_loop.code");
  CHECK(loop.out.find("bracket: d\n") != std::string::npos);
  CHECK(loop.out.find("jones: -t^{1/2} - t^{-1/2}\n") != std::string::npos);

  const Run bad = run("bad.code");
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("compose command") {
  auto run = [](const char* f, const char* h, OutputFormat fmt = OutputFormat::text) {
    return capture([&](std::ostream& o, std::ostream& e) {
      return cmd_compose(data(f), data(h), "a", with(Engine::statesum, fmt), o, e);
    });
  };
  const Run k2 = run("f_k2.graph", "h_six.graph");
  CHECK(k2.code == kOk);
  CHECK(k2.out.find("alpha_a: A\n") != std::string::npos);
  CHECK(k2.out.find("beta_a: B\n") != std::string::npos);
  CHECK(k2.out.find("alpha_am: 0\n") != std::string::npos);
  CHECK(k2.out.find("equal: yes\n") != std::string::npos);

  const Run six = run("f_six.graph", "h_six.graph", OutputFormat::json);
  CHECK(six.code == kOk);
  const RunReport report = report_from_json(json::parse(six.out));
  CHECK(report.fields.at("equal") == "yes");
  CHECK(report.counters.at("composed_subsets") < report.counters.at("direct_subsets"));

  const Run bad = run("f_k2.graph", "h_marked_nbr.graph");
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("hint") != std::string::npos);
}

TEST_CASE("verify command") {
  VerifyOptions v;
  v.max_n = 3;
  v.trials = 8;
  auto run = [&](bool fault) {
    v.inject_fault = fault;
    return capture([&](std::ostream& o, std::ostream& e) {
      return cmd_verify(v, with(Engine::statesum), o, e);
    });
  };
  const Run a = run(false);
  CHECK(a.code == kOk);
  CHECK(a.out == run(false).out);
  const Run broken = run(true);
  CHECK(broken.code == kPropertyViolation);
  CHECK(broken.out.find("counterexample:\n") != std::string::npos);
  CHECK(broken.out.find("vertex ") != std::string::npos);

  v.inject_fault = false;
  v.max_n = 30;
  const Run too_big = capture([&](std::ostream& o, std::ostream& e) {
    return cmd_verify(v, with(Engine::statesum), o, e);
  });
  CHECK(too_big.code == kLimitExceeded);
}

TEST_CASE("bench command") {
  BenchOptions b;
  b.n = 8;
  b.trials = 2;
  const Run r = capture([&](std::ostream& o, std::ostream& e) {
    return cmd_bench(b, with(Engine::recursive), o, e);
  });
  CHECK(r.code == kOk);
  CHECK(r.out.find("recursion_calls: ") != std::string::npos);
}
