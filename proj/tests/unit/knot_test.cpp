#include <doctest.h>

#include "generators.hpp"
#include "mgb/knot.hpp"
#include "support.hpp"

using namespace mgb;
using mgb::test::P;

namespace {

KnotParseError::Kind parse_error_kind(std::string_view text) {
  try {
    (void)parse_euler_code(text);
  } catch (const KnotParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return KnotParseError::Kind::syntax;
}

std::string jones_text(const LaurentPoly& bracket, int w) {
  return to_string(jones(f_polynomial(bracket, w)));
}

}  // namespace

TEST_CASE("parse Euler codes") {
  const EulerCode hopf = parse_euler_code("circuit a b a b\nsign a +\nsign b +\n");
  CHECK(hopf.circuits.size() == 1);
  CHECK(hopf.signs.size() == 2);

  const EulerCode kink = parse_euler_code("circuit a a\nsign a -");
  CHECK(kink.signs.at("a") == Sign::negative);

  CHECK(parse_error_kind("circuit a b a") == KnotParseError::Kind::double_occurrence);
  CHECK(parse_error_kind("circuit a b\ncircuit a b") == KnotParseError::Kind::split_label);
  CHECK(parse_error_kind("circuit a a\nsign b -") == KnotParseError::Kind::unknown_label);
  CHECK(parse_error_kind("circuit a a\nmark z") == KnotParseError::Kind::unknown_label);
  CHECK(parse_error_kind("circuit a a\nsign a *") == KnotParseError::Kind::syntax);
  CHECK(parse_error_kind("circuit\n") == KnotParseError::Kind::syntax);
  CHECK(parse_error_kind("knot a a") == KnotParseError::Kind::syntax);

  try {
    (void)parse_euler_code("# header\ncircuit a a\nsign  a ?\n");
    FAIL("expected a parse error");
  } catch (const KnotParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
  }
  try {
    (void)parse_euler_code("circuit x y x y x\n");
    FAIL("expected a parse error");
  } catch (const KnotParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 17);
  }
}

TEST_CASE("interlacement graphs") {
  const MarkedGraph k2 = interlacement_graph(parse_euler_code("circuit a b a b"));
  CHECK(k2.size() == 2);
  CHECK(k2.adjacent(0, 1));
  CHECK_FALSE(k2.vertex(0).looped);
  CHECK_FALSE(k2.vertex(1).marked);

  const MarkedGraph two = interlacement_graph(parse_euler_code("circuit a a b b"));
  CHECK(two.size() == 2);
  CHECK(two.edge_count() == 0);

  const MarkedGraph k3 = interlacement_graph(
      parse_euler_code("circuit a b c a b c\nsign a -\nsign b -\nsign c -"));
  CHECK(k3.edge_count() == 3);
  for (VertexId v = 0; v < 3; ++v) {
    CHECK(k3.vertex(v).looped);
    CHECK(k3.vertex(v).has_standard_weights());
  }

  const MarkedGraph marked =
      interlacement_graph(parse_euler_code("circuit a b a b\nmark b\nfreeloops 2"));
  CHECK(marked.vertex(1).marked);
  CHECK(marked.free_loops() == 2);
}

TEST_CASE("interlacement is invariant under rotation of circuit words") {
  gen::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    EulerCode code = gen::random_euler_code(rng, 1 + rng() % 8);
    const MarkedGraph g = interlacement_graph(code);
    for (auto& word : code.circuits) {
      std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(rng() % word.size()),
                  word.end());
    }
    CHECK(equal_up_to_vertex_order(interlacement_graph(code), g));
  }
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_euler_code("circuit a b c a b c\nsign c -")) == 1);
  CHECK(writhe(parse_euler_code("circuit a b c a c b")) == 3);
  CHECK(writhe(EulerCode{}) == 0);
}

TEST_CASE("f polynomial") {
  CHECK(f_polynomial(P("A^2*(A^2*d + 2*A*B + B^2*d) + (2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2)"),
                     0) == P("-A^-2 - A^2"));
  CHECK(f_polynomial(P("A^2*(A^2 + 2*A*B*d + B^2) + (2*A*B + B^2*d)*(A^2*d + A*B + A*B*d^2 + B^2*d)"),
                     2) == P("A^-6*(-A^4 - A^-4)"));
  CHECK(f_polynomial(P("1"), 0) == P("1"));
  CHECK(f_polynomial(P("1"), -1) == P("-A^3"));
  CHECK_THROWS_AS(f_polynomial(P("x*A"), 0), UnexpectedVariable);
}

TEST_CASE("Jones values") {
  CHECK(to_string(jones(P("-A^-2 - A^2"))) == "-t^{1/2} - t^{-1/2}");
  CHECK(to_string(jones(P("A^-6*(-A^4 - A^-4)"))) == "-t^{5/2} - t^{1/2}");
  CHECK(to_string(jones(P("1"))) == "1");
  CHECK(jones(P("A^-4")).poly == P("q^4"));
  CHECK(to_string(jones(P("3*A^-1 - 2*A^8"))) == "3*t^{1/4} - 2*t^-2");
  CHECK_THROWS_AS(jones(P("A*B")), UnexpectedVariable);
}

TEST_CASE("Jones values of the worked examples") {
  CHECK(jones_text(P("A^2*(A^2*d + 2*A*B + B^2*d) + (2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2)"),
                   0) == "-t^{1/2} - t^{-1/2}");
  CHECK(jones_text(P("(2*A*B + B^2*d)*(A^2*d^2 + 2*A*B*d + B^2) + A^2*(A^2*d + 2*A*B + B^2)"),
                   0) == "1");
  const LaurentPoly af = P("A^4*d + 2*A^3*B");
  const LaurentPoly amf = P("2*A^3*B*d + A^2*B^2*(5 + d^2) + 4*A*B^3*d + B^4*d^2");
  const LaurentPoly ah = P("2*A*B^2 + B^3*d");
  const LaurentPoly amh = P("A^3*d + 3*A^2*B + A*B^2*d");
  const LaurentPoly d = P("d");
  const LaurentPoly knot = af * ah + (af * d) * amh + amf * (ah * d) + amf * amh;
  CHECK(f_polynomial(knot, 3) ==
        P("-A^-9*(-A^13 + 2*A^9 - 3*A^5 + 3*A - 4*A^-3 + 3*A^-7 - 2*A^-11 + A^-15)"));
  CHECK(jones_text(knot, 3) == "-t^6 + 2*t^5 - 3*t^4 + 4*t^3 - 3*t^2 + 3*t - 2 + t^-1");
}

TEST_CASE("diagram brackets") {
  CHECK(diagram_bracket(parse_euler_code("freeloops 1"), Engine::recursive) == P("d"));
  CHECK(diagram_bracket(parse_euler_code("circuit a b a b"), Engine::statesum) ==
        P("A^2 + 2*A*B + B^2*d"));
  CHECK(diagram_bracket(parse_euler_code("circuit a a\nsign a -"), Engine::recursive) ==
        P("B*d + A"));
}

TEST_CASE("Hopf link and the unmarked two-crossing code") {
  const EulerCode hopf = parse_euler_code("circuit a b a b\nmark b");
  const LaurentPoly b = diagram_bracket(hopf, Engine::recursive);
  CHECK(b == P("A^2*d + 2*A*B + B^2*d"));
  CHECK(jones_text(b, writhe(hopf)) == "-t^{5/2} - t^{1/2}");

  const EulerCode plain = parse_euler_code("circuit a b a b");
  CHECK(jones_text(diagram_bracket(plain, Engine::recursive), 2) == "-t^{5/2} + t^{3/2} + t");
}

TEST_CASE("engines agree on random diagrams") {
  gen::Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    const EulerCode code = gen::random_euler_code(rng, rng() % 9);
    CHECK(diagram_bracket(code, Engine::statesum) == diagram_bracket(code, Engine::recursive));
    CHECK(diagram_bracket(code, Engine::automatic) == diagram_bracket(code, Engine::recursive));
  }
}

TEST_CASE("Euler code round trip on seeded codes") {
  gen::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const EulerCode code = gen::random_euler_code(rng, rng() % 10);
    CHECK(parse_euler_code(write_euler_code(code)) == code);
  }
}
