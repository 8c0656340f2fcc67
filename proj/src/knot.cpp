#include "mgb/knot.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace mgb {

KnotParseError::KnotParseError(Kind kind, std::size_t line, std::size_t column,
                               const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view to_string(KnotParseError::Kind kind) {
  switch (kind) {
    case KnotParseError::Kind::syntax:
      return "SyntaxError";
    case KnotParseError::Kind::double_occurrence:
      return "DoubleOccurrenceViolation";
    case KnotParseError::Kind::split_label:
      return "SplitLabel";
    case KnotParseError::Kind::unknown_label:
      return "UnknownLabelInSignOrMark";
  }
  return "?";
}

namespace {

using Kind = KnotParseError::Kind;

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Occurrence {
  std::size_t circuit;
  std::size_t index;
};

// Checks the occurrence invariants. `where` maps a label to the position of
// its occurrences in the source, when there is one.
void check_occurrences(const EulerCode& code,
                       const std::unordered_map<std::string, std::vector<Position>>* where) {
  std::unordered_map<std::string, std::vector<Occurrence>> seen;
  std::vector<std::string> order;
  for (std::size_t c = 0; c < code.circuits.size(); ++c) {
    for (std::size_t i = 0; i < code.circuits[c].size(); ++i) {
      auto& occ = seen[code.circuits[c][i]];
      if (occ.empty()) order.push_back(code.circuits[c][i]);
      occ.push_back({c, i});
    }
  }
  auto position = [&](const std::string& label, std::size_t k) {
    if (!where) return Position{};
    auto it = where->find(label);
    return it == where->end() || it->second.size() <= k ? Position{} : it->second[k];
  };
  for (const auto& label : order) {
    const auto& occ = seen[label];
    if (occ.size() != 2) {
      const Position p = position(label, occ.size() > 2 ? 2 : 0);
      throw KnotParseError(Kind::double_occurrence, p.line, p.column,
                           "label '" + label + "' occurs " + std::to_string(occ.size()) +
                               " time(s); every crossing must occur exactly twice");
    }
    if (occ[0].circuit != occ[1].circuit) {
      const Position p = position(label, 1);
      throw KnotParseError(Kind::split_label, p.line, p.column,
                           "label '" + label + "' occurs in two different circuits");
    }
  }
  for (const auto& [label, sign] : code.signs) {
    (void)sign;
    if (!seen.contains(label)) {
      throw KnotParseError(Kind::unknown_label, 0, 0, "sign given for unknown label '" + label + "'");
    }
  }
  for (const auto& label : code.marks) {
    if (!seen.contains(label)) {
      throw KnotParseError(Kind::unknown_label, 0, 0, "mark given for unknown label '" + label + "'");
    }
  }
}

}  // namespace

EulerCode parse_euler_code(std::string_view text) {
  EulerCode code;
  std::unordered_map<std::string, std::vector<Position>> where;
  std::vector<std::pair<std::string, Position>> sign_refs;
  std::vector<std::pair<std::string, Position>> mark_refs;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view directive = tokens[0].text;
    auto fail = [&](const Token& t, const std::string& what) -> void {
      throw KnotParseError(Kind::syntax, line_no, t.column, what);
    };
    auto label_at = [&](const Token& t) {
      if (!is_valid_label(t.text)) fail(t, "invalid label '" + std::string(t.text) + "'");
      return std::string(t.text);
    };

    if (directive == "circuit") {
      if (tokens.size() < 2) fail(tokens[0], "empty circuit");
      std::vector<std::string> circuit;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        circuit.push_back(label_at(tokens[i]));
        where[circuit.back()].push_back({line_no, tokens[i].column});
      }
      code.circuits.push_back(std::move(circuit));
    } else if (directive == "sign") {
      if (tokens.size() != 3) fail(tokens[0], "expected 'sign <label> +|-'");
      std::string label = label_at(tokens[1]);
      Sign sign = Sign::positive;
      if (tokens[2].text == "-") {
        sign = Sign::negative;
      } else if (tokens[2].text != "+") {
        fail(tokens[2], "sign must be '+' or '-'");
      }
      sign_refs.push_back({label, {line_no, tokens[1].column}});
      code.signs[label] = sign;
    } else if (directive == "mark") {
      if (tokens.size() != 2) fail(tokens[0], "expected 'mark <label>'");
      std::string label = label_at(tokens[1]);
      mark_refs.push_back({label, {line_no, tokens[1].column}});
      code.marks.insert(std::move(label));
    } else if (directive == "freeloops") {
      if (tokens.size() != 2) fail(tokens[0], "expected 'freeloops <n>'");
      const std::string_view n = tokens[1].text;
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), value);
      if (ec != std::errc() || ptr != n.data() + n.size()) {
        fail(tokens[1], "freeloops needs a nonnegative integer");
      }
      code.free_loops = value;
    } else {
      fail(tokens[0], "unknown directive '" + std::string(directive) + "'");
    }
  }

  for (const auto& refs : {sign_refs, mark_refs}) {
    for (const auto& [label, pos] : refs) {
      if (!where.contains(label)) {
        throw KnotParseError(Kind::unknown_label, pos.line, pos.column,
                             "label '" + label + "' does not occur in any circuit");
      }
    }
  }
  check_occurrences(code, &where);
  for (const auto& circuit : code.circuits) {
    for (const auto& label : circuit) code.signs.try_emplace(label, Sign::positive);
  }
  return code;
}

void validate_euler_code(const EulerCode& code) {
  for (const auto& circuit : code.circuits) {
    if (circuit.empty()) throw KnotParseError(Kind::syntax, 0, 0, "empty circuit");
    for (const auto& label : circuit) {
      if (!is_valid_label(label)) {
        throw KnotParseError(Kind::syntax, 0, 0, "invalid label '" + label + "'");
      }
    }
  }
  check_occurrences(code, nullptr);
}

std::string write_euler_code(const EulerCode& code) {
  std::ostringstream out;
  for (const auto& circuit : code.circuits) {
    out << "circuit";
    for (const auto& label : circuit) out << ' ' << label;
    out << '\n';
  }
  for (const auto& [label, sign] : code.signs) {
    if (sign == Sign::negative) out << "sign " << label << " -\n";
  }
  for (const auto& label : code.marks) out << "mark " << label << '\n';
  if (code.free_loops != 0) out << "freeloops " << code.free_loops << '\n';
  return out.str();
}

MarkedGraph interlacement_graph(const EulerCode& code) {
  validate_euler_code(code);
  MarkedGraph g;
  struct Span {
    std::size_t circuit;
    std::size_t first;
    std::size_t second;
  };
  std::vector<Span> spans;
  std::unordered_map<std::string, VertexId> index;
  for (std::size_t c = 0; c < code.circuits.size(); ++c) {
    for (std::size_t i = 0; i < code.circuits[c].size(); ++i) {
      const std::string& label = code.circuits[c][i];
      auto it = index.find(label);
      if (it != index.end()) {
        spans[it->second].second = i;
        continue;
      }
      VertexRecord r;
      r.label = label;
      auto sign = code.signs.find(label);
      r.looped = sign != code.signs.end() && sign->second == Sign::negative;
      r.marked = code.marks.contains(label);
      index.emplace(label, g.add_vertex(std::move(r)));
      spans.push_back({c, i, i});
    }
  }
  for (VertexId v = 0; v < spans.size(); ++v) {
    for (VertexId w = v + 1; w < spans.size(); ++w) {
      if (spans[v].circuit != spans[w].circuit) continue;
      auto inside = [&](std::size_t q) { return spans[v].first < q && q < spans[v].second; };
      if (inside(spans[w].first) != inside(spans[w].second)) g.set_edge(v, w);
    }
  }
  g.set_free_loops(code.free_loops);
  return g;
}

int writhe(const EulerCode& code) {
  int w = 0;
  for (const auto& [label, sign] : code.signs) {
    (void)label;
    w += sign == Sign::positive ? 1 : -1;
  }
  return w;
}

LaurentPoly f_polynomial(const BracketValue& bracket, int w) {
  for (const auto& v : bracket.variables()) {
    if (v != "A" && v != "B" && v != "d") {
      throw UnexpectedVariable("bracket contains the non-standard variable '" + v + "'");
    }
  }
  const LaurentPoly a_inv = LaurentPoly::var("A", -1);
  LaurentPoly f = substitute(bracket, VarSym("d"), -(vars::A() * vars::A()) - vars::B() * vars::B());
  f = substitute(f, VarSym("B"), a_inv);
  const LaurentPoly factor = LaurentPoly(w % 2 == 0 ? 1 : -1) * LaurentPoly::var("A", -3 * w);
  return f * factor;
}

JonesValue jones(const LaurentPoly& f) {
  for (const auto& v : f.variables()) {
    if (v != "A") throw UnexpectedVariable("f polynomial contains the variable '" + v + "'");
  }
  return {substitute(f, VarSym("A"), LaurentPoly::var("q", -1))};
}

std::string to_string(const JonesValue& v) {
  if (v.poly.is_zero()) return "0";
  std::string out;
  // The term order lists larger q exponents first.
  for (const auto& [mono, coef] : v.poly.terms()) {
    const int e = mono.exponent("q");
    const bool negative = sgn(coef) < 0;
    const Integer magnitude = abs(coef);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (e != 0) {
      const int g = std::gcd(e, 4);
      const int num = e / g;
      const int den = 4 / g;
      if (den == 1) {
        power = num == 1 ? "t" : "t^" + std::to_string(num);
      } else {
        power = "t^{" + std::to_string(num) + "/" + std::to_string(den) + "}";
      }
    }
    if (power.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.get_str() + "*" + power;
    }
  }
  return out;
}

BracketValue diagram_bracket(const EulerCode& code, Engine engine, BracketStats* stats,
                             std::size_t oracle_limit) {
  return bracket(interlacement_graph(code), engine, stats, oracle_limit);
}

}  // namespace mgb
