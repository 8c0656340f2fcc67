#include "mgb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mgb {

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VarSym::VarSym(std::string name) : name_(std::move(name)) {
  if (!is_valid_var_name(name_)) {
    throw std::invalid_argument("invalid variable name '" + name_ + "'");
  }
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::string_view name, int exponent) {
  if (!is_valid_var_name(name)) {
    throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
  }
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(std::string(name), exponent);
  return m;
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [var, e] : factors_) {
    if (var == name) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != name) out.factors_.push_back(f);
  }
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  return std::all_of(other.factors_.begin(), other.factors_.end(),
                     [&](const Factor& f) { return exponent(f.first) >= f.second; });
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      return fa[i].second > 0;
    }
    if (i == fa.size() || fb[j].first < fa[i].first) {
      return fb[j].second < 0;
    }
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

// -------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

LaurentPoly::LaurentPoly(Integer coefficient, Monomial monomial) {
  if (coefficient != 0) terms_.emplace(std::move(monomial), std::move(coefficient));
}

LaurentPoly LaurentPoly::var(std::string_view name, int exponent) {
  return LaurentPoly(Integer(1), Monomial::var(name, exponent));
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Integer& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::set<std::string> LaurentPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

int LaurentPoly::min_exponent(std::string_view name) const {
  if (terms_.empty()) return 0;
  int lo = terms_.begin()->first.exponent(name);
  for (const auto& [m, c] : terms_) lo = std::min(lo, m.exponent(name));
  return lo;
}

int LaurentPoly::max_exponent(std::string_view name) const {
  if (terms_.empty()) return 0;
  int hi = terms_.begin()->first.exponent(name);
  for (const auto& [m, c] : terms_) hi = std::max(hi, m.exponent(name));
  return hi;
}

void LaurentPoly::add_term(const Integer& coefficient, const Monomial& monomial) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Integer product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(product.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(product, ma * mb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
  return out;
}

// ---------------------------------------------------------- substitution

LaurentPoly substitute(const LaurentPoly& p, const VarSym& var,
                       const LaurentPoly& value) {
  const std::string& name = var.name();
  std::map<int, LaurentPoly> powers;
  auto power_of = [&](int e) -> const LaurentPoly& {
    auto it = powers.find(e);
    if (it != powers.end()) return it->second;
    LaurentPoly v;
    if (e >= 0) {
      v = value.pow(static_cast<unsigned>(e));
    } else {
      if (!value.is_unit_monomial()) {
        throw NonInvertibleSubstitution("cannot substitute non-unit value '" +
                                        to_string(value) + "' for " + name +
                                        " appearing with exponent " + std::to_string(e));
      }
      const auto& [m, c] = *value.terms().begin();
      v = LaurentPoly(c, m.inverse()).pow(static_cast<unsigned>(-e));
    }
    return powers.emplace(e, std::move(v)).first->second;
  };

  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(name);
    if (e == 0) {
      out.add_term(c, m);
      continue;
    }
    out += LaurentPoly(c, m.without(name)) * power_of(e);
  }
  return out;
}

// ---------------------------------------------------------------- division

namespace {

// Monomial whose exponent for each variable is the minimum over all terms
// (a variable missing from a term counts as exponent 0).
Monomial min_monomial(const LaurentPoly& p) {
  Monomial out;
  for (const auto& name : p.variables()) {
    int lo = p.min_exponent(name);
    if (lo != 0) out = out * Monomial::var(name, lo);
  }
  return out;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};

  const Monomial p_shift = min_monomial(p);
  const Monomial q_shift = min_monomial(q);
  LaurentPoly remainder = p.shifted(p_shift.inverse());
  const LaurentPoly divisor = q.shifted(q_shift.inverse());
  const auto& [lead_m, lead_c] = *divisor.terms().begin();
  const Monomial lead_inv = lead_m.inverse();

  LaurentPoly quotient;
  Integer c;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().begin();
    if (!rm.divisible_by(lead_m) || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      throw NotDivisible("'" + to_string(p) + "' is not divisible by '" + to_string(q) + "'");
    }
    mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    LaurentPoly step(c, rm * lead_inv);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient.shifted(p_shift * q_shift.inverse());
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [var, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

std::string format_poly(const LaurentPoly& p, bool spaced) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else if (spaced) {
      out += negative ? " - " : " + ";
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    Integer magnitude = abs(c);
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) { return format_poly(p, true); }
std::string to_compact_string(const LaurentPoly& p) { return format_poly(p, false); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  LaurentPoly expression() {
    skip_space();
    LaurentPoly total;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = text_[pos_++] == '-';
    }
    LaurentPoly t = term();
    total = negative ? -t : t;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      LaurentPoly next = term();
      if (c == '+') {
        total += next;
      } else {
        total -= next;
      }
    }
    return total;
  }

  LaurentPoly term() {
    LaurentPoly value = factor();
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        value *= factor();
      } else if (starts_primary(c)) {
        value *= factor();
      } else {
        break;
      }
    }
    return value;
  }

  LaurentPoly factor() {
    LaurentPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (!base.is_unit_monomial()) fail("negative exponent on a non-unit expression");
    const auto& [m, c] = *base.terms().begin();
    return LaurentPoly(c, m.inverse()).pow(static_cast<unsigned>(e));
  }

  LaurentPoly primary() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return LaurentPoly::var(text_.substr(start, pos_ - start));
    }
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(pos_ == text_.size() ? std::string("unexpected end of input")
                              : "unexpected character '" + std::string(1, c) + "'");
  }

  static bool starts_primary(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw PolyParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace mgb
