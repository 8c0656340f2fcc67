#pragma once

// Exact multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. This is the coefficient ring for every bracket value.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mgb {

using Integer = mpz_class;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No exact quotient exists in the Laurent ring.
class NotDivisible : public RingError {
 public:
  using RingError::RingError;
};

/// A negative power of the substituted variable met a non-unit value.
class NonInvertibleSubstitution : public RingError {
 public:
  using RingError::RingError;
};

class PolyParseError : public RingError {
 public:
  PolyParseError(const std::string& what, std::size_t position)
      : RingError(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// True iff `name` matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_var_name(std::string_view name);

/// A variable symbol. Names are compared case-sensitively.
class VarSym {
 public:
  explicit VarSym(std::string name);
  const std::string& name() const { return name_; }
  auto operator<=>(const VarSym&) const = default;

 private:
  std::string name_;
};

/// Product of variables raised to nonzero integer powers, sorted by name.
class Monomial {
 public:
  using Factor = std::pair<std::string, int>;

  Monomial() = default;
  static Monomial var(std::string_view name, int exponent = 1);

  int exponent(std::string_view name) const;
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  /// The monomial with `name` removed.
  Monomial without(std::string_view name) const;
  /// True iff every exponent of `other` is <= the matching exponent here.
  bool divisible_by(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Lexicographic term order: variables are scanned in ascending name order
/// and the first differing exponent decides; the larger exponent precedes.
/// A missing variable has exponent 0.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, TermOrder>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer coefficient, Monomial monomial);

  static LaurentPoly var(std::string_view name, int exponent = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// A single term with coefficient +1 or -1.
  bool is_unit_monomial() const;
  Integer coefficient(const Monomial& m) const;
  std::set<std::string> variables() const;
  int min_exponent(std::string_view name) const;
  int max_exponent(std::string_view name) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Adds coefficient * monomial in place.
  void add_term(const Integer& coefficient, const Monomial& monomial);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned exponent) const;
  /// Multiplies every term by a monomial.
  LaurentPoly shifted(const Monomial& m) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

/// Replaces every occurrence of `var` by `value`.
LaurentPoly substitute(const LaurentPoly& p, const VarSym& var,
                       const LaurentPoly& value);

/// Returns r with r * q == p, or throws NotDivisible.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Canonical text, e.g. "A^2*d + 2*A*B + B^2*d". Zero prints as "0".
std::string to_string(const LaurentPoly& p);
/// Same as to_string without spaces; safe as a single whitespace token.
std::string to_compact_string(const LaurentPoly& p);
std::string to_string(const Monomial& m);

/// Parses integers, identifiers, + - * ^ and parentheses. `*` may be
/// replaced by juxtaposition. Exponents are optionally signed integers.
LaurentPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

namespace vars {
inline LaurentPoly A() { return LaurentPoly::var("A"); }
inline LaurentPoly B() { return LaurentPoly::var("B"); }
inline LaurentPoly d() { return LaurentPoly::var("d"); }
}  // namespace vars

}  // namespace mgb
