#pragma once

// Exact real scalar expressions: rational functions with rational
// coefficients over atoms, where an atom is a symbol (coordinate or
// parameter) or one of sin/cos/exp applied to an expression.
//
// Canonical form: a Laurent polynomial numerator over a list of monic,
// content-free polynomial denominator factors with multiplicities. A
// numerator that is divisible by a denominator factor is always reduced, so
// the numerator vanishes as a polynomial iff the expression is zero.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fq {

class Expr;

enum class AtomKind : std::uint8_t { symbol = 0, sin = 1, cos = 2, exp = 3 };

class Atom {
 public:
  static Atom symbol(std::string name);
  static Atom function(AtomKind kind, const Expr& arg);

  AtomKind kind() const noexcept { return kind_; }
  bool is_symbol() const noexcept { return kind_ == AtomKind::symbol; }
  const std::string& name() const noexcept { return name_; }
  const Expr& arg() const;

  int compare(const Atom& other) const;
  friend bool operator==(const Atom& a, const Atom& b) { return a.compare(b) == 0; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.compare(b) < 0; }

 private:
  AtomKind kind_ = AtomKind::symbol;
  std::string name_;
  std::shared_ptr<const Expr> arg_;
};

/// Product of atoms with integer (possibly negative) exponents, kept sorted by
/// atom. Ordered lexicographically with the smallest atom most significant.
class Monomial {
 public:
  using Factor = std::pair<Atom, int>;

  Monomial() = default;
  explicit Monomial(Atom atom, int exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  int exponent(const Atom& atom) const;
  bool is_nonnegative() const;
  bool has_functions() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial with_exponent(const Atom& atom, int exponent) const;

  /// Elementwise minimum of exponents, absent atoms counting as zero.
  static Monomial min(const Monomial& a, const Monomial& b);

  int compare(const Monomial& other) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.compare(b) == 0; }

 private:
  std::vector<Factor> factors_;
};

/// Sparse Laurent polynomial over Q, terms sorted descending (leading first).
class Poly {
 public:
  struct Term {
    Monomial mono;
    mpq_class coeff;
  };

  Poly() = default;
  explicit Poly(const mpq_class& constant);
  Poly(Monomial mono, const mpq_class& coeff);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool has_functions() const;
  const Term& lead() const { return terms_.front(); }

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const mpq_class& c) const;
  Poly times(const Monomial& m) const;
  Poly pow(unsigned n) const;

  Monomial min_exponents() const;

  int compare(const Poly& other) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.compare(b) == 0; }

  /// f / g when g divides f in the Laurent ring, otherwise nullopt.
  static std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

  static Poly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

class Expr {
 public:
  struct Factor {
    Poly poly;
    int multiplicity;
  };

  Expr() = default;
  Expr(int value);  // NOLINT(google-explicit-constructor)
  Expr(long value);  // NOLINT(google-explicit-constructor)
  Expr(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  explicit Expr(Poly numerator);

  static Expr symbol(std::string name);
  static Expr rational(long numerator, long denominator);

  const Poly& numerator() const noexcept { return num_; }
  const std::vector<Factor>& denominator() const noexcept { return den_; }

  /// Canonical zero. Sound and complete for rational expressions; for
  /// expressions with transcendental atoms see is_zero() in zero_test.hpp.
  bool is_structurally_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept;
  std::optional<mpq_class> as_rational() const;
  bool has_functions() const;
  std::set<std::string> free_symbols() const;
  bool depends_on(std::string_view symbol) const;

  Expr operator-() const;
  Expr& operator+=(const Expr& other);
  Expr& operator-=(const Expr& other);
  Expr& operator*=(const Expr& other);
  Expr& operator/=(const Expr& other);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  friend Expr operator/(Expr a, const Expr& b) { return a /= b; }

  Expr inverse() const;

  int compare(const Expr& other) const;
  friend bool operator==(const Expr& a, const Expr& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Expr& a, const Expr& b) { return a.compare(b) != 0; }

  std::string str() const;

 private:
  static Expr from_parts(Poly num, std::vector<Factor> den);
  void normalize();

  Poly num_;
  std::vector<Factor> den_;

  friend Expr pow(const Expr& base, int exponent);
  friend Expr diff(const Expr& e, std::string_view symbol);
  friend Expr make_function(AtomKind kind, const Expr& arg);
};

Expr pow(const Expr& base, int exponent);
Expr sin(const Expr& arg);
Expr cos(const Expr& arg);
Expr exp(const Expr& arg);
Expr make_function(AtomKind kind, const Expr& arg);

/// Exact partial derivative with respect to a symbol.
Expr diff(const Expr& e, std::string_view symbol);

using Bindings = std::map<std::string, Expr, std::less<>>;

/// Simultaneous substitution of symbols, followed by canonicalization.
/// Throws DivisionByZeroError when a denominator factor becomes zero.
Expr substitute(const Expr& e, const Bindings& bindings);

using NumericPoint = std::map<std::string, long double, std::less<>>;

/// Floating-point value at a point; nullopt at a pole or non-finite value.
/// The symbol "pi" evaluates to the circle constant unless bound.
std::optional<long double> evaluate(const Expr& e, const NumericPoint& point);

/// Value of a polynomial together with the sum of the absolute values of its
/// terms, used as the cancellation scale by the randomized zero test.
std::optional<std::pair<long double, long double>> evaluate_with_scale(const Poly& p,
                                                                       const NumericPoint& point);

std::string to_string(const mpq_class& q);

}  // namespace fq
