#include "foliaquant/expr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "foliaquant/errors.hpp"

namespace fq {

namespace {

int sign_of(int c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

int compare_rational(const mpq_class& a, const mpq_class& b) { return sign_of(cmp(a, b)); }

}  // namespace

// ---------------------------------------------------------------- Atom

Atom Atom::symbol(std::string name) {
  Atom a;
  a.kind_ = AtomKind::symbol;
  a.name_ = std::move(name);
  return a;
}

Atom Atom::function(AtomKind kind, const Expr& arg) {
  Atom a;
  a.kind_ = kind;
  a.arg_ = std::make_shared<const Expr>(arg);
  return a;
}

const Expr& Atom::arg() const { return *arg_; }

int Atom::compare(const Atom& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_ ? -1 : 1;
  if (kind_ == AtomKind::symbol) return sign_of(name_.compare(other.name_));
  if (arg_ == other.arg_) return 0;
  return arg_->compare(*other.arg_);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Atom atom, int exponent) {
  if (exponent != 0) factors_.emplace_back(std::move(atom), exponent);
}

int Monomial::exponent(const Atom& atom) const {
  for (const auto& [a, e] : factors_) {
    if (a == atom) return e;
  }
  return 0;
}

bool Monomial::is_nonnegative() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second > 0; });
}

bool Monomial::has_functions() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return !f.first.is_symbol(); });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& f : r.factors_) f.second = -f.second;
  return r;
}

Monomial Monomial::with_exponent(const Atom& atom, int exponent) const {
  Monomial r;
  bool placed = false;
  for (const auto& f : factors_) {
    int c = f.first.compare(atom);
    if (!placed && c >= 0) {
      placed = true;
      if (exponent != 0) r.factors_.emplace_back(atom, exponent);
      if (c == 0) continue;
    }
    r.factors_.push_back(f);
  }
  if (!placed && exponent != 0) r.factors_.emplace_back(atom, exponent);
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      if (i->second < 0) r.factors_.push_back(*i);
      ++i;
    } else if (i == a.factors_.end() || j->first < i->first) {
      if (j->second < 0) r.factors_.push_back(*j);
      ++j;
    } else {
      int e = std::min(i->second, j->second);
      if (e != 0) r.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

int Monomial::compare(const Monomial& other) const {
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (true) {
    bool a_done = i == factors_.end();
    bool b_done = j == other.factors_.end();
    if (a_done && b_done) return 0;
    if (b_done || (!a_done && i->first < j->first)) return i->second > 0 ? 1 : -1;
    if (a_done || j->first < i->first) return j->second > 0 ? -1 : 1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i;
    ++j;
  }
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const mpq_class& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Poly::Poly(Monomial mono, const mpq_class& coeff) {
  if (coeff != 0) terms_.push_back({std::move(mono), coeff});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono.compare(b.mono) > 0; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool Poly::has_functions() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.has_functions(); });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& other) const {
  Poly r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    int c = 0;
    if (i == terms_.end()) {
      c = -1;
    } else if (j == other.terms_.end()) {
      c = 1;
    } else {
      c = i->mono.compare(j->mono);
    }
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      mpq_class s = i->coeff + j->coeff;
      if (s != 0) r.terms_.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return {};
  if (other.is_constant()) return scaled(other.terms_.front().coeff);
  if (is_constant()) return other.scaled(terms_.front().coeff);
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(mpq_class(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (std::size_t k = 1; k < terms_.size(); ++k) m = Monomial::min(m, terms_[k].mono);
  return m;
}

int Poly::compare(const Poly& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = terms_[k].mono.compare(other.terms_[k].mono);
    if (c != 0) return c;
    c = compare_rational(terms_[k].coeff, other.terms_[k].coeff);
    if (c != 0) return c;
  }
  if (terms_.size() == other.terms_.size()) return 0;
  return terms_.size() < other.terms_.size() ? -1 : 1;
}

std::optional<Poly> Poly::divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (f.is_zero()) return Poly{};
  if (g.is_monomial()) {
    Poly r = f.times(g.lead().mono.inverse());
    return r.scaled(1 / g.lead().coeff);
  }
  // Shift both to ordinary polynomials without monomial content, divide by
  // leading terms under lex order, shift back.
  const Monomial mf = f.min_exponents();
  const Monomial mg = g.min_exponents();
  const Poly gs = g.times(mg.inverse());
  Poly r = f.times(mf.inverse());
  const Term& lg = gs.lead();
  const Monomial lg_inv = lg.mono.inverse();
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    Monomial m = lr.mono * lg_inv;
    if (!m.is_nonnegative() && !m.is_one()) return std::nullopt;
    mpq_class c = lr.coeff / lg.coeff;
    Poly t(m, c);
    r = r - gs * t;
    quotient.push_back({std::move(m), std::move(c)});
  }
  return from_terms(std::move(quotient)).times(mf * mg.inverse());
}

// ---------------------------------------------------------------- Expr

namespace {

using FactorList = std::vector<Expr::Factor>;

void sort_factors(FactorList& den) {
  std::sort(den.begin(), den.end(),
            [](const Expr::Factor& a, const Expr::Factor& b) { return a.poly.compare(b.poly) < 0; });
}

// Adds p^m to a factor list, scaling `num` by the monomial and rational
// content pulled out of p. Factors are kept monic, content free, and split
// against each other whenever one divides another.
void absorb_factor(Poly p, int m, FactorList& den, Poly& num) {
  if (m == 0) return;
  const Monomial content = p.min_exponents();
  if (!content.is_one()) {
    p = p.times(content.inverse());
    Monomial scale;
    for (const auto& [atom, e] : content.factors()) scale = scale.with_exponent(atom, -e * m);
    num = num.times(scale);
  }
  const mpq_class lc = p.lead().coeff;
  if (lc != 1) {
    p = p.scaled(1 / lc);
    mpq_class s = 1;
    for (int k = 0; k < m; ++k) s /= lc;
    num = num.scaled(s);
  }
  if (p.is_constant()) return;

  for (auto& f : den) {
    while (!p.is_constant()) {
      auto q = Poly::divide_exact(p, f.poly);
      if (!q) break;
      f.multiplicity += m;
      p = std::move(*q);
    }
    if (p.is_constant()) break;
  }
  if (p.is_constant()) return;

  for (std::size_t k = 0; k < den.size(); ++k) {
    auto q = Poly::divide_exact(den[k].poly, p);
    if (q && !q->is_constant()) {
      int mult = den[k].multiplicity;
      den[k].poly = p;
      den[k].multiplicity = mult + m;
      absorb_factor(std::move(*q), mult, den, num);
      sort_factors(den);
      return;
    }
  }
  den.push_back({std::move(p), m});
  sort_factors(den);
}

Poly expand(const FactorList& den) {
  Poly r(mpq_class(1));
  for (const auto& f : den) r = r * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

}  // namespace

Expr::Expr(int value) : num_(mpq_class(value)) {}
Expr::Expr(long value) : num_(mpq_class(value)) {}
Expr::Expr(const mpq_class& value) : num_(value) {}
Expr::Expr(Poly numerator) : num_(std::move(numerator)) {}

Expr Expr::symbol(std::string name) { return Expr(Poly(Monomial(Atom::symbol(std::move(name))), 1)); }

Expr Expr::rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZeroError("rational with zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Expr(q);
}

Expr Expr::from_parts(Poly num, std::vector<Factor> den) {
  Expr e;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.normalize();
  return e;
}

void Expr::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.multiplicity > 0) {
      auto q = Poly::divide_exact(num_, f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.multiplicity;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.multiplicity == 0; });
}

bool Expr::is_constant() const noexcept { return den_.empty() && num_.is_constant(); }

std::optional<mpq_class> Expr::as_rational() const {
  if (!is_constant()) return std::nullopt;
  if (num_.is_zero()) return mpq_class(0);
  return num_.lead().coeff;
}

bool Expr::has_functions() const {
  if (num_.has_functions()) return true;
  return std::any_of(den_.begin(), den_.end(), [](const Factor& f) { return f.poly.has_functions(); });
}

namespace {

void collect_symbols(const Poly& p, std::set<std::string>& out) {
  for (const auto& t : p.terms()) {
    for (const auto& [atom, e] : t.mono.factors()) {
      if (atom.is_symbol()) {
        out.insert(atom.name());
      } else {
        auto inner = atom.arg().free_symbols();
        out.insert(inner.begin(), inner.end());
      }
    }
  }
}

bool poly_depends_on(const Poly& p, std::string_view symbol) {
  for (const auto& t : p.terms()) {
    for (const auto& [atom, e] : t.mono.factors()) {
      if (atom.is_symbol() ? atom.name() == symbol : atom.arg().depends_on(symbol)) return true;
    }
  }
  return false;
}

}  // namespace

std::set<std::string> Expr::free_symbols() const {
  std::set<std::string> out;
  collect_symbols(num_, out);
  for (const auto& f : den_) collect_symbols(f.poly, out);
  return out;
}

bool Expr::depends_on(std::string_view symbol) const {
  if (poly_depends_on(num_, symbol)) return true;
  return std::any_of(den_.begin(), den_.end(),
                     [&](const Factor& f) { return poly_depends_on(f.poly, symbol); });
}

Expr Expr::operator-() const {
  Expr r = *this;
  r.num_ = -r.num_;
  return r;
}

Expr& Expr::operator+=(const Expr& other) {
  if (other.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = other;
  bool same_den = den_.size() == other.den_.size();
  for (std::size_t k = 0; same_den && k < den_.size(); ++k) {
    same_den = den_[k].multiplicity == other.den_[k].multiplicity && den_[k].poly == other.den_[k].poly;
  }
  if (same_den) {
    num_ = num_ + other.num_;
    normalize();
    return *this;
  }
  // Common denominator: the union of factors at maximal multiplicity.
  FactorList lcm = den_;
  for (const auto& f : other.den_) {
    auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Factor& g) { return g.poly == f.poly; });
    if (it == lcm.end()) {
      lcm.push_back(f);
    } else {
      it->multiplicity = std::max(it->multiplicity, f.multiplicity);
    }
  }
  sort_factors(lcm);
  auto lift = [&](const Poly& num, const FactorList& den) {
    Poly r = num;
    for (const auto& f : lcm) {
      int have = 0;
      for (const auto& g : den) {
        if (g.poly == f.poly) have = g.multiplicity;
      }
      if (f.multiplicity > have) r = r * f.poly.pow(static_cast<unsigned>(f.multiplicity - have));
    }
    return r;
  };
  Poly n = lift(num_, den_) + lift(other.num_, other.den_);
  *this = from_parts(std::move(n), std::move(lcm));
  return *this;
}

Expr& Expr::operator-=(const Expr& other) { return *this += -other; }

Expr& Expr::operator*=(const Expr& other) {
  if (num_.is_zero()) return *this;
  if (other.num_.is_zero()) return *this = Expr{};
  Poly n = num_ * other.num_;
  FactorList den = den_;
  for (const auto& f : other.den_) {
    auto it = std::find_if(den.begin(), den.end(), [&](const Factor& g) { return g.poly == f.poly; });
    if (it != den.end()) {
      it->multiplicity += f.multiplicity;
    } else {
      absorb_factor(f.poly, f.multiplicity, den, n);
    }
  }
  *this = from_parts(std::move(n), std::move(den));
  return *this;
}

Expr& Expr::operator/=(const Expr& other) { return *this *= other.inverse(); }

Expr Expr::inverse() const {
  if (num_.is_zero()) throw DivisionByZeroError("division by zero expression");
  Poly n = expand(den_);
  FactorList den;
  absorb_factor(num_, 1, den, n);
  return from_parts(std::move(n), std::move(den));
}

int Expr::compare(const Expr& other) const {
  int c = num_.compare(other.num_);
  if (c != 0) return c;
  std::size_t n = std::min(den_.size(), other.den_.size());
  for (std::size_t k = 0; k < n; ++k) {
    c = den_[k].poly.compare(other.den_[k].poly);
    if (c != 0) return c;
    if (den_[k].multiplicity != other.den_[k].multiplicity) {
      return den_[k].multiplicity < other.den_[k].multiplicity ? -1 : 1;
    }
  }
  if (den_.size() == other.den_.size()) return 0;
  return den_.size() < other.den_.size() ? -1 : 1;
}

Expr pow(const Expr& base, int exponent) {
  if (exponent == 0) return Expr(1);
  if (exponent < 0) return pow(base.inverse(), -exponent);
  if (base.num_.is_zero()) return base;
  Expr r;
  r.num_ = base.num_.pow(static_cast<unsigned>(exponent));
  r.den_ = base.den_;
  for (auto& f : r.den_) f.multiplicity *= exponent;
  r.normalize();
  return r;
}

Expr make_function(AtomKind kind, const Expr& arg) {
  if (kind == AtomKind::symbol) throw DomainError("make_function called with symbol kind");
  if (arg.is_structurally_zero()) return kind == AtomKind::sin ? Expr(0) : Expr(1);
  // sin and cos have definite parity: normalize the argument sign.
  if ((kind == AtomKind::sin || kind == AtomKind::cos) && arg.numerator().lead().coeff < 0) {
    Expr f = make_function(kind, -arg);
    return kind == AtomKind::sin ? -f : f;
  }
  return Expr(Poly(Monomial(Atom::function(kind, arg)), 1));
}

Expr sin(const Expr& arg) { return make_function(AtomKind::sin, arg); }
Expr cos(const Expr& arg) { return make_function(AtomKind::cos, arg); }
Expr exp(const Expr& arg) { return make_function(AtomKind::exp, arg); }

// ---------------------------------------------------------------- calculus

namespace {

Expr diff_poly(const Poly& p, std::string_view x) {
  std::vector<Poly::Term> poly_part;
  Expr other;
  for (const auto& t : p.terms()) {
    for (const auto& [atom, k] : t.mono.factors()) {
      if (atom.is_symbol()) {
        if (atom.name() == x) poly_part.push_back({t.mono.with_exponent(atom, k - 1), t.coeff * k});
        continue;
      }
      Expr inner = diff(atom.arg(), x);
      if (inner.is_structurally_zero()) continue;
      Expr outer;
      switch (atom.kind()) {
        case AtomKind::sin:
          outer = cos(atom.arg());
          break;
        case AtomKind::cos:
          outer = -sin(atom.arg());
          break;
        default:
          outer = exp(atom.arg());
          break;
      }
      other += Expr(Poly(t.mono.with_exponent(atom, k - 1), t.coeff * k)) * outer * inner;
    }
  }
  return Expr(Poly::from_terms(std::move(poly_part))) + other;
}

}  // namespace

Expr diff(const Expr& e, std::string_view x) {
  if (!e.depends_on(x)) return Expr{};
  Expr dnum = diff_poly(e.num_, x);
  if (e.den_.empty()) return dnum;
  Expr base = Expr::from_parts(Poly(mpq_class(1)), e.den_);
  Expr log_derivative;
  for (const auto& f : e.den_) {
    Expr df = diff_poly(f.poly, x);
    if (df.is_structurally_zero()) continue;
    Expr inv_f = Expr::from_parts(Poly(mpq_class(1)), {{f.poly, 1}});
    log_derivative += Expr(-f.multiplicity) * df * inv_f;
  }
  return dnum * base + Expr(e.num_) * base * log_derivative;
}

namespace {

Expr substitute_poly(const Poly& p, const Bindings& bindings) {
  Expr result;
  std::vector<Poly::Term> untouched;
  for (const auto& t : p.terms()) {
    Expr term(t.coeff);
    Monomial kept;
    bool changed = false;
    for (const auto& [atom, k] : t.mono.factors()) {
      if (atom.is_symbol()) {
        auto it = bindings.find(atom.name());
        if (it == bindings.end()) {
          kept = kept * Monomial(atom, k);
        } else {
          term *= pow(it->second, k);
          changed = true;
        }
      } else {
        Expr arg = substitute(atom.arg(), bindings);
        if (arg == atom.arg()) {
          kept = kept * Monomial(atom, k);
        } else {
          term *= pow(make_function(atom.kind(), arg), k);
          changed = true;
        }
      }
    }
    if (changed) {
      result += term * Expr(Poly(kept, 1));
    } else {
      untouched.push_back(t);
    }
  }
  return result + Expr(Poly::from_terms(std::move(untouched)));
}

bool poly_touches(const Poly& p, const Bindings& b) {
  for (const auto& t : p.terms()) {
    for (const auto& [atom, e] : t.mono.factors()) {
      if (atom.is_symbol()) {
        if (b.contains(atom.name())) return true;
      } else {
        for (const auto& s : atom.arg().free_symbols()) {
          if (b.contains(s)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  bool touched = poly_touches(e.numerator(), bindings);
  for (const auto& f : e.denominator()) touched = touched || poly_touches(f.poly, bindings);
  if (!touched) return e;
  Expr r = substitute_poly(e.numerator(), bindings);
  for (const auto& f : e.denominator()) {
    Expr d = substitute_poly(f.poly, bindings);
    if (d.is_structurally_zero()) throw DivisionByZeroError("substitution hits a pole of " + e.str());
    r *= pow(d, -f.multiplicity);
  }
  return r;
}

// ---------------------------------------------------------------- numerics

namespace {

std::optional<long double> evaluate_atom(const Atom& atom, const NumericPoint& point) {
  if (atom.is_symbol()) {
    auto it = point.find(atom.name());
    if (it != point.end()) return it->second;
    if (atom.name() == "pi") return std::numbers::pi_v<long double>;
    return std::nullopt;
  }
  auto x = evaluate(atom.arg(), point);
  if (!x) return std::nullopt;
  switch (atom.kind()) {
    case AtomKind::sin:
      return std::sin(*x);
    case AtomKind::cos:
      return std::cos(*x);
    default:
      return std::exp(*x);
  }
}

}  // namespace

std::optional<std::pair<long double, long double>> evaluate_with_scale(const Poly& p,
                                                                       const NumericPoint& point) {
  long double value = 0;
  long double scale = 0;
  for (const auto& t : p.terms()) {
    long double term = t.coeff.get_d();
    for (const auto& [atom, e] : t.mono.factors()) {
      auto a = evaluate_atom(atom, point);
      if (!a) return std::nullopt;
      if (*a == 0 && e < 0) return std::nullopt;
      term *= std::pow(*a, static_cast<long double>(e));
    }
    if (!std::isfinite(term)) return std::nullopt;
    value += term;
    scale += std::fabs(term);
  }
  return std::make_pair(value, scale);
}

std::optional<long double> evaluate(const Expr& e, const NumericPoint& point) {
  auto n = evaluate_with_scale(e.numerator(), point);
  if (!n) return std::nullopt;
  long double value = n->first;
  for (const auto& f : e.denominator()) {
    auto d = evaluate_with_scale(f.poly, point);
    if (!d) return std::nullopt;
    if (std::fabs(d->first) <= 1e-14L * std::max(d->second, 1e-300L)) return std::nullopt;
    value /= std::pow(d->first, static_cast<long double>(f.multiplicity));
  }
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

// ---------------------------------------------------------------- printing

std::string to_string(const mpq_class& q) { return q.get_str(); }

namespace {

std::string atom_str(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::symbol:
      return a.name();
    case AtomKind::sin:
      return "sin(" + a.arg().str() + ")";
    case AtomKind::cos:
      return "cos(" + a.arg().str() + ")";
    default:
      return "exp(" + a.arg().str() + ")";
  }
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& [atom, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += atom_str(atom);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string term_str(const Poly::Term& t) {
  if (t.mono.is_one()) return to_string(t.coeff);
  std::string m = monomial_str(t.mono);
  if (t.coeff == 1) return m;
  if (t.coeff == -1) return "-" + m;
  return to_string(t.coeff) + "*" + m;
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    std::string ts = term_str(t);
    if (s.empty()) {
      s = ts;
    } else if (ts.front() == '-') {
      s += " - " + ts.substr(1);
    } else {
      s += " + " + ts;
    }
  }
  return s;
}

}  // namespace

std::string Expr::str() const {
  std::string n = poly_str(num_);
  if (den_.empty()) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d;
  for (const auto& f : den_) {
    if (!d.empty()) d += "*";
    d += "(" + poly_str(f.poly) + ")";
    if (f.multiplicity != 1) d += "^" + std::to_string(f.multiplicity);
  }
  if (den_.size() == 1) return n + "/" + d;
  return n + "/(" + d + ")";
}

}  // namespace fq
