#pragma once

#include <string>

#include "foliaquant/expr.hpp"

namespace fq {

/// Complex scalar as an exact pair of real expressions. The imaginary unit
/// is structural, so Re and Im are projections rather than simplifications.
struct Complex {
  Expr re;
  Expr im;

  Complex() = default;
  Complex(Expr real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Complex(int value) : re(value) {}  // NOLINT(google-explicit-constructor)
  Complex(Expr real, Expr imag) : re(std::move(real)), im(std::move(imag)) {}

  static Complex i() { return {Expr(0), Expr(1)}; }

  bool is_structurally_zero() const noexcept {
    return re.is_structurally_zero() && im.is_structurally_zero();
  }
  bool is_real() const noexcept { return im.is_structurally_zero(); }

  Complex conj() const { return {re, -im}; }
  /// Multiplication by the imaginary unit.
  Complex times_i() const { return {-im, re}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  /// Printed as "re + i*(im)"; purely real values print as the real part.
  std::string str() const;
};

Complex pow(const Complex& base, int exponent);
Complex diff(const Complex& e, std::string_view symbol);
Complex substitute(const Complex& e, const Bindings& bindings);
/// exp(a + ib) = exp(a)(cos b + i sin b). sin and cos of a non-real
/// argument are outside the expression class and raise DomainError.
Complex exp(const Complex& arg);
Complex sin(const Complex& arg);
Complex cos(const Complex& arg);

}  // namespace fq
