#include "foliaquant/complex_expr.hpp"

#include "foliaquant/errors.hpp"

namespace fq {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  if (o.is_real()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Expr r = re * o.re - im * o.im;
  Expr m = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(m);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_structurally_zero()) throw DivisionByZeroError("complex division by zero");
  if (o.is_real()) {
    Expr inv = o.re.inverse();
    re *= inv;
    im *= inv;
    return *this;
  }
  Expr norm = o.re * o.re + o.im * o.im;
  *this *= o.conj();
  Expr inv = norm.inverse();
  re *= inv;
  im *= inv;
  return *this;
}

std::string Complex::str() const {
  if (im.is_structurally_zero()) return re.str();
  std::string imag = "i*(" + im.str() + ")";
  if (re.is_structurally_zero()) return imag;
  return "(" + re.str() + ") + " + imag;
}

Complex pow(const Complex& base, int exponent) {
  if (exponent < 0) return pow(Complex(1) / base, -exponent);
  Complex result(1);
  Complex b = base;
  auto n = static_cast<unsigned>(exponent);
  while (n > 0) {
    if (n & 1U) result *= b;
    n >>= 1U;
    if (n > 0) b *= b;
  }
  return result;
}

Complex diff(const Complex& e, std::string_view symbol) {
  return {diff(e.re, symbol), diff(e.im, symbol)};
}

Complex substitute(const Complex& e, const Bindings& bindings) {
  return {substitute(e.re, bindings), substitute(e.im, bindings)};
}

Complex exp(const Complex& arg) {
  Expr modulus = exp(arg.re);
  if (arg.is_real()) return modulus;
  return {modulus * cos(arg.im), modulus * sin(arg.im)};
}

Complex sin(const Complex& arg) {
  if (!arg.is_real()) throw DomainError("sin of a non-real argument");
  return sin(arg.re);
}

Complex cos(const Complex& arg) {
  if (!arg.is_real()) throw DomainError("cos of a non-real argument");
  return cos(arg.re);
}

}  // namespace fq
