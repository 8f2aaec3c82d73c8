#include "foliaquant/zero_test.hpp"

#include <cmath>
#include <random>

#include "foliaquant/errors.hpp"

namespace fq {

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::holds:
      return "holds";
    case Truth::fails:
      return "fails";
    default:
      return "inconclusive";
  }
}

Truth operator&&(Truth a, Truth b) {
  if (a == Truth::fails || b == Truth::fails) return Truth::fails;
  if (a == Truth::inconclusive || b == Truth::inconclusive) return Truth::inconclusive;
  return Truth::holds;
}

Truth is_zero(const Expr& e, const ZeroTestOptions& options) {
  const Poly& num = e.numerator();
  if (num.is_zero()) return Truth::holds;
  if (!num.has_functions()) return Truth::fails;

  std::set<std::string> symbols = e.free_symbols();
  symbols.erase("pi");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 5);

  unsigned zero_points = 0;
  const unsigned budget = options.samples * options.attempts_per_sample;
  for (unsigned attempt = 0; attempt < budget && zero_points < options.samples; ++attempt) {
    NumericPoint point;
    for (const auto& s : symbols) {
      int n = numerator(rng);
      int d = denominator(rng);
      point[s] = static_cast<long double>(n) / d;
    }
    auto value = evaluate_with_scale(num, point);
    if (!value || !std::isfinite(value->first)) continue;
    if (std::fabs(value->first) > options.tolerance * value->second) return Truth::fails;
    ++zero_points;
  }
  return zero_points >= options.samples ? Truth::holds : Truth::inconclusive;
}

Truth is_zero(const Complex& e, const ZeroTestOptions& options) {
  return is_zero(e.re, options) && is_zero(e.im, options);
}

bool is_zero_or_throw(const Expr& e, const ZeroTestOptions& options) {
  Truth t = is_zero(e, options);
  if (t == Truth::inconclusive) throw InconclusiveError("zero test inconclusive for " + e.str());
  return t == Truth::holds;
}

}  // namespace fq
