#pragma once

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "foliaquant/model_file.hpp"
#include "foliaquant/parser.hpp"
#include "foliaquant/sampling.hpp"

namespace fq::test {

inline ChartPtr chart3() { return make_chart({"s"}, {"q", "p"}); }
inline ChartPtr chart5() { return make_chart({"s1", "s2"}, {"q1", "q2", "p1", "p2"}); }

/// Parses over the chart's coordinates plus the parameter eps.
inline Complex C(const std::string& text, const ChartPtr& chart) {
  std::set<std::string> symbols{"eps"};
  for (const auto& n : chart->all()) symbols.insert(n);
  return ExpressionParser(symbols).parse_complex(text);
}

inline Expr R(const std::string& text, const ChartPtr& chart) { return C(text, chart).re; }
inline Expr R(const std::string& text) { return R(text, chart3()); }

inline bool zero(const Expr& e) { return is_zero(e) == Truth::holds; }
inline bool zero(const Complex& e) { return is_zero(e) == Truth::holds; }
template <class F, class S>
bool zero(const Graded<F, S>& g) {
  return is_zero(g) == Truth::holds;
}

inline bool zero(const FirstOrderOperator& f) { return is_zero(f) == Truth::holds; }
inline bool same(const Expr& a, const Expr& b) { return zero(a - b); }
inline bool same(const Complex& a, const Complex& b) { return zero(a - b); }

inline ModelSpec load(const std::string& name) { return load_model_file(std::string(FQ_MODELS_DIR) + "/" + name + ".yaml"); }
inline QuantumModel model(const std::string& name) { return build_quantum_model(load(name)); }

/// Random point with coordinates in [-2, 2], for floating-point oracles.
struct PointSampler {
  std::mt19937_64 rng;
  explicit PointSampler(std::uint64_t seed) : rng(seed) {}
  NumericPoint operator()(const std::vector<std::string>& names) {
    std::uniform_real_distribution<long double> d(-2.0L, 2.0L);
    NumericPoint p;
    for (const auto& n : names) p[n] = d(rng);
    p["eps"] = d(rng);
    return p;
  }
};

inline long double value(const Expr& e, const NumericPoint& p) {
  auto v = evaluate(e, p);
  return v ? *v : std::nanl("");
}

inline bool close(long double a, long double b, long double tol = 1e-9L) {
  return std::fabs(a - b) <= tol * (1.0L + std::fabs(a) + std::fabs(b));
}

}  // namespace fq::test
