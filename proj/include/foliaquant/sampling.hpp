#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "foliaquant/quantization.hpp"

namespace fq {

/// Seeded source of random test objects. Every randomized check owns one,
/// seeded from the run seed and the check name, so results do not depend on
/// the order in which checks execute.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Sampler(std::uint64_t seed, std::string_view stream);

  int integer(int lo, int hi);
  mpq_class rational(int max_numerator = 5, int max_denominator = 3);
  /// Nonzero rational.
  mpq_class nonzero_rational(int max_numerator = 5, int max_denominator = 3);

  /// Random polynomial with up to `terms` terms of total degree <= max_degree.
  Expr polynomial(const std::vector<std::string>& symbols, unsigned max_degree, unsigned terms = 4);
  Complex complex_polynomial(const std::vector<std::string>& symbols, unsigned max_degree, unsigned terms = 3);

  ExteriorForm exterior_form(const ChartPtr& chart, std::size_t degree, unsigned max_degree = 2);
  LeafwiseForm leafwise_form(const ChartPtr& chart, std::size_t degree, unsigned max_degree = 2);
  MultivectorField multivector(const ChartPtr& chart, std::size_t degree, unsigned max_degree = 2);
  LeafSlice slice(const ChartPtr& chart);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  template <class F>
  Graded<F> graded(const ChartPtr& chart, std::size_t degree, unsigned max_degree);

  std::mt19937_64 rng_;
};

/// Coordinates along which no polarization field has a component; functions
/// of these alone are natural candidates for polarized sections.
std::vector<std::string> section_variables(const QuantumModel& model);

/// Random candidates in the section variables, kept only when every
/// polarized residual vanishes. Returns at most `count` sections after at
/// most 4 * count candidates.
std::vector<Section> random_polarized_sections(const QuantumModel& model, Sampler& sampler, std::size_t count);

/// Random functions affine in the leaf coordinates moved by the polarization,
/// with coefficients in the remaining coordinates, kept when they pass the
/// quantum-algebra membership test.
std::vector<Expr> random_algebra_elements(const QuantumModel& model, Sampler& sampler, std::size_t count);

/// Stable 64-bit hash (FNV-1a) used to derive per-check seeds.
std::uint64_t stable_hash(std::string_view text);

}  // namespace fq
