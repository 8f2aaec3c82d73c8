#include "foliaquant/sampling.hpp"

#include <algorithm>

namespace fq {

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Sampler::Sampler(std::uint64_t seed, std::string_view stream) : rng_(seed ^ stable_hash(stream)) {}

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

mpq_class Sampler::rational(int max_numerator, int max_denominator) {
  mpq_class q(integer(-max_numerator, max_numerator), integer(1, max_denominator));
  q.canonicalize();
  return q;
}

mpq_class Sampler::nonzero_rational(int max_numerator, int max_denominator) {
  mpq_class q;
  do {
    q = rational(max_numerator, max_denominator);
  } while (q == 0);
  return q;
}

Expr Sampler::polynomial(const std::vector<std::string>& symbols, unsigned max_degree, unsigned terms) {
  Expr p;
  for (unsigned t = 0; t < terms; ++t) {
    Expr m(nonzero_rational());
    auto degree = static_cast<unsigned>(integer(0, static_cast<int>(max_degree)));
    for (unsigned d = 0; d < degree && !symbols.empty(); ++d) {
      m *= Expr::symbol(symbols[static_cast<std::size_t>(integer(0, static_cast<int>(symbols.size()) - 1))]);
    }
    p += m;
  }
  return p;
}

Complex Sampler::complex_polynomial(const std::vector<std::string>& symbols, unsigned max_degree, unsigned terms) {
  return {polynomial(symbols, max_degree, terms), polynomial(symbols, max_degree, terms)};
}

template <class F>
Graded<F> Sampler::graded(const ChartPtr& chart, std::size_t degree, unsigned max_degree) {
  Graded<F> g(chart, degree);
  const std::size_t space = g.space();
  if (degree > space) return g;
  // Fill about half of the increasing tuples, and always at least one.
  std::vector<IndexTuple> tuples;
  IndexTuple idx(degree);
  for (std::size_t k = 0; k < degree; ++k) idx[k] = k;
  while (true) {
    tuples.push_back(idx);
    std::size_t k = degree;
    while (k > 0 && idx[k - 1] == space - degree + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < degree; ++j) idx[j] = idx[j - 1] + 1;
  }
  const auto forced = static_cast<std::size_t>(integer(0, static_cast<int>(tuples.size()) - 1));
  const auto symbols = chart->all();
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (t == forced || integer(0, 1) == 1) g.add(tuples[t], polynomial(symbols, max_degree, 3));
  }
  return g;
}

ExteriorForm Sampler::exterior_form(const ChartPtr& chart, std::size_t degree, unsigned max_degree) {
  return graded<Exterior>(chart, degree, max_degree);
}

LeafwiseForm Sampler::leafwise_form(const ChartPtr& chart, std::size_t degree, unsigned max_degree) {
  return graded<Leafwise>(chart, degree, max_degree);
}

MultivectorField Sampler::multivector(const ChartPtr& chart, std::size_t degree, unsigned max_degree) {
  return graded<Multivector>(chart, degree, max_degree);
}

LeafSlice Sampler::slice(const ChartPtr& chart) {
  Bindings values;
  for (const auto& t : chart->transverse()) values[t] = Expr(rational(4, 2));
  return LeafSlice(chart, std::move(values));
}

std::vector<std::string> section_variables(const QuantumModel& model) {
  const auto fields = polarization_fields(model);
  std::vector<std::string> out;
  for (std::size_t a = 0; a < model.chart->dim(); ++a) {
    bool moved = std::any_of(fields.begin(), fields.end(),
                             [&](const MultivectorField& v) { return !v.get({a}).is_structurally_zero(); });
    if (!moved) out.push_back(model.chart->name(a));
  }
  return out;
}

std::vector<Section> random_polarized_sections(const QuantumModel& model, Sampler& sampler, std::size_t count) {
  const auto vars = section_variables(model);
  std::vector<Section> out;
  for (std::size_t attempt = 0; attempt < 4 * count && out.size() < count; ++attempt) {
    Section rho = sampler.complex_polynomial(vars, 3, 3);
    // Every other candidate carries a transcendental factor.
    if (attempt % 2 == 1 && !vars.empty()) {
      rho *= Complex(exp(Expr::symbol(vars[static_cast<std::size_t>(sampler.integer(0, static_cast<int>(vars.size()) - 1))])));
    }
    if (rho.is_structurally_zero()) continue;
    if (is_polarized(rho, model) == Truth::holds) out.push_back(std::move(rho));
  }
  return out;
}

std::vector<Expr> random_algebra_elements(const QuantumModel& model, Sampler& sampler, std::size_t count) {
  const auto base = section_variables(model);
  std::vector<std::string> moved;
  for (const auto& name : model.chart->all()) {
    if (std::find(base.begin(), base.end(), name) == base.end()) moved.push_back(name);
  }
  std::vector<Expr> out;
  for (std::size_t attempt = 0; attempt < 4 * count && out.size() < count; ++attempt) {
    Expr f = sampler.polynomial(base, 3, 3);
    for (const auto& y : moved) f += sampler.polynomial(base, 2, 2) * Expr::symbol(y);
    if (f.is_constant()) continue;
    if (in_quantum_algebra(f, model.polarization, model.omega, model.zero_test) == Truth::holds) out.push_back(f);
  }
  return out;
}

}  // namespace fq
