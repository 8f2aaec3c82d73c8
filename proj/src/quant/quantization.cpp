#include "foliaquant/quantization.hpp"

namespace fq {

FirstOrderOperator FirstOrderOperator::multiplication(ChartPtr chart, Complex b) {
  FirstOrderOperator f{chart, {}, std::move(b)};
  f.a.assign(chart->leaf_dim(), Complex());
  return f;
}

FirstOrderOperator FirstOrderOperator::scaled(const Complex& c) const {
  FirstOrderOperator r = *this;
  for (auto& x : r.a) x *= c;
  r.b *= c;
  return r;
}

std::string FirstOrderOperator::str() const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_structurally_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + a[i].str() + ")*d_" + chart->leaf()[i];
  }
  if (!b.is_structurally_zero() || s.empty()) {
    if (!s.empty()) s += " + ";
    s += "(" + b.str() + ")";
  }
  return s;
}

FirstOrderOperator operator-(const FirstOrderOperator& f, const FirstOrderOperator& g) {
  FirstOrderOperator r = f;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= g.a.at(i);
  r.b -= g.b;
  return r;
}

Truth is_zero(const FirstOrderOperator& f, const ZeroTestOptions& options) {
  Truth t = is_zero(f.b, options);
  for (const auto& x : f.a) t = t && is_zero(x, options);
  return t;
}

std::vector<MultivectorField> reduce_generators(const std::vector<MultivectorField>& generators,
                                                const ZeroTestOptions& options) {
  std::vector<MultivectorField> basis;
  std::optional<MultivectorField> top;
  for (const auto& g : generators) {
    MultivectorField candidate = top ? wedge(*top, g) : g;
    Truth t = is_zero(candidate, options);
    if (t == Truth::inconclusive) throw InconclusiveError("cannot decide independence of polarization generators");
    if (t == Truth::fails) {
      basis.push_back(g);
      top = std::move(candidate);
    }
  }
  return basis;
}

namespace {

MultivectorField top_wedge(const std::vector<MultivectorField>& basis, const ChartPtr& chart) {
  MultivectorField top = MultivectorField::scalar(chart, Expr(1));
  for (const auto& b : basis) top = wedge(top, b);
  return top;
}

Matrix generator_matrix(const std::vector<MultivectorField>& generators) {
  if (generators.empty()) return {};
  const auto& chart = *generators.front().chart();
  Matrix m(generators.size(), chart.dim());
  for (std::size_t r = 0; r < generators.size(); ++r) {
    auto comps = vector_components(generators[r]);
    for (std::size_t c = 0; c < comps.size(); ++c) m(r, c) = comps[c];
  }
  return m;
}

}  // namespace

PolarizationReport verify_polarization(const Polarization& t, const LeafwiseSymplectic& omega,
                                       const ZeroTestOptions& options) {
  PolarizationReport report;
  for (const auto& g : t.generators) {
    if (g.degree() != 1) throw DomainError("polarization generators must be vector fields");
    Truth s = is_subordinate(g, options);
    if (s == Truth::fails) throw DomainError("polarization generator " + g.str() + " has transverse components");
    report.subordinate = report.subordinate && s;
  }
  report.basis = reduce_generators(t.generators, options);
  report.rank = report.basis.size();
  report.lagrangian = 2 * report.rank == omega.chart()->leaf_dim();

  auto numeric = rank_at_random_point(generator_matrix(t.generators), options.seed);
  if (!numeric) {
    report.constant_rank = Truth::inconclusive;
  } else if (*numeric != report.rank) {
    report.constant_rank = Truth::fails;
    report.residual = "rank " + std::to_string(report.rank) + " drops to " + std::to_string(*numeric) +
                      " at a sample point";
  }

  const MultivectorField top = top_wedge(report.basis, omega.chart());
  for (std::size_t a = 0; a < t.generators.size(); ++a) {
    for (std::size_t b = a + 1; b < t.generators.size(); ++b) {
      MultivectorField br = lie_bracket(t.generators[a], t.generators[b]);
      Truth inv = is_zero(wedge(br, top), options);
      if (inv == Truth::fails && report.residual.empty()) report.residual = "bracket outside span: " + br.str();
      report.involutive = report.involutive && inv;
    }
    for (std::size_t b = a; b < t.generators.size(); ++b) {
      Expr value = evaluate_on(omega.form(), {t.generators[a], t.generators[b]});
      Truth iso = is_zero(value, options);
      if (iso == Truth::fails && report.residual.empty()) {
        report.residual = "Omega(" + t.generators[a].str() + ", " + t.generators[b].str() + ") = " + value.str();
      }
      report.isotropic = report.isotropic && iso;
    }
  }
  return report;
}

Truth in_quantum_algebra(const Expr& f, const Polarization& t, const LeafwiseSymplectic& omega,
                         const ZeroTestOptions& options) {
  auto basis = reduce_generators(t.generators, options);
  const MultivectorField top = top_wedge(basis, omega.chart());
  const MultivectorField theta = hamiltonian_field(f, omega);
  Truth result = Truth::holds;
  for (const auto& tau : t.generators) {
    MultivectorField br = lie_bracket(theta, tau);
    result = result && is_subordinate(br, options) && is_zero(wedge(br, top), options);
    if (result == Truth::fails) break;
  }
  return result;
}

Expr divergence(const MultivectorField& v) {
  if (v.degree() != 1) throw DomainError("divergence of a non-vector");
  Expr r;
  const auto& chart = *v.chart();
  for (const auto& [idx, c] : v.components()) r += diff(c, chart.name(idx[0]));
  return r;
}

FirstOrderOperator ks_operator(const Expr& f, const QuantumModel& model) {
  const MultivectorField theta = hamiltonian_field(f, model.omega);
  const auto comps = leaf_components(theta);
  const Complex minus_i(Expr(0), Expr(-1));
  FirstOrderOperator op{model.chart, {}, {}};
  // The bracket: nabla_theta = theta^i d_i - A_i theta^i, then the constant
  // and half-divergence terms, all multiplied by -i.
  Complex inner = Complex(Expr(0), model.epsilon * f) + Complex(Expr::rational(1, 2) * divergence(theta));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    op.a.push_back(minus_i * Complex(comps[i]));
    inner -= model.connection.potentials[i] * Complex(comps[i]);
  }
  op.b = minus_i * inner;
  return op;
}

FirstOrderOperator commutator(const FirstOrderOperator& f, const FirstOrderOperator& g) {
  if (!(*f.chart == *g.chart)) throw DomainError("operators on different charts");
  const auto& leaf = f.chart->leaf();
  auto along = [&](const FirstOrderOperator& x, const Complex& c) {
    Complex r;
    for (std::size_t j = 0; j < leaf.size(); ++j) {
      if (!x.a[j].is_structurally_zero()) r += x.a[j] * diff(c, leaf[j]);
    }
    return r;
  };
  FirstOrderOperator r{f.chart, {}, {}};
  for (std::size_t i = 0; i < leaf.size(); ++i) r.a.push_back(along(f, g.a[i]) - along(g, f.a[i]));
  r.b = along(f, g.b) - along(g, f.b);
  return r;
}

Section apply_operator(const FirstOrderOperator& f, const Section& rho) {
  Section r = f.b * rho;
  const auto& leaf = f.chart->leaf();
  for (std::size_t i = 0; i < leaf.size(); ++i) {
    if (!f.a[i].is_structurally_zero()) r += f.a[i] * diff(rho, leaf[i]);
  }
  return r;
}

DiracResult verify_dirac(const Expr& f, const Expr& g, const QuantumModel& model) {
  DiracResult d;
  d.lhs = commutator(ks_operator(f, model), ks_operator(g, model));
  d.rhs = ks_operator(poisson_bracket(f, g, model.omega), model).scaled(Complex(Expr(0), Expr(-1)));
  d.holds = is_zero(d.lhs - d.rhs, model.zero_test);
  return d;
}

std::vector<MultivectorField> polarization_fields(const QuantumModel& model) {
  if (model.polarization.hamiltonians_of.empty()) return model.polarization.generators;
  std::vector<MultivectorField> out;
  for (const auto& h : model.polarization.hamiltonians_of) out.push_back(hamiltonian_field(h, model.omega));
  return out;
}

std::vector<Complex> polarized_residual(const Section& rho, const QuantumModel& model) {
  std::vector<Complex> out;
  for (const auto& v : polarization_fields(model)) {
    out.push_back(covariant_derivative(model.connection, v, rho) +
                  Complex(Expr::rational(1, 2) * divergence(v)) * rho);
  }
  return out;
}

Truth is_polarized(const Section& rho, const QuantumModel& model) {
  Truth t = Truth::holds;
  for (const auto& r : polarized_residual(rho, model)) t = t && is_zero(r, model.zero_test);
  return t;
}

Truth invariance_check(const Expr& f, const QuantumModel& model, const std::vector<Section>& sections) {
  const FirstOrderOperator op = ks_operator(f, model);
  Truth t = Truth::holds;
  for (const auto& rho : sections) {
    if (is_polarized(rho, model) != Truth::holds) throw DomainError("test section is not polarized: " + rho.str());
    t = t && is_polarized(apply_operator(op, rho), model);
    if (t == Truth::fails) break;
  }
  return t;
}

Truth formally_self_adjoint(const FirstOrderOperator& f, const ZeroTestOptions& options) {
  Truth t = Truth::holds;
  Expr div;
  const auto& leaf = f.chart->leaf();
  for (std::size_t i = 0; i < f.a.size(); ++i) {
    t = t && is_zero(f.a[i].re, options);
    div += diff(f.a[i].im, leaf[i]);
  }
  return t && is_zero(Expr(2) * f.b.im - div, options);
}

QuantumModel restrict_model_to_leaf(const QuantumModel& model, const LeafSlice& slice) {
  const ChartPtr leaf = slice.leaf_chart();
  LeafwiseForm omega_f(leaf, 2);
  const ExteriorForm pulled = pullback_to_leaf(model.omega.form(), slice);
  for (const auto& [idx, c] : pulled.components()) omega_f.add(idx, c);
  LeafwiseSymplectic symplectic(std::move(omega_f), model.zero_test);
  MultivectorField w = bivector_from_omega(symplectic);

  Polarization t;
  for (const auto& g : model.polarization.generators) {
    auto comps = leaf_components(g);
    for (auto& c : comps) c = restrict_to_leaf(c, slice);
    t.generators.push_back(leaf_vector_field(leaf, comps));
  }
  for (const auto& h : model.polarization.hamiltonians_of) t.hamiltonians_of.push_back(restrict_to_leaf(h, slice));

  std::vector<std::pair<std::string, Expr>> observables;
  for (const auto& [name, f] : model.observables) observables.emplace_back(name, restrict_to_leaf(f, slice));

  return QuantumModel{model.name + "@" + slice.str(),
                      leaf,
                      model.parameters,
                      restrict_to_leaf(model.epsilon, slice),
                      std::move(symplectic),
                      std::move(w),
                      pullback_connection_to_leaf(model.connection, slice),
                      std::move(t),
                      std::move(observables),
                      model.zero_test};
}

Truth verify_leaf_commutation(const QuantumModel& model, const Expr& f, const Section& rho, const LeafSlice& slice) {
  QuantumModel leaf = restrict_model_to_leaf(model, slice);
  Section lhs = restrict_to_leaf(apply_operator(ks_operator(f, model), rho), slice);
  Section rhs = apply_operator(ks_operator(restrict_to_leaf(f, slice), leaf), restrict_to_leaf(rho, slice));
  return is_zero(lhs - rhs, model.zero_test);
}

}  // namespace fq
