#include "foliaquant/checks.hpp"

#include <map>

namespace fq {

std::optional<Command> parse_command(std::string_view name) {
  static const std::map<std::string_view, Command> table{
      {"check-structure", Command::check_structure}, {"check-prequant", Command::check_prequant},
      {"check-polarization", Command::check_polarization}, {"verify-dirac", Command::verify_dirac},
      {"check-leaves", Command::check_leaves},       {"all", Command::all}};
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::check_structure: return "check-structure";
    case Command::check_prequant: return "check-prequant";
    case Command::check_polarization: return "check-polarization";
    case Command::verify_dirac: return "verify-dirac";
    case Command::check_leaves: return "check-leaves";
    case Command::all: return "all";
  }
  return "unknown";
}

CheckContext CheckContext::build(const ModelSpec& spec) {
  CheckContext c;
  c.spec = &spec;
  c.zero_test.samples = spec.options.samples;
  c.zero_test.seed = spec.options.seed;
  if (spec.bivector) c.bivector = *spec.bivector;
  try {
    c.model.emplace(build_quantum_model(spec));
    c.bivector = c.model->bivector;
    c.warnings = c.model->omega.warnings();
  } catch (const InconclusiveError& e) {
    c.build_status = Status::inconclusive;
    c.build_error = e.what();
  } catch (const std::exception& e) {
    c.build_status = Status::fail;
    c.build_error = e.what();
  }
  return c;
}

std::vector<LeafSlice> CheckContext::slices() const {
  if (!spec->leaves.empty()) return spec->leaves;
  std::vector<LeafSlice> out;
  const auto& transverse = spec->chart->transverse();
  if (transverse.empty()) {
    out.emplace_back(spec->chart, Bindings{});
    return out;
  }
  for (int v : {0, 1, -2}) {
    Bindings b;
    for (const auto& t : transverse) b[t] = Expr(v);
    out.emplace_back(spec->chart, std::move(b));
  }
  return out;
}

void CheckOutcome::record(Truth t, const std::function<std::string()>& residual_text) {
  ++cases;
  if (t == Truth::fails && residual.empty()) residual = residual_text();
  truth = truth && t;
}

CheckOutcome CheckOutcome::skip(std::string why) {
  CheckOutcome o;
  o.skipped = true;
  o.detail = std::move(why);
  return o;
}

namespace {

constexpr std::size_t kRandomCases = 8;
constexpr std::size_t kSections = 6;
constexpr std::size_t kAlgebraSample = 6;

const std::string kStructure = "model.structure";
const std::string kConvention = "model.convention";

Truth negate(Truth t) {
  if (t == Truth::holds) return Truth::fails;
  if (t == Truth::fails) return Truth::holds;
  return t;
}

Expr poly(Sampler& s, const ChartPtr& chart, unsigned degree = 2) { return s.polynomial(chart->all(), degree, 3); }
Complex cpoly(Sampler& s, const ChartPtr& chart, unsigned degree = 2) {
  return s.complex_polynomial(chart->all(), degree, 3);
}

MultivectorField leaf_field(Sampler& s, const ChartPtr& chart) {
  std::vector<Expr> comps;
  for (std::size_t i = 0; i < chart->leaf_dim(); ++i) comps.push_back(poly(s, chart));
  return leaf_vector_field(chart, comps);
}

LeafwiseConnection random_leafwise_connection(Sampler& s, const ChartPtr& chart) {
  LeafwiseConnection a{chart, {}};
  for (std::size_t i = 0; i < chart->leaf_dim(); ++i) a.potentials.push_back(cpoly(s, chart));
  return a;
}

Connection random_connection(Sampler& s, const ChartPtr& chart) {
  Connection g{chart, {}, {}};
  for (std::size_t l = 0; l < chart->codim(); ++l) g.transverse.push_back(cpoly(s, chart));
  for (std::size_t i = 0; i < chart->leaf_dim(); ++i) g.leaf.push_back(cpoly(s, chart));
  return g;
}

Splitting random_splitting(Sampler& s, const ChartPtr& chart) {
  std::vector<std::vector<Expr>> b(chart->leaf_dim(), std::vector<Expr>(chart->codim()));
  for (auto& row : b) {
    for (auto& x : row) x = poly(s, chart, 1);
  }
  return Splitting(chart, std::move(b));
}

const QuantumModel& model_of(const CheckContext& c) { return *c.model; }

/// The full connection of the model: as given, or lifted from the leafwise one.
Connection full_connection(const CheckContext& c) {
  if (c.spec->connection) return *c.spec->connection;
  return lift_leafwise_connection(c.model->connection, Connection::zero(c.spec->chart), c.spec->splitting_or_default());
}

std::optional<LeafwiseForm> omega_form(const CheckContext& c) {
  if (c.spec->omega) return *c.spec->omega;
  if (c.model) return c.model->omega.form();
  return std::nullopt;
}

bool has_polarization(const CheckContext& c) { return !c.spec->polarization.generators.empty(); }

CheckDef def(std::string name, std::string identity, std::vector<std::string> requires_,
             std::function<CheckOutcome(const CheckContext&, Sampler&)> run) {
  return CheckDef{std::move(name), std::move(identity), std::move(requires_), std::move(run)};
}

// ---------------------------------------------------------------- prerequisites

void add_prerequisites(std::vector<CheckDef>& out) {
  out.push_back(def(kStructure, "Omega closed and nondegenerate, w subordinate, Omega and w mutually determined", {},
                    [](const CheckContext& c, Sampler&) {
                      CheckOutcome o;
                      o.cases = 1;
                      if (!c.model) {
                        o.truth = c.build_status == Status::inconclusive ? Truth::inconclusive : Truth::fails;
                        o.detail = "structure could not be built";
                        o.residual = c.build_error;
                        return o;
                      }
                      o.detail = c.spec->omega ? "Omega given, bivector derived" : "bivector given, Omega derived";
                      return o;
                    }));
  out.push_back(def(kConvention, "-[w, z] = -theta_z for every coordinate z", {kStructure},
                    [](const CheckContext& c, Sampler&) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (const auto& z : m.chart->all()) {
                        const Expr f = Expr::symbol(z);
                        MultivectorField d = schouten_bracket(m.bivector, MultivectorField::scalar(m.chart, f)) -
                                             hamiltonian_field(f, m.omega);
                        o.record(is_zero(d, c.zero_test), [&] { return z + ": " + d.str(); });
                      }
                      o.detail = "[w, f] = w(d f, .) applied as a derivation";
                      return o;
                    }));
}

// ---------------------------------------------------------------- structure

void add_structure(std::vector<CheckDef>& out, const RunOptions& options) {
  out.push_back(def("structure.closed", "d~ Omega = 0", {}, [](const CheckContext& c, Sampler&) {
    auto omega = omega_form(c);
    if (!omega) return CheckOutcome::skip("Omega not available");
    CheckOutcome o;
    LeafwiseForm d = leafwise_d(*omega);
    o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
    return o;
  }));

  out.push_back(def("structure.nondegenerate", "det(Omega_ij) != 0", {}, [](const CheckContext& c, Sampler&) {
    auto omega = omega_form(c);
    if (!omega) return CheckOutcome::skip("Omega not available");
    CheckOutcome o;
    if (omega->chart()->leaf_dim() % 2 != 0) {
      o.record(Truth::fails, [] { return std::string("odd leaf dimension"); });
      return o;
    }
    Expr det = determinant(leafwise_matrix(*omega));
    o.record(negate(is_zero(det, c.zero_test)), [&] { return "det = " + det.str(); });
    o.detail = "det = " + det.str();
    return o;
  }));

  out.push_back(def("structure.subordinate", "w(d~ s, .) = 0 for transverse s", {}, [](const CheckContext& c, Sampler&) {
    if (!c.bivector) return CheckOutcome::skip("bivector not available");
    CheckOutcome o;
    o.record(is_subordinate(*c.bivector, c.zero_test), [&] { return "w = " + c.bivector->str(); });
    return o;
  }));

  out.push_back(def("structure.schouten_square", "[w, w] = 0", {}, [](const CheckContext& c, Sampler&) {
    if (!c.bivector) return CheckOutcome::skip("bivector not available");
    CheckOutcome o;
    MultivectorField sq = schouten_bracket(*c.bivector, *c.bivector);
    o.record(is_zero(sq, c.zero_test), [&] { return sq.str(); });
    return o;
  }));

  out.push_back(def("structure.round_trip", "Omega -> w -> Omega and w -> Omega -> w are identities", {kStructure},
                    [](const CheckContext& c, Sampler&) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      if (c.spec->omega) {
                        LeafwiseSymplectic back = omega_from_bivector(bivector_from_omega(m.omega), c.zero_test);
                        LeafwiseForm d = back.form() - *c.spec->omega;
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      } else {
                        MultivectorField d = bivector_from_omega(m.omega) - *c.spec->bivector;
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("structure.intertwining", "-[w, sharp(alpha)] = -sharp(d~ alpha) on a monomial basis",
                    {kStructure}, [max_degree = options.max_degree](const CheckContext& c, Sampler&) {
                      CheckOutcome o;
                      PoissonReport r = verify_poisson(model_of(c).bivector, max_degree, c.zero_test);
                      o.truth = r.intertwining;
                      o.cases = r.intertwining_cases;
                      o.residual = r.residual;
                      o.detail = "monomials up to degree " + std::to_string(max_degree);
                      return o;
                    }));

  out.push_back(def("structure.hamiltonian", "theta_f _| Omega = -d~f and flat(sharp(alpha)) = alpha", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const Expr f = poly(s, m.chart, 3);
                        LeafwiseForm d = contract(hamiltonian_field(f, m.omega), m.omega.form()) +
                                         leafwise_d(LeafwiseForm::scalar(m.chart, f));
                        o.record(is_zero(d, c.zero_test), [&] { return "f = " + f.str() + ": " + d.str(); });
                        LeafwiseForm alpha = s.leafwise_form(m.chart, 1);
                        LeafwiseForm back = omega_flat(m.omega, omega_sharp(m.omega, alpha)) - alpha;
                        o.record(is_zero(back, c.zero_test), [&] { return "alpha = " + alpha.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("structure.bracket_axioms", "{f,g} = -{g,f}, Leibniz rule, Jacobi identity", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      auto br = [&](const Expr& a, const Expr& b) { return poisson_bracket(a, b, m.omega); };
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const Expr f = poly(s, m.chart), g = poly(s, m.chart), h = poly(s, m.chart);
                        auto where = [&] { return "f = " + f.str() + ", g = " + g.str() + ", h = " + h.str(); };
                        o.record(is_zero(br(f, g) + br(g, f), c.zero_test), where);
                        o.record(is_zero(br(f, g * h) - br(f, g) * h - g * br(f, h), c.zero_test), where);
                        o.record(is_zero(br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)), c.zero_test), where);
                      }
                      return o;
                    }));

  out.push_back(def("structure.bracket_kernel", "{s, g} = 0 for s constant along leaves", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const Expr f = s.polynomial(m.chart->transverse(), 3, 3);
                        const Expr g = poly(s, m.chart, 3);
                        Expr b = poisson_bracket(f, g, m.omega);
                        o.record(is_zero(b, c.zero_test), [&] { return "{" + f.str() + ", " + g.str() + "} = " + b.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("structure.bracket_bivector", "{f, g} = w(d f, d g)", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const Expr f = poly(s, m.chart, 3), g = poly(s, m.chart, 3);
                        Expr d = poisson_bracket(f, g, m.omega) - bivector_bracket(m.bivector, f, g);
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("structure.cochain", "d~ d~ = 0, d d = 0, d~ P = P d", {},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& chart = c.spec->chart;
                      for (std::size_t k = 0; k <= chart->leaf_dim(); ++k) {
                        for (std::size_t n = 0; n < kRandomCases; ++n) {
                          LeafwiseForm a = s.leafwise_form(chart, k);
                          LeafwiseForm dd = leafwise_d(leafwise_d(a));
                          o.record(is_zero(dd, c.zero_test), [&] { return "d~d~(" + a.str() + ")"; });
                        }
                      }
                      for (std::size_t k = 0; k <= chart->dim(); ++k) {
                        for (std::size_t n = 0; n < kRandomCases; ++n) {
                          ExteriorForm a = s.exterior_form(chart, k);
                          ExteriorForm dd = exterior_d(exterior_d(a));
                          o.record(is_zero(dd, c.zero_test), [&] { return "dd(" + a.str() + ")"; });
                          LeafwiseForm p = project_leafwise(exterior_d(a)) - leafwise_d(project_leafwise(a));
                          o.record(is_zero(p, c.zero_test), [&] { return "projection of " + a.str(); });
                        }
                      }
                      return o;
                    }));

  out.push_back(def("structure.lichnerowicz", "[w, [w, P]] = 0 for multivectors P", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k <= 2; ++k) {
                        for (std::size_t n = 0; n < kRandomCases / 2; ++n) {
                          MultivectorField p = s.multivector(m.chart, k);
                          MultivectorField dd = contravariant_d(contravariant_d(p, m.bivector), m.bivector);
                          o.record(is_zero(dd, c.zero_test), [&] { return "P = " + p.str(); });
                        }
                      }
                      return o;
                    }));
}

// ---------------------------------------------------------------- prequantization

void add_prequant(std::vector<CheckDef>& out) {
  out.push_back(def("prequant.condition", "R~ = i eps Omega", {kStructure}, [](const CheckContext& c, Sampler&) {
    CheckOutcome o;
    const auto& m = model_of(c);
    o.record(check_prequantization(m.connection, m.omega.form(), m.epsilon, c.zero_test),
             [&] { return prequantization_defect(m.connection, m.omega.form(), m.epsilon).str(); });
    return o;
  }));

  out.push_back(def("prequant.curvature_routes", "d_i A_j - d_j A_i = d~(A_i d~z^i)", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      std::vector<LeafwiseConnection> cases{m.connection};
                      for (std::size_t k = 0; k < kRandomCases; ++k) cases.push_back(random_leafwise_connection(s, m.chart));
                      for (const auto& a : cases) {
                        ComplexLeafwiseForm d = leafwise_curvature(a) - leafwise_d(a.potential_form());
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("prequant.projection", "P(R) = R~ for the restricted connection", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      std::vector<Connection> cases{full_connection(c)};
                      for (std::size_t k = 0; k < kRandomCases; ++k) cases.push_back(random_connection(s, m.chart));
                      for (const auto& g : cases) {
                        ComplexLeafwiseForm d = project_leafwise(curvature(g)) - leafwise_curvature(restrict_connection(g));
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("prequant.lift", "restrict(lift(A, Gamma, B)) = A", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      auto check = [&](const LeafwiseConnection& a, const Connection& ref, const Splitting& b) {
                        LeafwiseConnection back = restrict_connection(lift_leafwise_connection(a, ref, b));
                        for (std::size_t i = 0; i < a.potentials.size(); ++i) {
                          Complex d = back.potentials[i] - a.potentials[i];
                          o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                        }
                      };
                      check(m.connection, Connection::zero(m.chart), c.spec->splitting_or_default());
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        check(random_leafwise_connection(s, m.chart), random_connection(s, m.chart),
                              random_splitting(s, m.chart));
                      }
                      return o;
                    }));

  out.push_back(def("prequant.gauge", "R~(A + d~chi) = R~(A)", {kStructure}, [](const CheckContext& c, Sampler& s) {
    CheckOutcome o;
    const auto& m = model_of(c);
    for (std::size_t k = 0; k < kRandomCases; ++k) {
      const Complex chi = cpoly(s, m.chart, 3);
      ComplexLeafwiseForm d = leafwise_curvature(gauge_shift(m.connection, chi)) - leafwise_curvature(m.connection);
      o.record(is_zero(d, c.zero_test), [&] { return "chi = " + chi.str(); });
    }
    return o;
  }));

  out.push_back(def("prequant.leibniz", "nabla_v(f s) = v(f) s + f nabla_v s", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const MultivectorField v = leaf_field(s, m.chart);
                        const Expr f = poly(s, m.chart);
                        const Section sec = cpoly(s, m.chart);
                        Complex d = covariant_derivative(m.connection, v, Complex(f) * sec) -
                                    Complex(apply_vector(v, f)) * sec -
                                    Complex(f) * covariant_derivative(m.connection, v, sec);
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("prequant.endomorphism", "nabla_[t,t'] - [nabla_t, nabla_t'] = R(t, t')", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const MultivectorField t = leaf_field(s, m.chart), t2 = leaf_field(s, m.chart);
                        const Section sec = cpoly(s, m.chart);
                        Section d = curvature_endomorphism_defect(m.connection, t, t2, sec);
                        o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      }
                      return o;
                    }));

  out.push_back(def("prequant.unitary", "Gamma^g preserves g, restricts to a prequantization, R(Gamma^g) = i Im R(Gamma)",
                    {kStructure}, [](const CheckContext& c, Sampler&) {
                      if (!c.spec->hermitian_gauge) return CheckOutcome::skip("trivialization not marked Hermitian");
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      const Connection g = full_connection(c);
                      const Connection u = unitary_reduction(g, true);
                      o.record(preserves_hermitian_form(u, c.zero_test), [] { return std::string("real part remains"); });
                      ComplexExteriorForm d =
                          curvature(u) - complexify(ExteriorForm(m.chart, 2), imag_part(curvature(g)));
                      o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
                      o.record(check_prequantization(restrict_connection(u), m.omega.form(), m.epsilon, c.zero_test),
                               [&] { return prequantization_defect(restrict_connection(u), m.omega.form(), m.epsilon).str(); });
                      return o;
                    }));

  out.push_back(def("prequant.chern", "P(c_1) = -eps Omega / (2 pi)", {kStructure}, [](const CheckContext& c, Sampler&) {
    if (!c.spec->hermitian_gauge) return CheckOutcome::skip("trivialization not marked Hermitian");
    CheckOutcome o;
    const auto& m = model_of(c);
    const ExteriorForm c1 = chern_form(unitary_reduction(full_connection(c), true), c.zero_test);
    const Expr factor = -m.epsilon / (Expr(2) * Expr::symbol("pi"));
    LeafwiseForm d = project_leafwise(c1) - factor * m.omega.form();
    o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
    o.detail = "c_1 = " + c1.str();
    return o;
  }));
}

// ---------------------------------------------------------------- polarization

void add_algebra(std::vector<CheckDef>& out, const CheckContext& ctx) {
  for (const auto& [name, f] : ctx.spec->observables) {
    out.push_back(def("algebra." + name, "[theta_f, T] in T for " + name + " = " + f.str(), {kStructure},
                      [f = f](const CheckContext& c, Sampler&) {
                        if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
                        CheckOutcome o;
                        const auto& m = model_of(c);
                        o.record(in_quantum_algebra(f, m.polarization, m.omega, c.zero_test),
                                 [&] { return "theta_f = " + hamiltonian_field(f, m.omega).str(); });
                        return o;
                      }));
  }
}

void add_polarization(std::vector<CheckDef>& out) {
  struct Item {
    const char* name;
    const char* identity;
    Truth PolarizationReport::*field;
  };
  static const Item items[] = {
      {"polarization.subordinate", "generators tangent to the leaves", &PolarizationReport::subordinate},
      {"polarization.involutive", "[T, T] in T", &PolarizationReport::involutive},
      {"polarization.isotropic", "Omega(t, t') = 0 on T", &PolarizationReport::isotropic},
      {"polarization.constant_rank", "rank of T constant", &PolarizationReport::constant_rank},
  };
  for (const auto& item : items) {
    out.push_back(def(item.name, item.identity, {kStructure}, [field = item.field](const CheckContext& c, Sampler&) {
      if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
      CheckOutcome o;
      const auto& m = model_of(c);
      PolarizationReport r = verify_polarization(m.polarization, m.omega, c.zero_test);
      o.record(r.*field, [&] { return r.residual; });
      return o;
    }));
  }
  out.push_back(def("polarization.lagrangian", "2 rank T = leaf dimension", {kStructure},
                    [](const CheckContext& c, Sampler&) {
                      if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      PolarizationReport r = verify_polarization(m.polarization, m.omega, c.zero_test);
                      o.record(r.lagrangian ? Truth::holds : Truth::fails, [&] {
                        return "rank " + std::to_string(r.rank) + ", leaf dimension " +
                               std::to_string(m.chart->leaf_dim());
                      });
                      o.detail = "rank " + std::to_string(r.rank);
                      return o;
                    }));
  out.push_back(def("polarization.hamiltonian_span", "theta_h spans T for the listed h", {kStructure},
                    [](const CheckContext& c, Sampler&) {
                      if (c.spec->polarization.hamiltonians_of.empty()) return CheckOutcome::skip("no Hamiltonians listed");
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      auto basis = reduce_generators(m.polarization.generators, c.zero_test);
                      MultivectorField top = MultivectorField::scalar(m.chart, Expr(1));
                      for (const auto& b : basis) top = wedge(top, b);
                      for (const auto& h : m.polarization.hamiltonians_of) {
                        MultivectorField w = wedge(hamiltonian_field(h, m.omega), top);
                        o.record(is_zero(w, c.zero_test), [&] { return "theta_" + h.str() + " outside T"; });
                      }
                      const auto fields = polarization_fields(m);
                      o.record(reduce_generators(fields, c.zero_test).size() == basis.size() ? Truth::holds : Truth::fails,
                               [] { return std::string("Hamiltonian fields span a smaller distribution"); });
                      return o;
                    }));
}

// ---------------------------------------------------------------- quantization

void add_dirac(std::vector<CheckDef>& out, const CheckContext& ctx) {
  const auto& obs = ctx.spec->observables;
  for (std::size_t a = 0; a < obs.size(); ++a) {
    for (std::size_t b = a + 1; b < obs.size(); ++b) {
      const auto& [fn, f] = obs[a];
      const auto& [gn, g] = obs[b];
      out.push_back(def("dirac." + fn + "." + gn, "[f^, g^] = -i {f, g}^", {kStructure},
                        [f = f, g = g](const CheckContext& c, Sampler&) {
                          CheckOutcome o;
                          DiracResult d = verify_dirac(f, g, model_of(c));
                          o.record(d.holds, [&] { return "lhs " + d.lhs.str() + ", rhs " + d.rhs.str(); });
                          return o;
                        }));
    }
  }

  out.push_back(def("dirac.sample", "[f^, g^] = -i {f, g}^ on random algebra elements", {kStructure},
                    [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      auto sample = random_algebra_elements(m, s, kAlgebraSample);
                      for (std::size_t a = 0; a < sample.size(); ++a) {
                        for (std::size_t b = a + 1; b < sample.size(); ++b) {
                          DiracResult d = verify_dirac(sample[a], sample[b], m);
                          o.record(d.holds, [&] { return "f = " + sample[a].str() + ", g = " + sample[b].str(); });
                        }
                      }
                      o.detail = std::to_string(sample.size()) + " elements";
                      if (sample.size() < 2) o.truth = o.truth && Truth::inconclusive;
                      return o;
                    }));

  out.push_back(def("quant.kernel", "f^ = eps f for f constant along leaves, and it commutes with observables",
                    {kStructure}, [](const CheckContext& c, Sampler& s) {
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (std::size_t k = 0; k < kRandomCases; ++k) {
                        const Expr f = s.polynomial(m.chart->transverse(), 3, 3);
                        const FirstOrderOperator op = ks_operator(f, m);
                        FirstOrderOperator d = op - FirstOrderOperator::multiplication(m.chart, Complex(m.epsilon * f));
                        o.record(is_zero(d, c.zero_test), [&] { return "f = " + f.str() + ": " + d.str(); });
                        for (const auto& [name, g] : m.observables) {
                          FirstOrderOperator comm = commutator(op, ks_operator(g, m));
                          o.record(is_zero(comm, c.zero_test), [&] { return "[f^, " + name + "^] = " + comm.str(); });
                        }
                      }
                      return o;
                    }));

  out.push_back(def("quant.linearity", "(a f + b g)^ = a f^ + b g^", {kStructure}, [](const CheckContext& c, Sampler& s) {
    CheckOutcome o;
    const auto& m = model_of(c);
    for (std::size_t k = 0; k < kRandomCases; ++k) {
      const Expr f = poly(s, m.chart), g = poly(s, m.chart);
      const Expr a(s.rational()), b(s.rational());
      FirstOrderOperator d = ks_operator(a * f + b * g, m) - ks_operator(f, m).scaled(Complex(a)) -
                             ks_operator(g, m).scaled(Complex(b));
      o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
    }
    return o;
  }));

  out.push_back(def("quant.self_adjoint", "Re a^i = 0 and 2 Im b = d_i Im a^i for observables", {kStructure},
                    [](const CheckContext& c, Sampler&) {
                      if (!c.spec->hermitian_gauge) return CheckOutcome::skip("trivialization not marked Hermitian");
                      CheckOutcome o;
                      const auto& m = model_of(c);
                      for (const auto& [name, f] : m.observables) {
                        const FirstOrderOperator op = ks_operator(f, m);
                        o.record(formally_self_adjoint(op, c.zero_test), [&] { return name + "^ = " + op.str(); });
                      }
                      return o;
                    }));

  for (const auto& [name, f] : obs) {
    out.push_back(def("quant.invariance." + name, "f^ maps polarized sections to polarized sections", {kStructure},
                      [f = f](const CheckContext& c, Sampler& s) {
                        if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
                        CheckOutcome o;
                        const auto& m = model_of(c);
                        const FirstOrderOperator op = ks_operator(f, m);
                        for (const auto& rho : random_polarized_sections(m, s, kSections)) {
                          Section image = apply_operator(op, rho);
                          o.record(is_polarized(image, m), [&] { return "section " + rho.str() + " maps to " + image.str(); });
                        }
                        if (o.cases == 0) {
                          o.truth = Truth::inconclusive;
                          o.detail = "no polarized test sections found";
                        }
                        return o;
                      }));
  }
}

// ---------------------------------------------------------------- leaves

void add_leaves(std::vector<CheckDef>& out, const CheckContext& ctx) {
  const auto slices = ctx.slices();
  for (std::size_t k = 0; k < slices.size(); ++k) {
    const std::string prefix = "leaves." + std::to_string(k) + ".";
    const LeafSlice slice = slices[k];
    auto leaf_def = [&](const std::string& name, const std::string& identity,
                        std::function<CheckOutcome(const CheckContext&, Sampler&, const QuantumModel&)> body) {
      out.push_back(def(prefix + name, identity + " on " + slice.str(), {kStructure},
                        [slice, body](const CheckContext& c, Sampler& s) {
                          const QuantumModel leaf = restrict_model_to_leaf(model_of(c), slice);
                          return body(c, s, leaf);
                        }));
    };

    leaf_def("symplectic", "pulled-back Omega is closed and nondegenerate",
             [](const CheckContext& c, Sampler&, const QuantumModel& leaf) {
               CheckOutcome o;
               ExteriorForm pulled(leaf.chart, 2);
               for (const auto& [idx, v] : leaf.omega.form().components()) pulled.add(idx, v);
               ExteriorForm d = exterior_d(pulled);
               o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
               o.record(negate(is_zero(leaf.omega.determinant(), c.zero_test)),
                        [&] { return "det = " + leaf.omega.determinant().str(); });
               return o;
             });

    leaf_def("factorization", "i*(d~ a) = d i*(a) and i*(d b) = d i*(b)",
             [slice](const CheckContext& c, Sampler& s, const QuantumModel&) {
               CheckOutcome o;
               const auto& chart = c.spec->chart;
               for (std::size_t k = 0; k <= chart->leaf_dim(); ++k) {
                 for (std::size_t n = 0; n < kRandomCases / 2; ++n) {
                   const LeafwiseForm a = s.leafwise_form(chart, k);
                   ExteriorForm d = pullback_to_leaf(leafwise_d(a), slice) - exterior_d(pullback_to_leaf(a, slice));
                   o.record(is_zero(d, c.zero_test), [&] { return "a = " + a.str(); });
                   const ExteriorForm b = s.exterior_form(chart, k);
                   ExteriorForm e = restrict_form_to_leaf(exterior_d(b), slice) - exterior_d(restrict_form_to_leaf(b, slice));
                   o.record(is_zero(e, c.zero_test), [&] { return "b = " + b.str(); });
                 }
               }
               return o;
             });

    leaf_def("bracket","{f, g} restricted equals the leaf bracket of restrictions",
             [slice](const CheckContext& c, Sampler& s, const QuantumModel& leaf) {
               CheckOutcome o;
               const auto& m = model_of(c);
               for (std::size_t n = 0; n < kRandomCases; ++n) {
                 const Expr f = poly(s, m.chart, 3), g = poly(s, m.chart, 3);
                 Expr d = restrict_to_leaf(poisson_bracket(f, g, m.omega), slice) -
                          poisson_bracket(restrict_to_leaf(f, slice), restrict_to_leaf(g, slice), leaf.omega);
                 o.record(is_zero(d, c.zero_test), [&] { return d.str(); });
               }
               return o;
             });

    leaf_def("prequant", "restricted connection satisfies R = i eps Omega",
             [](const CheckContext& c, Sampler&, const QuantumModel& leaf) {
               CheckOutcome o;
               o.record(check_prequantization(leaf.connection, leaf.omega.form(), leaf.epsilon, c.zero_test),
                        [&] { return prequantization_defect(leaf.connection, leaf.omega.form(), leaf.epsilon).str(); });
               return o;
             });

    leaf_def("polarization", "restricted polarization is involutive, isotropic, of constant rank",
             [](const CheckContext& c, Sampler&, const QuantumModel& leaf) {
               if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
               CheckOutcome o;
               PolarizationReport r = verify_polarization(leaf.polarization, leaf.omega, c.zero_test);
               o.record(r.overall(), [&] { return r.residual; });
               return o;
             });

    leaf_def("commutation", "(f^ rho)|leaf = (f|leaf)^ (rho|leaf)",
             [slice](const CheckContext& c, Sampler& s, const QuantumModel&) {
               CheckOutcome o;
               const auto& m = model_of(c);
               for (std::size_t n = 0; n < kRandomCases / 2; ++n) {
                 const Section rho = cpoly(s, m.chart);
                 std::vector<Expr> fs{poly(s, m.chart)};
                 for (const auto& [name, f] : m.observables) fs.push_back(f);
                 for (const auto& f : fs) {
                   o.record(verify_leaf_commutation(m, f, rho, slice), [&] { return "f = " + f.str() + ", rho = " + rho.str(); });
                 }
               }
               return o;
             });

    leaf_def("polarized_sections", "restrictions of polarized sections are polarized",
             [slice](const CheckContext& c, Sampler& s, const QuantumModel& leaf) {
               if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
               CheckOutcome o;
               for (const auto& rho : random_polarized_sections(model_of(c), s, kSections)) {
                 Section r = restrict_to_leaf(rho, slice);
                 o.record(is_polarized(r, leaf), [&] { return rho.str(); });
               }
               if (o.cases == 0) o.truth = Truth::inconclusive;
               return o;
             });

    leaf_def("algebra", "members of the quantum algebra restrict to members",
             [slice](const CheckContext& c, Sampler&, const QuantumModel& leaf) {
               if (!has_polarization(c)) return CheckOutcome::skip("no polarization given");
               CheckOutcome o;
               const auto& m = model_of(c);
               std::string excluded;
               for (const auto& [name, f] : m.observables) {
                 if (in_quantum_algebra(f, m.polarization, m.omega, c.zero_test) != Truth::holds) {
                   excluded += (excluded.empty() ? "" : ", ") + name;
                   continue;
                 }
                 o.record(in_quantum_algebra(restrict_to_leaf(f, slice), leaf.polarization, leaf.omega, c.zero_test),
                          [&] { return name; });
               }
               if (!excluded.empty()) o.detail = "not in the algebra: " + excluded;
               return o;
             });
  }
}

}  // namespace

std::vector<CheckDef> checks_for(Command command, const CheckContext& context) {
  std::vector<CheckDef> out;
  add_prerequisites(out);
  const bool every = command == Command::all;
  if (every || command == Command::check_structure) add_structure(out, context.spec->options);
  if (every || command == Command::check_prequant) add_prequant(out);
  if (every || command == Command::check_polarization) add_polarization(out);
  if (every || command == Command::check_polarization || command == Command::verify_dirac) add_algebra(out, context);
  if (every || command == Command::verify_dirac) add_dirac(out, context);
  if (every || command == Command::check_leaves) add_leaves(out, context);
  return out;
}

}  // namespace fq
