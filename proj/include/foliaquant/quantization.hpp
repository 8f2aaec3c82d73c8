#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliaquant/prequantization.hpp"

namespace fq {

/// Distribution spanned by vector fields tangent to the leaves. The optional
/// hamiltonians_of list names functions h whose Hamiltonian fields realize
/// the generators; polarized sections are then tested along those fields.
struct Polarization {
  std::vector<MultivectorField> generators;
  std::vector<Expr> hamiltonians_of;
};

struct PolarizationReport {
  Truth subordinate = Truth::holds;
  Truth involutive = Truth::holds;
  Truth isotropic = Truth::holds;
  Truth constant_rank = Truth::holds;
  std::size_t rank = 0;
  bool lagrangian = false;
  std::vector<MultivectorField> basis;  // generators after dependency reduction
  std::string residual;

  Truth overall() const { return subordinate && involutive && isotropic && constant_rank; }
};

/// a^i d_i + b acting on sections, with a over leaf ordinals.
struct FirstOrderOperator {
  ChartPtr chart;
  std::vector<Complex> a;
  Complex b;

  static FirstOrderOperator multiplication(ChartPtr chart, Complex b);
  FirstOrderOperator scaled(const Complex& c) const;
  std::string str() const;
};

FirstOrderOperator operator-(const FirstOrderOperator& f, const FirstOrderOperator& g);
Truth is_zero(const FirstOrderOperator& f, const ZeroTestOptions& options = {});

/// Assembled data for quantization on one chart.
struct QuantumModel {
  std::string name;
  ChartPtr chart;
  std::vector<std::string> parameters;
  Expr epsilon;
  LeafwiseSymplectic omega;
  MultivectorField bivector;
  LeafwiseConnection connection;
  Polarization polarization;
  std::vector<std::pair<std::string, Expr>> observables;
  ZeroTestOptions zero_test;
};

PolarizationReport verify_polarization(const Polarization& t, const LeafwiseSymplectic& omega,
                                       const ZeroTestOptions& options = {});

/// Reduced basis of the generators: each kept field is independent of the
/// previous ones under the wedge test.
std::vector<MultivectorField> reduce_generators(const std::vector<MultivectorField>& generators,
                                                const ZeroTestOptions& options = {});

/// [theta_f, tau] is tangent to the leaves and lies in the span of the
/// polarization for every generator tau.
Truth in_quantum_algebra(const Expr& f, const Polarization& t, const LeafwiseSymplectic& omega,
                         const ZeroTestOptions& options = {});

/// Sum of d_a v^a over every chart coordinate.
Expr divergence(const MultivectorField& v);

/// f^ = -i [nabla_{theta_f} + i eps f + (1/2) d_i theta_f^i].
FirstOrderOperator ks_operator(const Expr& f, const QuantumModel& model);

FirstOrderOperator commutator(const FirstOrderOperator& f, const FirstOrderOperator& g);
Section apply_operator(const FirstOrderOperator& f, const Section& rho);

struct DiracResult {
  Truth holds = Truth::holds;
  FirstOrderOperator lhs;  // [f^, g^]
  FirstOrderOperator rhs;  // -i {f, g}^
};

DiracResult verify_dirac(const Expr& f, const Expr& g, const QuantumModel& model);

/// Vector fields along which polarized sections are differentiated: the
/// Hamiltonian fields of hamiltonians_of when given, else the generators.
std::vector<MultivectorField> polarization_fields(const QuantumModel& model);

/// (nabla_v + (1/2) d_i v^i) rho for each polarization field v.
std::vector<Complex> polarized_residual(const Section& rho, const QuantumModel& model);
Truth is_polarized(const Section& rho, const QuantumModel& model);

/// f^ maps each polarized section in the family to a polarized section.
/// Sections that are not polarized themselves are rejected with DomainError.
Truth invariance_check(const Expr& f, const QuantumModel& model, const std::vector<Section>& sections);

/// Formal self-adjointness of a^i d_i + b for the flat pairing:
/// Re a^i = 0 and 2 Im b = d_i Im a^i.
Truth formally_self_adjoint(const FirstOrderOperator& f, const ZeroTestOptions& options = {});

/// The symplectic leaf through a slice with restricted structure.
QuantumModel restrict_model_to_leaf(const QuantumModel& model, const LeafSlice& slice);

/// restrict(f^ rho) = (restrict f)^ (restrict rho) on the leaf model.
Truth verify_leaf_commutation(const QuantumModel& model, const Expr& f, const Section& rho, const LeafSlice& slice);

}  // namespace fq
