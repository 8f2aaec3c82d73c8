#pragma once

#include <vector>

#include "foliaquant/forms.hpp"
#include "foliaquant/poisson.hpp"

namespace fq {

/// Sections of the trivialized line bundle are single complex functions.
using Section = Complex;

/// Connection potentials in a fixed trivialization: Gamma_lambda along
/// transverse coordinates and Gamma_i along leaf coordinates.
struct Connection {
  ChartPtr chart;
  std::vector<Complex> transverse;
  std::vector<Complex> leaf;

  static Connection zero(ChartPtr chart);
  /// The potential 1-form Gamma_a dz^a over all coordinates.
  ComplexExteriorForm potential_form() const;
};

/// Leafwise connection potentials A_i:  nabla s = d~s - A_i s d~z^i.
struct LeafwiseConnection {
  ChartPtr chart;
  std::vector<Complex> potentials;

  static LeafwiseConnection zero(ChartPtr chart);
  ComplexLeafwiseForm potential_form() const;
};

/// nabla_v s = v^i (d_i s - A_i s); v must be tangent to the leaves.
Section covariant_derivative(const LeafwiseConnection& a, const MultivectorField& v, const Section& s);

/// Contravariant derivative along a 1-form: nabla_{w-sharp(phi)}.
Section contravariant_derivative(const LeafwiseConnection& a, const MultivectorField& w, const ExteriorForm& phi,
                                 const Section& s);

/// R_ij = d_i A_j - d_j A_i, as the leafwise 2-form sum_{i<j} R_ij d~z^i ^ d~z^j.
ComplexLeafwiseForm leafwise_curvature(const LeafwiseConnection& a);

/// Full curvature d(Gamma_a dz^a) of a connection.
ComplexExteriorForm curvature(const Connection& g);

/// (nabla_[t,t'] - [nabla_t, nabla_t']) s - R(t, t') s. Vanishes identically
/// when the endomorphism and the component formula use the same sign.
Section curvature_endomorphism_defect(const LeafwiseConnection& a, const MultivectorField& t,
                                      const MultivectorField& t2, const Section& s);

/// Adds the gradient of chi to the potentials.
LeafwiseConnection gauge_shift(const LeafwiseConnection& a, const Complex& chi);

/// Curvature equals i * eps * Omega.
Truth check_prequantization(const LeafwiseConnection& a, const LeafwiseForm& omega, const Expr& eps,
                            const ZeroTestOptions& options = {});
/// The defect R~ - i eps Omega.
ComplexLeafwiseForm prequantization_defect(const LeafwiseConnection& a, const LeafwiseForm& omega, const Expr& eps);

LeafwiseConnection restrict_connection(const Connection& g);

/// Gamma'_lambda = Gamma_lambda - B^i_lambda (A_i - Gamma_i),  Gamma'_i = A_i.
Connection lift_leafwise_connection(const LeafwiseConnection& a, const Connection& reference, const Splitting& b);

/// Keeps i * Im of every potential. Only meaningful in a trivialization
/// adapted to the Hermitian form g(c, c') = c conj(c'); without that flag the
/// call throws DomainError.
Connection unitary_reduction(const Connection& g, bool hermitian_gauge);

/// True when all potentials are purely imaginary.
Truth preserves_hermitian_form(const Connection& g, const ZeroTestOptions& options = {});

/// c_1 = i / (2 pi) R for a connection with purely imaginary potentials.
/// Throws DomainError when a real part does not vanish.
ExteriorForm chern_form(const Connection& g, const ZeroTestOptions& options = {});

/// Connection on the leaf chart obtained by restricting leaf potentials.
Connection pullback_connection_to_leaf(const Connection& g, const LeafSlice& slice);
LeafwiseConnection pullback_connection_to_leaf(const LeafwiseConnection& a, const LeafSlice& slice);

}  // namespace fq
