#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foliaquant/forms.hpp"
#include "foliaquant/matrix.hpp"
#include "foliaquant/schouten.hpp"

namespace fq {

/// A d~-closed nondegenerate leafwise 2-form with its component matrix and
/// inverse cached at construction.
class LeafwiseSymplectic {
 public:
  /// Throws DegenerateStructureError when the form is not closed, not of
  /// degree 2, on an odd-dimensional foliation, or singular; throws
  /// InconclusiveError when the zero test cannot decide closure.
  explicit LeafwiseSymplectic(LeafwiseForm omega, const ZeroTestOptions& options = {});

  const LeafwiseForm& form() const noexcept { return omega_; }
  const ChartPtr& chart() const noexcept { return omega_.chart(); }
  /// Omega_ij over leaf ordinals.
  const Matrix& matrix() const noexcept { return matrix_; }
  const Matrix& inverse_matrix() const noexcept { return inverse_; }
  const Expr& determinant() const noexcept { return det_; }
  /// Non-fatal findings, e.g. a determinant that may vanish somewhere.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  LeafwiseForm omega_;
  Matrix matrix_;
  Matrix inverse_;
  Expr det_;
  std::vector<std::string> warnings_;
};

/// Component matrix of a leafwise 2-form over leaf ordinals.
Matrix leafwise_matrix(const LeafwiseForm& omega);
/// Leaf block w^{ij} of a bivector.
Matrix leaf_block(const MultivectorField& w);

/// Omega-flat: v -> -v _| Omega. v must be tangent to the foliation.
LeafwiseForm omega_flat(const LeafwiseSymplectic& omega, const MultivectorField& v);
/// Inverse of omega_flat on leafwise 1-forms.
MultivectorField omega_sharp(const LeafwiseSymplectic& omega, const LeafwiseForm& alpha);
/// Exterior-algebra extension of omega_sharp to leafwise r-forms.
MultivectorField omega_sharp_graded(const LeafwiseSymplectic& omega, const LeafwiseForm& alpha);

/// Leafwise Hamiltonian vector field theta_f = sharp(d~f).
MultivectorField hamiltonian_field(const Expr& f, const LeafwiseSymplectic& omega);
/// {f, g} = theta_f _| d~g.
Expr poisson_bracket(const Expr& f, const Expr& g, const LeafwiseSymplectic& omega);

/// Action of a vector field on a function.
Expr apply_vector(const MultivectorField& v, const Expr& f);
/// w(alpha, beta) for exterior 1-forms.
Expr pair_bivector(const MultivectorField& w, const ExteriorForm& alpha, const ExteriorForm& beta);
/// {f, g}_w = w(df, dg).
Expr bivector_bracket(const MultivectorField& w, const Expr& f, const Expr& g);
/// w-sharp on a 1-form: w(alpha, .).
MultivectorField bivector_sharp(const MultivectorField& w, const ExteriorForm& alpha);

/// The bivector with w(alpha, beta) = Omega(sharp alpha, sharp beta).
MultivectorField bivector_from_omega(const LeafwiseSymplectic& omega);

/// The leafwise form Omega(v, v') = w(w-flat v, w-flat v'). Throws
/// DegenerateStructureError for a bivector with transverse components or a
/// leaf block of dropping rank.
LeafwiseSymplectic omega_from_bivector(const MultivectorField& w, const ZeroTestOptions& options = {});

struct PoissonReport {
  Truth subordinate = Truth::holds;
  Truth jacobi = Truth::holds;  // [w, w] = 0
  Truth regular = Truth::holds;
  /// Contravariant differential against sharp of the leafwise differential,
  /// on monomial functions and 1-forms. Skipped (holds, with a note) when
  /// the bivector is not regular.
  Truth intertwining = Truth::holds;
  std::size_t intertwining_cases = 0;
  std::vector<std::string> notes;
  std::string residual;

  Truth overall() const { return subordinate && jacobi && regular && intertwining; }
};

PoissonReport verify_poisson(const MultivectorField& w, unsigned max_degree = 3, const ZeroTestOptions& options = {});

/// Intertwining identity  -[w, sharp(alpha)] = -sharp(d~ alpha)  for one
/// leafwise form alpha. Returns the difference of both sides.
MultivectorField intertwining_defect(const MultivectorField& w, const LeafwiseSymplectic& omega,
                                     const LeafwiseForm& alpha);

/// Numeric rank of a symbolic matrix at a seeded random rational point;
/// nullopt if every tried point is a pole.
std::optional<std::size_t> rank_at_random_point(const Matrix& m, std::uint64_t seed);

/// Monomials in the given symbols of total degree <= max_degree.
std::vector<Expr> monomials(const std::vector<std::string>& symbols, unsigned max_degree);

}  // namespace fq
