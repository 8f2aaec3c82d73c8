#include "foliaquant/poisson.hpp"

#include <cmath>
#include <random>
#include <set>

namespace fq {

Matrix leafwise_matrix(const LeafwiseForm& omega) {
  const std::size_t n = omega.space();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m(i, j) = omega.get({i, j});
    }
  }
  return m;
}

Matrix leaf_block(const MultivectorField& w) {
  const auto& chart = *w.chart();
  const std::size_t n = chart.leaf_dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m(i, j) = w.get({chart.leaf_global(i), chart.leaf_global(j)});
    }
  }
  return m;
}

LeafwiseSymplectic::LeafwiseSymplectic(LeafwiseForm omega, const ZeroTestOptions& options)
    : omega_(std::move(omega)) {
  const auto& chart = *omega_.chart();
  if (omega_.degree() != 2) throw DegenerateStructureError("leafwise symplectic form must have degree 2");
  if (chart.leaf_dim() < 2 || chart.leaf_dim() % 2 != 0) {
    throw DegenerateStructureError("symplectic foliation needs even leaf dimension >= 2");
  }
  Truth closed = is_zero(leafwise_d(omega_), options);
  if (closed == Truth::fails) throw DegenerateStructureError("leafwise form is not closed: d~Omega = " + leafwise_d(omega_).str());
  if (closed == Truth::inconclusive) throw InconclusiveError("closure of the leafwise form is undecided");
  matrix_ = leafwise_matrix(omega_);
  det_ = fq::determinant(matrix_, options);
  Truth singular = is_zero(det_, options);
  if (singular == Truth::holds) throw DegenerateStructureError("leafwise form is degenerate: determinant vanishes");
  if (singular == Truth::inconclusive) throw InconclusiveError("nondegeneracy of the leafwise form is undecided");
  inverse_ = fq::inverse(matrix_, options);
  if (!det_.is_constant()) {
    Expr locus(det_.numerator());
    warnings_.push_back("determinant " + det_.str() + " is not constant; the form may degenerate where " +
                        locus.str() + " = 0");
  }
}

LeafwiseForm omega_flat(const LeafwiseSymplectic& omega, const MultivectorField& v) {
  return -contract(v, omega.form());
}

MultivectorField omega_sharp(const LeafwiseSymplectic& omega, const LeafwiseForm& alpha) {
  if (alpha.degree() != 1) throw DomainError("omega_sharp expects a leafwise 1-form");
  const std::size_t n = alpha.space();
  const Matrix& inv = omega.inverse_matrix();
  std::vector<Expr> v(n);
  // -v _| Omega = alpha  <=>  v^i = -alpha_j (Omega^-1)_{ji}
  for (const auto& [idx, a] : alpha.components()) {
    for (std::size_t i = 0; i < n; ++i) v[i] -= a * inv(idx[0], i);
  }
  return leaf_vector_field(alpha.chart(), v);
}

MultivectorField omega_sharp_graded(const LeafwiseSymplectic& omega, const LeafwiseForm& alpha) {
  if (alpha.degree() == 0) return MultivectorField::scalar(alpha.chart(), alpha.value());
  const std::size_t n = alpha.space();
  std::vector<MultivectorField> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) images.push_back(omega_sharp(omega, LeafwiseForm::basis(alpha.chart(), {k})));
  MultivectorField out(alpha.chart(), alpha.degree());
  for (const auto& [idx, c] : alpha.components()) {
    MultivectorField term = MultivectorField::scalar(alpha.chart(), c);
    for (auto k : idx) term = wedge(term, images[k]);
    out += term;
  }
  return out;
}

MultivectorField hamiltonian_field(const Expr& f, const LeafwiseSymplectic& omega) {
  return omega_sharp(omega, leafwise_d(LeafwiseForm::scalar(omega.chart(), f)));
}

Expr apply_vector(const MultivectorField& v, const Expr& f) {
  if (v.degree() != 1) throw DomainError("apply_vector expects a vector field");
  Expr r;
  const auto& chart = *v.chart();
  for (const auto& [idx, c] : v.components()) r += c * diff(f, chart.name(idx[0]));
  return r;
}

Expr poisson_bracket(const Expr& f, const Expr& g, const LeafwiseSymplectic& omega) {
  return apply_vector(hamiltonian_field(f, omega), g);
}

MultivectorField bivector_sharp(const MultivectorField& w, const ExteriorForm& alpha) {
  if (w.degree() != 2) throw DomainError("bivector_sharp expects a bivector");
  return contract(alpha, w);
}

Expr pair_bivector(const MultivectorField& w, const ExteriorForm& alpha, const ExteriorForm& beta) {
  return contract(beta, contract(alpha, w)).value();
}

Expr bivector_bracket(const MultivectorField& w, const Expr& f, const Expr& g) {
  return pair_bivector(w, differential(w.chart(), f), differential(w.chart(), g));
}

MultivectorField bivector_from_omega(const LeafwiseSymplectic& omega) {
  const auto& chart = omega.chart();
  const std::size_t n = chart->leaf_dim();
  std::vector<MultivectorField> sharp;
  for (std::size_t k = 0; k < n; ++k) sharp.push_back(omega_sharp(omega, LeafwiseForm::basis(chart, {k})));
  // Transverse differentials project to zero, so only leaf pairs survive.
  MultivectorField w(chart, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w.add({chart->leaf_global(i), chart->leaf_global(j)}, evaluate_on(omega.form(), {sharp[i], sharp[j]}));
    }
  }
  return w;
}

namespace {

// A rational point for regularity checks; avoids pi and fixes a seed.
NumericPoint random_point(const std::set<std::string>& symbols, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  NumericPoint p;
  for (const auto& s : symbols) {
    if (s == "pi") continue;
    p[s] = static_cast<long double>(num(rng)) / den(rng);
  }
  return p;
}

// Numeric rank of a matrix at a point via partial pivoting.
std::optional<std::size_t> numeric_rank(const Matrix& m, const NumericPoint& point) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<long double>> a(rows, std::vector<long double>(cols));
  long double scale = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = evaluate(m(r, c), point);
      if (!v) return std::nullopt;
      a[r][c] = *v;
      scale = std::max(scale, std::fabs(*v));
    }
  }
  const long double tol = 1e-12L * std::max(scale, 1.0L);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[best][c])) best = r;
    }
    if (std::fabs(a[best][c]) <= tol) continue;
    std::swap(a[best], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      long double f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<std::size_t> rank_at_random_point(const Matrix& m, std::uint64_t seed) {
  std::set<std::string> symbols;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto s = m(r, c).free_symbols();
      symbols.insert(s.begin(), s.end());
    }
  }
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    auto rank = numeric_rank(m, random_point(symbols, seed + attempt));
    if (rank) return rank;
  }
  return std::nullopt;
}

LeafwiseSymplectic omega_from_bivector(const MultivectorField& w, const ZeroTestOptions& options) {
  if (w.degree() != 2) throw DegenerateStructureError("expected a bivector");
  if (is_subordinate(w, options) != Truth::holds) {
    throw DegenerateStructureError("bivector has components along transverse directions");
  }
  const auto& chart = w.chart();
  const std::size_t n = chart->leaf_dim();
  Matrix block = leaf_block(w);
  auto rank = rank_at_random_point(block, options.seed);
  if (rank && *rank != n) throw DegenerateStructureError("characteristic distribution rank drop");
  Matrix inv;
  try {
    inv = inverse(block, options);
  } catch (const DegenerateStructureError&) {
    throw DegenerateStructureError("characteristic distribution rank drop");
  }
  // w-flat of the tangent basis vector e_k: the 1-form alpha with
  // w(alpha, .) = e_k, i.e. alpha_i = (W^-1)_{k i}.
  std::vector<ExteriorForm> flat;
  for (std::size_t k = 0; k < n; ++k) {
    ExteriorForm alpha(chart, 1);
    for (std::size_t i = 0; i < n; ++i) alpha.add({chart->leaf_global(i)}, inv(k, i));
    flat.push_back(std::move(alpha));
  }
  LeafwiseForm omega(chart, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) omega.add({i, j}, pair_bivector(w, flat[i], flat[j]));
  }
  return LeafwiseSymplectic(std::move(omega), options);
}

std::vector<Expr> monomials(const std::vector<std::string>& symbols, unsigned max_degree) {
  std::vector<Expr> out{Expr(1)};
  std::vector<Expr> frontier{Expr(1)};
  std::vector<std::size_t> last{0};
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<Expr> next;
    std::vector<std::size_t> next_last;
    for (std::size_t m = 0; m < frontier.size(); ++m) {
      for (std::size_t k = last[m]; k < symbols.size(); ++k) {
        next.push_back(frontier[m] * Expr::symbol(symbols[k]));
        next_last.push_back(k);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    last = std::move(next_last);
  }
  return out;
}

MultivectorField intertwining_defect(const MultivectorField& w, const LeafwiseSymplectic& omega,
                                     const LeafwiseForm& alpha) {
  MultivectorField lhs = contravariant_d(omega_sharp_graded(omega, alpha), w);
  MultivectorField rhs = -omega_sharp_graded(omega, leafwise_d(alpha));
  return lhs - rhs;
}

PoissonReport verify_poisson(const MultivectorField& w, unsigned max_degree, const ZeroTestOptions& options) {
  PoissonReport report;
  if (w.degree() != 2) throw DomainError("verify_poisson expects a bivector");
  report.subordinate = is_subordinate(w, options);
  if (report.subordinate == Truth::fails) report.notes.push_back("bivector has transverse components");
  MultivectorField ww = schouten_bracket(w, w);
  report.jacobi = is_zero(ww, options);
  if (report.jacobi == Truth::fails) report.residual = "[w,w] = " + ww.str();

  if (report.subordinate != Truth::holds) {
    report.regular = Truth::fails;
    report.notes.push_back("intertwining identity skipped: bivector is not tangent to the foliation");
    return report;
  }
  std::optional<LeafwiseSymplectic> omega;
  try {
    omega.emplace(omega_from_bivector(w, options));
  } catch (const DegenerateStructureError& e) {
    report.regular = Truth::fails;
    report.notes.push_back(std::string("intertwining identity skipped: ") + e.what());
    return report;
  } catch (const InconclusiveError& e) {
    report.regular = Truth::inconclusive;
    report.notes.push_back(e.what());
    return report;
  }

  const auto& chart = w.chart();
  std::vector<LeafwiseForm> cases;
  for (const auto& m : monomials(chart->all(), max_degree)) cases.push_back(LeafwiseForm::scalar(chart, m));
  if (max_degree >= 1) {
    for (const auto& m : monomials(chart->all(), max_degree - 1)) {
      for (std::size_t i = 0; i < chart->leaf_dim(); ++i) cases.push_back(LeafwiseForm::basis(chart, {i}, m));
    }
  }
  for (const auto& alpha : cases) {
    MultivectorField defect = intertwining_defect(w, *omega, alpha);
    Truth t = is_zero(defect, options);
    report.intertwining = report.intertwining && t;
    ++report.intertwining_cases;
    if (t == Truth::fails) {
      report.residual = "intertwining defect at " + alpha.str() + ": " + defect.str();
      break;
    }
  }
  return report;
}

}  // namespace fq
