#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace fq;
using namespace fq::test;

namespace {

LeafwiseForm darboux_omega(const ChartPtr& chart, const std::string& coefficient = "1") {
  LeafwiseForm o(chart, 2);
  o.add({1, 0}, R(coefficient, chart));  // d~p ^ d~q
  return o;
}

LeafwiseConnection leafwise(const ChartPtr& chart, const std::string& aq, const std::string& ap) {
  return LeafwiseConnection{chart, {C(aq, chart), C(ap, chart)}};
}

Complex random_complex(Sampler& s, const ChartPtr& chart) { return s.complex_polynomial(chart->all(), 2); }

}  // namespace

TEST_CASE("leafwise curvature examples") {
  auto chart = chart3();
  ComplexLeafwiseForm r = leafwise_curvature(leafwise(chart, "i*eps*p", "0"));
  CHECK(r.get({1, 0}) == C("i*eps", chart));
  CHECK(leafwise_curvature(LeafwiseConnection::zero(chart)).is_structurally_zero());
  // A = d~(q p)
  CHECK(leafwise_curvature(leafwise(chart, "p", "q")).is_structurally_zero());
}

TEST_CASE("prequantization condition examples") {
  auto chart = chart3();
  const Expr eps = R("eps", chart);
  CHECK(check_prequantization(leafwise(chart, "i*eps*p", "0"), darboux_omega(chart), eps) == Truth::holds);
  CHECK(check_prequantization(LeafwiseConnection::zero(chart), darboux_omega(chart), eps) == Truth::fails);
  CHECK(check_prequantization(leafwise(chart, "i*eps*(1 + q^2)*p", "0"), darboux_omega(chart, "1 + q^2"), eps) ==
        Truth::holds);
  CHECK(check_prequantization(leafwise(chart, "-i*eps*p", "0"), darboux_omega(chart), eps) == Truth::fails);
}

TEST_CASE("commutator of covariant derivatives along coordinates") {
  // With nabla_i s = d_i s - A_i s, expanding both orders by hand gives
  // [nabla_q, nabla_p] s = -(d_q A_p - d_p A_q) s.
  auto chart = chart3();
  Sampler s(51);
  const MultivectorField dq = leaf_vector_field(chart, {Expr(1), Expr(0)});
  const MultivectorField dp = leaf_vector_field(chart, {Expr(0), Expr(1)});
  for (int k = 0; k < 20; ++k) {
    LeafwiseConnection a{chart, {random_complex(s, chart), random_complex(s, chart)}};
    Section sec = random_complex(s, chart);
    Section lhs = covariant_derivative(a, dq, covariant_derivative(a, dp, sec)) -
                  covariant_derivative(a, dp, covariant_derivative(a, dq, sec));
    Complex rqp = diff(a.potentials[1], "q") - diff(a.potentials[0], "p");
    CHECK(same(lhs, -rqp * sec));
    CHECK(same(leafwise_curvature(a).get({0, 1}), rqp));
  }
}

TEST_CASE("curvature endomorphism identity on random data") {
  Sampler s(52);
  for (const auto& chart : {chart3(), chart5()}) {
    for (int k = 0; k < 10; ++k) {
      LeafwiseConnection a{chart, {}};
      for (std::size_t i = 0; i < chart->leaf_dim(); ++i) a.potentials.push_back(random_complex(s, chart));
      std::vector<Expr> u, v;
      for (std::size_t i = 0; i < chart->leaf_dim(); ++i) {
        u.push_back(s.polynomial(chart->all(), 2));
        v.push_back(s.polynomial(chart->all(), 2));
      }
      CHECK(zero(curvature_endomorphism_defect(a, leaf_vector_field(chart, u), leaf_vector_field(chart, v),
                                               random_complex(s, chart))));
    }
  }
}

TEST_CASE("restriction and lift examples") {
  auto chart = chart3();
  Connection g{chart, {C("s*q", chart)}, {C("i*eps*p", chart), Complex()}};
  CHECK(restrict_connection(g).potentials[0] == C("i*eps*p", chart));
  CHECK(restrict_connection(Connection::zero(chart)).potentials[1].is_structurally_zero());

  LeafwiseConnection a = leafwise(chart, "i*eps*p", "0");
  Connection plain = lift_leafwise_connection(a, Connection::zero(chart), Splitting(chart));
  CHECK(plain.transverse[0].is_structurally_zero());
  CHECK(plain.leaf[0] == C("i*eps*p", chart));

  Splitting b(chart, {{Expr(1)}, {Expr(0)}});
  Connection lifted = lift_leafwise_connection(a, Connection::zero(chart), b);
  CHECK(lifted.transverse[0] == C("-i*eps*p", chart));
  CHECK(lifted.leaf[0] == C("i*eps*p", chart));
}

TEST_CASE("lift round trip and projection of curvature on random data") {
  Sampler s(53);
  for (const auto& chart : {chart3(), chart5()}) {
    for (int k = 0; k < 15; ++k) {
      LeafwiseConnection a{chart, {}};
      Connection ref{chart, {}, {}};
      std::vector<std::vector<Expr>> b(chart->leaf_dim(), std::vector<Expr>(chart->codim()));
      for (std::size_t i = 0; i < chart->leaf_dim(); ++i) {
        a.potentials.push_back(random_complex(s, chart));
        ref.leaf.push_back(random_complex(s, chart));
        for (auto& x : b[i]) x = s.polynomial(chart->all(), 1);
      }
      for (std::size_t l = 0; l < chart->codim(); ++l) ref.transverse.push_back(random_complex(s, chart));
      Connection lifted = lift_leafwise_connection(a, ref, Splitting(chart, b));
      LeafwiseConnection back = restrict_connection(lifted);
      for (std::size_t i = 0; i < a.potentials.size(); ++i) CHECK(back.potentials[i] == a.potentials[i]);
      CHECK(zero(project_leafwise(curvature(lifted)) - leafwise_curvature(a)));
    }
  }
}

TEST_CASE("gauge shifts leave the curvature unchanged") {
  auto chart = chart3();
  Sampler s(54);
  LeafwiseConnection a = leafwise(chart, "i*eps*p", "0");
  for (int k = 0; k < 20; ++k) {
    Complex chi = s.complex_polynomial(chart->all(), 3);
    CHECK(zero(leafwise_curvature(gauge_shift(a, chi)) - leafwise_curvature(a)));
  }
}

TEST_CASE("unitary reduction examples and chain") {
  auto chart = chart3();
  Connection g{chart, {Complex()}, {C("3 + i*eps*p", chart), Complex()}};
  Connection u = unitary_reduction(g, true);
  CHECK(u.leaf[0] == C("i*eps*p", chart));
  CHECK(unitary_reduction(u, true).leaf[0] == u.leaf[0]);
  CHECK(preserves_hermitian_form(u) == Truth::holds);
  CHECK(preserves_hermitian_form(g) == Truth::fails);
  CHECK_THROWS_AS(unitary_reduction(g, false), DomainError);

  // A real gauge term spoils Hermitian compatibility but not the curvature
  // condition; the reduction restores the former and keeps the latter.
  Sampler s(55);
  const Expr eps = R("eps", chart);
  LeafwiseConnection a = leafwise(chart, "i*eps*p", "0");
  for (int k = 0; k < 10; ++k) {
    LeafwiseConnection shifted = gauge_shift(a, Complex(s.polynomial(chart->all(), 3), s.polynomial(chart->all(), 3)));
    Connection full = lift_leafwise_connection(shifted, Connection::zero(chart), Splitting(chart));
    Connection red = unitary_reduction(full, true);
    CHECK(preserves_hermitian_form(red) == Truth::holds);
    CHECK(check_prequantization(restrict_connection(red), darboux_omega(chart), eps) == Truth::holds);
    CHECK(zero(curvature(red) - complexify(ExteriorForm(chart, 2), imag_part(curvature(full)))));
  }
}

TEST_CASE("Chern form of the Darboux connection") {
  // (i / 2 pi) * (i eps dp ^ dq) = -eps / (2 pi) dp ^ dq
  auto chart = chart3();
  Connection g{chart, {Complex()}, {C("i*eps*p", chart), Complex()}};
  ExteriorForm c1 = chern_form(g);
  CHECK(same(c1.get({2, 1}), R("-eps/(2*pi)", chart)));
  CHECK(c1.get({0, 1}).is_structurally_zero());
  CHECK(chern_form(Connection::zero(chart)).is_structurally_zero());
  CHECK_THROWS_AS(chern_form(Connection{chart, {Complex()}, {C("p", chart), Complex()}}), DomainError);
}

TEST_CASE("leaf pullback of connections") {
  auto chart = chart3();
  LeafSlice one(chart, {{"s", Expr(1)}});
  LeafwiseConnection a = leafwise(chart, "i*eps*s*p", "0");
  LeafwiseConnection af = pullback_connection_to_leaf(a, one);
  CHECK(af.potentials[0] == C("i*eps*p", chart));
  CHECK(*af.chart == *one.leaf_chart());

  LeafwiseForm omega = darboux_omega(chart, "s");
  LeafwiseForm omega_f(one.leaf_chart(), 2);
  const ExteriorForm pulled = pullback_to_leaf(omega, one);
  for (const auto& [idx, c] : pulled.components()) omega_f.add(idx, c);
  CHECK(check_prequantization(af, omega_f, R("eps", chart)) == Truth::holds);
  CHECK(pullback_connection_to_leaf(LeafwiseConnection::zero(chart), one).potentials[1].is_structurally_zero());
}
