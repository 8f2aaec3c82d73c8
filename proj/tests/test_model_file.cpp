#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace fq;
using namespace fq::test;

namespace {

const std::string kHeader = R"(name: t
chart:
  transverse: [s]
  leaf: [q, p]
parameters: [eps]
)";

ParseError parse_error(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("model parsed without error");
  throw;
}

}  // namespace

TEST_CASE("bundled model is read completely") {
  ModelSpec spec = load("darboux3");
  CHECK(spec.name == "darboux3");
  CHECK(spec.chart->transverse() == std::vector<std::string>{"s"});
  CHECK(spec.parameters == std::vector<std::string>{"eps"});
  CHECK(spec.epsilon == R("eps"));
  REQUIRE(spec.omega);
  CHECK(spec.omega->get({1, 0}) == Expr(1));
  CHECK_FALSE(spec.bivector);
  REQUIRE(spec.leafwise_connection);
  CHECK(spec.leafwise_connection->potentials[0] == C("i*eps*p", spec.chart));
  CHECK(spec.hermitian_gauge);
  CHECK(spec.polarization.generators.size() == 1);
  CHECK(spec.polarization.hamiltonians_of.size() == 1);
  CHECK(spec.observables.size() == 4);
  CHECK(spec.observables[0].first == "q");
  CHECK(spec.leaves.size() == 3);
  CHECK(spec.options.seed == 1);
}

TEST_CASE("bivector models derive the symplectic form") {
  ModelSpec spec = parse_model(kHeader + "bivector:\n  - [[p, q], \"2\"]\n");
  QuantumModel m = build_quantum_model(spec);
  CHECK(m.omega.form().get({1, 0}) == Expr::rational(1, 2));
  CHECK(m.epsilon == Expr(1));
}

TEST_CASE("full connections with a splitting") {
  ModelSpec spec = parse_model(kHeader + R"(omega:
  - [[p, q], "1"]
connection:
  transverse: {s: "q"}
  leaf: {q: "i*eps*p"}
  splitting: {q: {s: "1"}}
)");
  REQUIRE(spec.connection);
  CHECK(spec.connection->transverse[0] == C("q", spec.chart));
  CHECK(spec.leafwise().potentials[0] == C("i*eps*p", spec.chart));
  CHECK(spec.splitting_or_default()(0, 0) == Expr(1));
}

TEST_CASE("errors carry line and column") {
  ParseError unknown_key = parse_error(kHeader + "omega:\n  - [[p, q], \"1\"]\ncolour: red\n");
  CHECK(unknown_key.line() == 8);
  CHECK(unknown_key.column() == 1);

  ParseError bad_expression = parse_error(kHeader + "omega:\n  - [[p, q], \"1 + *q\"]\n");
  CHECK(bad_expression.line() == 7);
  CHECK(bad_expression.column() == 19);

  ParseError unknown_symbol = parse_error(kHeader + "omega:\n  - [[p, q], 1 + r]\n");
  CHECK(unknown_symbol.line() == 7);
  CHECK(unknown_symbol.column() == 18);

  ParseError unknown_coordinate = parse_error(kHeader + "omega:\n  - [[p, x], \"1\"]\n");
  CHECK(unknown_coordinate.line() == 7);
  CHECK(unknown_coordinate.column() == 10);

  ParseError yaml = parse_error(kHeader + "omega: [[[p, q], \"1\"]\n");
  CHECK(yaml.line() >= 6);
}

TEST_CASE("structural mistakes are rejected") {
  CHECK_THROWS_AS(parse_model(kHeader), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "omega:\n  - [[p, q], \"1\"]\nbivector:\n  - [[p, q], \"1\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "omega:\n  - [[p, s], \"1\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "omega:\n  - [[p, p], \"1\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "omega:\n  - [[p, q], \"i\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "epsilon: -1\nomega:\n  - [[p, q], \"1\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "omega:\n  - [[p, q], \"1\"]\nleaves:\n  - {q: \"0\"}\n"), ParseError);
  CHECK_THROWS_AS(parse_model(kHeader + "omega:\n  - [[p, q], \"1\"]\nleaves:\n  - {s: \"q\"}\n"), ParseError);
  CHECK_THROWS_AS(parse_model("name: t\nchart:\n  transverse: [s]\n  leaf: [q, p]\nparameters: [q]\n"), ParseError);
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.yaml"), ParseError);
}

TEST_CASE("degenerate structures fail when the model is built") {
  ModelSpec spec = parse_model(kHeader + "omega:\n  - [[p, q], \"q - q\"]\n");
  CHECK_THROWS_AS(build_quantum_model(spec), DegenerateStructureError);
}
