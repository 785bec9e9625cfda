#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fracreduce/eqparser.hpp"

using namespace fracreduce;

namespace {
const std::string kGolden = "I^{1} x + 5 I^{3/4} x + 2 I^{1/2} x - 20 I^{1/4} x - 24 x = exp(t)";
}

TEST_CASE("golden equation round-trips verbatim") {
  auto ast = parse_equation(kGolden);
  CHECK(print(ast) == kGolden);
  REQUIRE(ast.lhs.size() == 5);
  CHECK(ast.lhs[0].order == Rational(1));
  CHECK(ast.lhs[0].coeff == RatComplex(1));
  CHECK(ast.lhs[3].coeff == RatComplex(-20));
  CHECK(ast.lhs[4].order == Rational(0));
  CHECK(ast.lhs[4].coeff == RatComplex(-24));
  CHECK(ast.unknown == "x");
  REQUIRE(ast.rhs.has_value());
  REQUIRE(ast.rhs->terms.size() == 1);
  CHECK(ast.rhs->terms[0].lambda == RatComplex(1));
}

TEST_CASE("lhs terms merge and sort like the symbol algebra") {
  auto ast = parse_equation("2 I^{1/2} x + x + 3 I^{1/2} x = t");
  REQUIRE(ast.lhs.size() == 2);
  CHECK(ast.lhs[0].order == Rational(1, 2));
  CHECK(ast.lhs[0].coeff == RatComplex(5));
  CHECK(ast.lhs[1].order == Rational(0));
}

TEST_CASE("decimal and scientific literals are exact rationals") {
  CHECK(parse_equation("0.25 x = t").lhs[0].coeff == RatComplex(BigRat(1, 4)));
  CHECK(parse_equation("2.5e-1 x = t").lhs[0].coeff == RatComplex(BigRat(1, 4)));
  CHECK(parse_equation("1e2 x = t").lhs[0].coeff == RatComplex(100));
  CHECK(parse_equation("0.1 x = t").lhs[0].coeff == RatComplex(BigRat(1, 10)));
  CHECK(parse_equation("3/4 x = t").lhs[0].coeff == RatComplex(BigRat(3, 4)));
}

TEST_CASE("complex coefficient literals") {
  auto ast = parse_equation("(1+2i) x = t");
  CHECK(ast.lhs[0].coeff == RatComplex(BigRat(1), BigRat(2)));
  auto neg = parse_equation("(1/2-3i) I^{1/2} x = t");
  CHECK(neg.lhs[0].coeff == RatComplex(BigRat(1, 2), BigRat(-3)));
}

TEST_CASE("right-hand side forms") {
  SUBCASE("exponential argument variants") {
    for (const auto& [text, lam] : std::vector<std::pair<std::string, BigRat>>{
             {"exp(t)", BigRat(1)},
             {"exp(-t)", BigRat(-1)},
             {"exp(2t)", BigRat(2)},
             {"exp(t/16)", BigRat(1, 16)},
             {"exp(-t/3)", BigRat(-1, 3)},
             {"exp((2/3) t)", BigRat(2, 3)}}) {
      auto ast = parse_equation("x = " + text);
      REQUIRE(ast.rhs.has_value());
      REQUIRE(ast.rhs->terms.size() == 1);
      CHECK(ast.rhs->terms[0].lambda == RatComplex(lam));
    }
    auto cx = parse_equation("x = exp((1+1i) t)");
    CHECK(cx.rhs->terms[0].lambda == RatComplex(BigRat(1), BigRat(1)));
  }

  SUBCASE("polynomial pieces and implicit products") {
    auto ast = parse_equation("x = 2 t^2 exp(t) - 3 t + 1");
    REQUIRE(ast.rhs.has_value());
    REQUIRE(ast.rhs->terms.size() == 2);
    CHECK(ast.rhs->terms[0].lambda == RatComplex(0));
    CHECK(ast.rhs->terms[0].poly.c[0] == RatComplex(1));
    CHECK(ast.rhs->terms[0].poly.c[1] == RatComplex(-3));
    CHECK(ast.rhs->terms[1].poly.c[2] == RatComplex(2));
  }

  SUBCASE("zero right-hand side") {
    auto ast = parse_equation("x = 0");
    REQUIRE(ast.rhs.has_value());
    CHECK(ast.rhs->is_zero());
  }

  SUBCASE("bare symbol awaits a binding") {
    auto ast = parse_equation("I^{1/2} x = w");
    CHECK_FALSE(ast.rhs.has_value());
    REQUIRE(ast.rhs_symbol.has_value());
    CHECK(*ast.rhs_symbol == "w");
  }
}

TEST_CASE("directives") {
  auto ast = parse_equation("x = t @base 2");
  CHECK(ast.has_base);
  CHECK(ast.base == doctest::Approx(2.0));
  auto eq = to_equation(ast);
  CHECK(eq.a == doctest::Approx(2.0));
  CHECK(eq.b == doctest::Approx(3.0));  // default width 1

  auto ast2 = parse_equation("x = t @interval [1, 4]");
  auto eq2 = to_equation(ast2);
  CHECK(eq2.a == doctest::Approx(1.0));
  CHECK(eq2.b == doctest::Approx(4.0));
  CHECK(eq2.T.base == doctest::Approx(1.0));

  CHECK_NOTHROW(to_equation(parse_equation("x = t @base 1 @interval [1, 2]")));
  CHECK_THROWS_AS(to_equation(parse_equation("x = t @base 0 @interval [1, 2]")),
                  BaseMismatchError);
  CHECK_THROWS_AS(to_equation(parse_equation("x = t @interval [2, 2]")), DomainError);
  CHECK_THROWS_AS(parse_equation("x = t @base 1 @base 2"), SyntaxError);
  CHECK_THROWS_AS(parse_equation("x = t @frequency 3"), SyntaxError);
}

TEST_CASE("errors carry positions and names") {
  try {
    parse_equation("I^{1} x +\n5 I^{} x = t");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 0);
  }
  CHECK_THROWS_AS(parse_equation("x + y = t"), MultipleUnknownsError);
  CHECK_THROWS_AS(parse_equation("I^{-1/2} x = t"), NegativeOrderError);
  CHECK_THROWS_AS(parse_equation(""), SyntaxError);
  CHECK_THROWS_AS(parse_equation("x = "), SyntaxError);
  CHECK_THROWS_AS(parse_equation("x = t trailing"), SyntaxError);
  CHECK_THROWS_AS(parse_equation("I^{1/0} x = t"), SyntaxError);
  CHECK_THROWS_AS(to_equation(parse_equation("x = w")), UnboundSymbolError);
}

TEST_CASE("csv binding must match the declared interval") {
  auto ast = parse_equation("x = w @interval [0, 2]");
  auto good = sample_grid(0.0, 2.0, 16, [](double t) { return t; });
  auto eq = to_equation(ast, good);
  REQUIRE(std::holds_alternative<GridFunction>(eq.rhs));
  CHECK(std::get<GridFunction>(eq.rhs).n == 16);

  auto bad = sample_grid(0.0, 1.0, 16, [](double t) { return t; });
  CHECK_THROWS_AS(to_equation(ast, bad), BaseMismatchError);
}

TEST_CASE("to_equation builds the exact symbol") {
  auto eq = to_equation(parse_equation(kGolden));
  REQUIRE(eq.symbol_exact.has_value());
  REQUIRE(eq.symbol_exact->terms.size() == 5);
  CHECK(eq.symbol_exact->terms[0].exponent == Rational(1));
  CHECK(eq.symbol_exact->terms[4].coeff == RatComplex(-24));
  REQUIRE(eq.T.terms.size() == 5);
  CHECK(eq.T.terms[1].coeff == Complex{5, 0});
}

TEST_CASE("genpoly parsing and printing") {
  auto p = parse_genpoly("X^2 - 5 X + 4");
  REQUIRE(p.terms.size() == 3);
  CHECK(p.terms[0].exponent == Rational(2));
  CHECK(p.terms[1].coeff == RatComplex(-5));
  CHECK(print(p) == "X^2 - 5 X + 4");

  auto frac = parse_genpoly("X^{3/2} + (1/2) X^{1/2} - 1");
  CHECK(print(frac) == "X^{3/2} + (1/2) X^{1/2} - 1");
  CHECK(parse_genpoly("0").empty());
  CHECK(print(GenPolyX{}) == "0");
  CHECK_THROWS_AS(parse_genpoly("X^{-1/2}"), NegativeExponentError);
  CHECK_THROWS_AS(parse_genpoly("X^"), SyntaxError);
}

TEST_CASE("operator printing") {
  auto T = make_operator(0.0, {{{1, 0}, {3, 2}}, {{-5, 0}, {1, 2}}, {{2, 0}, {0}}});
  CHECK(print(T) == "I^{3/2} - 5 I^{1/2} + 2");
  CHECK(print(FracOperator{}) == "0");
}

TEST_CASE("property: printing is a fixed point of parse-print") {
  std::mt19937 rng(911);
  std::uniform_int_distribution<std::int64_t> num(-12, 12);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  std::uniform_int_distribution<int> nterms(1, 4), npoly(1, 3), flag(0, 1);

  auto rnd_rat = [&] {
    std::int64_t n = num(rng);
    if (n == 0) n = 7;
    return BigRat(n, den(rng));
  };

  for (int trial = 0; trial < 200; ++trial) {
    EquationAst ast;
    ast.unknown = "x";
    // distinct descending orders with nonzero exact coefficients
    std::vector<Rational> orders;
    for (int i = 0; i < nterms(rng); ++i) {
      Rational r(std::abs(num(rng)), den(rng));
      if (std::find(orders.begin(), orders.end(), r) == orders.end()) orders.push_back(r);
    }
    std::sort(orders.begin(), orders.end(), [](const Rational& a, const Rational& b) { return b < a; });
    for (const auto& r : orders) {
      RatComplex c{rnd_rat()};
      if (flag(rng)) c.im = rnd_rat();
      ast.lhs.push_back({c, r});
    }

    std::vector<ExpTerm<RatComplex>> rhs_terms;
    for (int i = 0, m = npoly(rng); i < m; ++i) {
      ExpTerm<RatComplex> t{RatComplex(rnd_rat()), {}};
      if (flag(rng)) t.lambda = RatComplex(0);
      for (int j = 0, d = npoly(rng); j < d; ++j) t.poly.c.push_back(RatComplex(rnd_rat()));
      rhs_terms.push_back(std::move(t));
    }
    ast.rhs = make_exppoly(std::move(rhs_terms));

    if (flag(rng)) {
      ast.has_interval = true;
      ast.interval_a = 0.0;
      ast.interval_b = 2.0;
    }

    const std::string once = print(ast);
    CAPTURE(once);
    const std::string twice = print(parse_equation(once));
    CHECK(once == twice);
  }
}
