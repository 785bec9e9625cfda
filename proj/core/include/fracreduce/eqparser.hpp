#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracreduce/exppoly.hpp"
#include "fracreduce/fracops.hpp"
#include "fracreduce/genpoly.hpp"
#include "fracreduce/pipeline.hpp"

namespace fracreduce {

// Parsed form of `c I^{r} x + ... = rhs [@base a] [@interval [a,b]]`.
// Coefficients and orders are kept exact (decimal literals are finite
// decimals, hence exact rationals).
struct EquationAst {
  struct Term {
    RatComplex coeff;
    Rational order{0};
  };
  std::vector<Term> lhs;  // canonical: orders strictly descending, merged
  std::string unknown;
  std::optional<ExpPolyX> rhs;            // closed-form right-hand side
  std::optional<std::string> rhs_symbol;  // bare symbol awaiting a CSV binding
  double base = 0.0;
  double interval_a = 0.0;
  double interval_b = 1.0;
  bool has_base = false;
  bool has_interval = false;
};

// Grammar (whitespace-insensitive):
//   equation  := lhs '=' rhs directive*
//   lhs       := term (('+'|'-') term)*
//   term      := [coeff] ('I' '^' '{' rational '}')? ident
//   rhs       := additive expression over exp(.), powers of t, literals
//   coeff     := rational | decimal | '(' re ('+'|'-') im 'i' ')'
//   directive := '@base' number | '@interval' '[' number ',' number ']'
// Orders must be brace-delimited. Errors: SyntaxError (with line, column and
// an expected-token note), MultipleUnknownsError, NegativeOrderError.
EquationAst parse_equation(const std::string& text);

// Standalone generalized-polynomial parser, same literal syntax with terms
// `c X^{p/q}`; accepts the printer's output (exact round-trip).
GenPolyX parse_genpoly(const std::string& text);

std::string print(const EquationAst& ast);
std::string print(const GenPoly& p);
std::string print(const GenPolyX& p);
std::string print(const FracOperator& T);
std::string print(const ExpPoly& e);
std::string print(const ExpPolyX& e);

// Semantic pass: bind the AST to a solvable Equation. A bare rhs symbol
// requires rhs_csv (UnboundSymbolError otherwise); the grid, when given, must
// match the declared interval.
Equation to_equation(const EquationAst& ast, std::optional<GridFunction> rhs_csv = {});

}  // namespace fracreduce
