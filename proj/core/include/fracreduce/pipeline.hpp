#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fracreduce/conjugate.hpp"
#include "fracreduce/exppoly.hpp"
#include "fracreduce/fracops.hpp"
#include "fracreduce/oie_solver.hpp"

namespace fracreduce {

// A fractional-order integral equation T x = w on [a, b]. The parser always
// produces exact-rational data; symbol_exact is absent only when the operator
// was built from floating data directly.
struct Equation {
  FracOperator T;  // T.base == a
  std::optional<GenPolyX> symbol_exact;
  std::variant<ExpPolyX, GridFunction> rhs;
  double a = 0.0;
  double b = 1.0;
};

enum class Method { checking, computing };

struct SolveConfig {
  int n = 1024;
  std::optional<double> tol;  // default: max(1e-3, 10 * estimated quadrature error)
  Method method = Method::computing;
  bool minimal = true;
  double cluster_tol = 1e-7;
};

// The coefficient<->order isomorphism between operators and their symbols.
GenPoly operator_to_genpoly(const FracOperator& T);
FracOperator genpoly_to_operator(const GenPoly& p, double base);
GenPoly to_floating(const GenPolyX& p);
FracOperator operator_from_exact(const GenPolyX& p, double base);

// Purely algebraic reduction of the full symbol (no stripping): T-hat and the
// coefficients c_0..c_n of T o T-hat = c_0 I^n + ... + c_n. Runs exact when
// the symbol is exact and the construction succeeds, floating otherwise.
struct ReduceOutcome {
  FracOperator t_hat;
  std::vector<Complex> reduced_coeffs;  // c_0..c_n
  std::optional<GenPolyX> t_hat_exact;
  std::optional<std::vector<RatComplex>> reduced_exact;
  std::int64_t q = 1;
  double integrality_defect = 0.0;
  bool exact = false;
};

ReduceOutcome reduce(const Equation& eq, bool minimal = true, double cluster_tol = 1e-7);

struct SolveReport {
  Method method = Method::computing;
  bool accepted = false;
  double residual_sup = 0.0;
  double tol = 0.0;
  int grid_n = 0;
  FracOperator t_hat;                   // conjugate actually used by the method
  std::vector<Complex> reduced_coeffs;  // integer-order equation that was solved
  GridFunction solution;
  std::optional<ExpPolyX> closed_exact;  // present when the exact closed route ran
  std::optional<ExpPoly> closed;         // present when any closed route ran
  std::vector<std::string> diagnostics;
};

// Checking method: solve (T-hat o T) v = T-hat w, then validate v against the
// original equation. Computing method: solve (T o T-hat) y = w and return
// x = T-hat y. Both certify with the residual of the original equation and
// throw NoSolutionError when it is grossly violated (no L1 solution); a
// residual between tol and the gross threshold yields accepted = false.
SolveReport solve_checking(const Equation& eq, const SolveConfig& cfg = {});
SolveReport solve_computing(const Equation& eq, const SolveConfig& cfg = {});

// sup-norm of apply_operator(T, x) - w over the nodes excluding t_0.
double residual(const Equation& eq, const GridFunction& x);

struct ConvergenceRow {
  int n = 0;
  double residual_sup = 0.0;
  std::optional<double> observed_order;  // log2 ratio vs previous row
  bool saturated = false;                // residual at round-off level
};

std::vector<ConvergenceRow> convergence_study(const Equation& eq, const std::vector<int>& ns,
                                              const SolveConfig& cfg = {});

}  // namespace fracreduce
