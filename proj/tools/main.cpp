// fracreduce -- reduce and solve linear fractional-order integral equations.
//
// Exit codes: 0 solved and accepted, 2 parse/binding error, 3 reduction or
// evaluation error, 4 no integrable solution, 5 residual above tolerance.
// Diagnostics go to stderr; data goes to stdout and files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracreduce/eqparser.hpp"
#include "fracreduce/numio.hpp"
#include "fracreduce/pipeline.hpp"
#include "fracreduce/special.hpp"

using json = nlohmann::ordered_json;
using namespace fracreduce;

namespace {

struct CliConfig {
  int grid_n = 1024;
  double tol = 1e-3;
  bool tol_set = false;
  std::string method = "computing";
  bool naive = false;
  std::string format = "text";
  std::string rhs_csv;
  std::string out;
};

Equation load_equation(const std::string& text, const CliConfig& cli) {
  const EquationAst ast = parse_equation(text);
  std::optional<GridFunction> bound;
  if (!cli.rhs_csv.empty()) bound = read_csv_file(cli.rhs_csv);
  return to_equation(ast, std::move(bound));
}

SolveConfig to_solve_config(const CliConfig& cli) {
  SolveConfig cfg;
  cfg.n = cli.grid_n;
  if (cli.tol_set) cfg.tol = cli.tol;
  cfg.method = cli.method == "checking" ? Method::checking : Method::computing;
  cfg.minimal = !cli.naive;
  return cfg;
}

// reduced c_0..c_n as a polynomial in X for display
GenPoly reduced_poly(const std::vector<Complex>& c) {
  GenPoly p;
  const auto n = static_cast<std::int64_t>(c.size()) - 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != Complex{}) p.terms.push_back({c[i], Rational(n - static_cast<std::int64_t>(i))});
  return p;
}

GenPolyX reduced_poly(const std::vector<RatComplex>& c) {
  GenPolyX p;
  const auto n = static_cast<std::int64_t>(c.size()) - 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) p.terms.push_back({c[i], Rational(n - static_cast<std::int64_t>(i))});
  return p;
}

std::string p_hat_str(const ReduceOutcome& r) {
  if (r.t_hat_exact) return print(*r.t_hat_exact);
  return print(operator_to_genpoly(r.t_hat));
}

std::string reduced_str(const ReduceOutcome& r) {
  if (r.reduced_exact) return print(reduced_poly(*r.reduced_exact));
  return print(reduced_poly(r.reduced_coeffs));
}

json reduction_json(const ReduceOutcome& r) {
  json j;
  j["p_hat"] = p_hat_str(r);
  j["reduced"] = reduced_str(r);
  j["degree_p_hat"] =
      r.t_hat.terms.empty() ? json(nullptr) : json(to_string(r.t_hat.terms.front().order));
  j["degree_reduced"] = static_cast<std::int64_t>(r.reduced_coeffs.size()) - 1;
  j["exact"] = r.exact;
  j["integrality_defect"] = r.integrality_defect;
  return j;
}

int cmd_reduce(const std::string& text, const CliConfig& cli) {
  const Equation eq = load_equation(text, cli);
  const ReduceOutcome minimal = reduce(eq, true);
  const ReduceOutcome naive = reduce(eq, false);
  const std::string p = eq.symbol_exact ? print(*eq.symbol_exact) : print(operator_to_genpoly(eq.T));
  if (cli.format == "json") {
    json j;
    j["p"] = p;
    j["q"] = minimal.q;
    j["naive"] = reduction_json(naive);
    j["minimal"] = reduction_json(minimal);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "p                   = " << p << "\n";
  std::cout << "q                   = " << minimal.q << "\n";
  std::cout << "p_hat   (naive)     = " << p_hat_str(naive) << "\n";
  std::cout << "reduced (naive)     = " << reduced_str(naive) << "   [degree "
            << static_cast<std::int64_t>(naive.reduced_coeffs.size()) - 1 << "]\n";
  std::cout << "p_hat   (minimal)   = " << p_hat_str(minimal) << "\n";
  std::cout << "reduced (minimal)   = " << reduced_str(minimal) << "   [degree "
            << static_cast<std::int64_t>(minimal.reduced_coeffs.size()) - 1 << "]\n";
  std::cout << "integrality defect  = " << format_double(minimal.integrality_defect) << "\n";
  return 0;
}

json report_json(const SolveReport& rep, const std::string& csv_path) {
  json j;
  j["method"] = rep.method == Method::checking ? "checking" : "computing";
  j["accepted"] = rep.accepted;
  j["residual_sup"] = rep.residual_sup;
  j["grid_n"] = rep.grid_n;
  json th = json::array();
  for (const auto& t : rep.t_hat.terms)
    th.push_back({t.coeff.real(), t.coeff.imag(), t.order.num, t.order.den});
  j["t_hat"] = th;
  json rc = json::array();
  for (const auto& c : rep.reduced_coeffs) rc.push_back({c.real(), c.imag()});
  j["reduced_coeffs"] = rc;
  json sol = json::object();
  if (rep.closed_exact)
    sol["closed_form"] = print(*rep.closed_exact);
  else if (rep.closed)
    sol["closed_form"] = print(*rep.closed);
  if (!csv_path.empty()) sol["csv_path"] = csv_path;
  j["solution"] = sol;
  return j;
}

int cmd_solve(const std::string& text, const CliConfig& cli) {
  const Equation eq = load_equation(text, cli);
  const SolveConfig cfg = to_solve_config(cli);
  const SolveReport rep =
      cfg.method == Method::checking ? solve_checking(eq, cfg) : solve_computing(eq, cfg);

  const std::string csv_path = cli.out.empty() ? "solution.csv" : cli.out;
  write_csv_file(rep.solution, csv_path);
  for (const auto& d : rep.diagnostics) std::cerr << "note: " << d << "\n";

  if (cli.format == "json") {
    std::cout << report_json(rep, csv_path).dump() << "\n";
  } else {
    std::cout << "method        : " << (rep.method == Method::checking ? "checking" : "computing")
              << "\n";
    std::cout << "t_hat         : " << print(rep.t_hat) << "\n";
    std::cout << "reduced       : " << print(reduced_poly(rep.reduced_coeffs)) << "\n";
    std::cout << "grid n        : " << rep.grid_n << "\n";
    std::cout << "residual sup  : " << format_double(rep.residual_sup) << "  (tol "
              << format_double(rep.tol) << ")\n";
    if (rep.closed_exact)
      std::cout << "closed form y : " << print(*rep.closed_exact) << "\n";
    else if (rep.closed)
      std::cout << "closed form y : " << print(*rep.closed) << "\n";
    if (rep.closed_exact || rep.closed)
      std::cout << "                (reduced-equation solution; x = t_hat applied to y)\n";
    std::cout << "solution csv  : " << csv_path << "\n";
    std::cout << "accepted      : " << (rep.accepted ? "yes" : "no") << "\n";
  }
  return rep.accepted ? 0 : 5;
}

int cmd_verify(const std::string& text, const std::string& solution_csv, const CliConfig& cli) {
  const Equation eq = load_equation(text, cli);
  const GridFunction x = read_csv_file(solution_csv);
  const double r = residual(eq, x);
  const bool ok = r <= cli.tol;
  if (cli.format == "json") {
    json j;
    j["residual_sup"] = r;
    j["tol"] = cli.tol;
    j["accepted"] = ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "residual sup : " << format_double(r) << "  (tol " << format_double(cli.tol)
              << ")\n";
    std::cout << "accepted     : " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 5;
}

int cmd_ml(double alpha, double beta, double z) {
  const Complex v = mittag_leffler(alpha, beta, Complex{z, 0.0});
  if (v.imag() == 0.0)
    std::cout << format_double(v.real()) << "\n";
  else
    std::cout << "(" << format_double(v.real()) << (v.imag() < 0 ? "-" : "+")
              << format_double(std::abs(v.imag())) << "i)\n";
  return 0;
}

int cmd_convergence(const std::string& text, const std::vector<int>& ns, const CliConfig& cli) {
  const Equation eq = load_equation(text, cli);
  const SolveConfig cfg = to_solve_config(cli);
  const auto rows = convergence_study(eq, ns, cfg);
  if (cli.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json row;
      row["n"] = r.n;
      row["residual_sup"] = r.residual_sup;
      row["observed_order"] = r.observed_order ? json(*r.observed_order) : json(nullptr);
      row["saturated"] = r.saturated;
      j.push_back(row);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::printf("%8s  %14s  %10s\n", "n", "residual", "order");
    for (const auto& r : rows) {
      std::printf("%8d  %14.6e  %10s\n", r.n, r.residual_sup,
                  r.saturated ? "saturated"
                  : r.observed_order ? format_double(*r.observed_order).c_str()
                                     : "-");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracreduce: conjugate-operator reduction and solving of "
               "fractional-order integral equations"};
  app.require_subcommand(1);

  CliConfig cli;
  std::string equation;
  std::string solution_csv;
  std::vector<int> ns{256, 512, 1024, 2048};
  double ml_alpha = 1.0, ml_beta = 1.0, ml_z = 0.0;

  auto add_common = [&](CLI::App* sub, bool with_solver_flags) {
    sub->add_option("--format", cli.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--rhs-csv", cli.rhs_csv, "CSV file bound to a symbolic right-hand side");
    if (with_solver_flags) {
      sub->add_option("--n", cli.grid_n, "Grid resolution")->check(CLI::Range(16, 1 << 24));
      sub->add_option("--tol", cli.tol, "Acceptance tolerance")
          ->check(CLI::PositiveNumber)
          ->each([&](const std::string&) { cli.tol_set = true; });
      sub->add_option("--method", cli.method, "Solution method")
          ->check(CLI::IsMember({"checking", "computing"}));
      sub->add_flag("--naive", cli.naive, "Use the naive conjugate instead of the minimal one");
    }
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the conjugate operator and the reduction");
  reduce_cmd->add_option("equation", equation, "Equation text")->required();
  add_common(reduce_cmd, false);
  reduce_cmd->add_flag("--naive", cli.naive, "(accepted for symmetry; both forms are printed)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve the equation and certify the residual");
  solve_cmd->add_option("equation", equation, "Equation text")->required();
  add_common(solve_cmd, true);
  solve_cmd->add_option("--out", cli.out, "Path for the solution CSV (default solution.csv)");

  auto* verify_cmd = app.add_subcommand("verify", "Residual-check a solution CSV");
  verify_cmd->add_option("equation", equation, "Equation text")->required();
  verify_cmd->add_option("solution", solution_csv, "Solution CSV file")->required();
  add_common(verify_cmd, false);
  verify_cmd->add_option("--tol", cli.tol, "Acceptance tolerance")->check(CLI::PositiveNumber);

  auto* ml_cmd = app.add_subcommand("ml", "Evaluate the two-parameter Mittag-Leffler function");
  ml_cmd->add_option("alpha", ml_alpha, "alpha > 0")->required();
  ml_cmd->add_option("beta", ml_beta, "beta")->required();
  ml_cmd->add_option("z", ml_z, "argument")->required();

  auto* conv_cmd = app.add_subcommand("convergence", "Residual vs grid resolution table");
  conv_cmd->add_option("equation", equation, "Equation text")->required();
  conv_cmd->add_option("--grids", ns, "Grid resolutions (ascending)")->delimiter(',');
  add_common(conv_cmd, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(equation, cli);
    if (solve_cmd->parsed()) return cmd_solve(equation, cli);
    if (verify_cmd->parsed()) return cmd_verify(equation, solution_csv, cli);
    if (ml_cmd->parsed()) return cmd_ml(ml_alpha, ml_beta, ml_z);
    if (conv_cmd->parsed()) return cmd_convergence(equation, ns, cli);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MultipleUnknownsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NegativeOrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnboundSymbolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NoSolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
