#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fracreduce/scalars.hpp"

namespace fracreduce {

// Complex samples on the uniform grid t_k = a + k*(b-a)/n, k = 0..n.
struct GridFunction {
  double a = 0.0;
  double b = 1.0;
  int n = 1;  // number of subintervals; values.size() == n + 1
  std::vector<Complex> values;

  double h() const { return (b - a) / n; }
  double node(int k) const { return a + k * (b - a) / n; }
};

// Validates invariants (b > a, n >= 1, finite samples) and throws DomainError
// on violation; every deserializer funnels through this.
void validate(const GridFunction& g);

GridFunction make_grid(double a, double b, int n);

template <class F>
GridFunction sample_grid(double a, double b, int n, F&& f) {
  GridFunction g{a, b, n, {}};
  g.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) g.values.push_back(Complex(f(g.node(k))));
  return g;
}

// Sup-norm over nodes k >= from (from = 1 skips the base point, where the
// kernel start-up dominates any residual).
double sup_norm(const GridFunction& g, int from = 0);
double sup_distance(const GridFunction& f, const GridFunction& g, int from = 0);

// CSV with header `t,re,im`; the grid is reconstructed from the t column.
void write_csv(const GridFunction& g, std::ostream& out);
GridFunction read_csv(std::istream& in);
void write_csv_file(const GridFunction& g, const std::string& path);
GridFunction read_csv_file(const std::string& path);

// JSON object {"a":..,"b":..,"n":..,"values":[[re,im],...]}, deterministic
// (shortest round-trip doubles, no whitespace variance).
std::string to_json(const GridFunction& g);
GridFunction from_json(const std::string& text);

}  // namespace fracreduce
