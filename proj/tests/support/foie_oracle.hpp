#pragma once

// Independent direct solver for  c_id x + sum_i c_i I^{a_i} x = w, written
// from the product-integration weights alone.  Shares no code with the
// library solver (its own weights, own accumulation order, long double
// throughout) so the two can legitimately disagree.
//
// Solutions generally carry a t^{beta} cusp at the base point (beta = the
// smallest fractional order), which piecewise-linear stepping on a uniform
// grid resolves only at order beta in the first few cells.  The node vector
// therefore refines the first cell geometrically; piecewise-linear product
// weights are taken over arbitrary nodes.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace testsupport {

struct FoieTerm {
  double coeff = 0.0;
  double order = 0.0;  // > 0; the identity coefficient is passed separately
};

// Weight of x(t_k) itself from its trailing cell of width h: h^r / Gamma(r+2).
inline long double foie_diag_weight(long double h, long double r) {
  return std::pow(h, r) / std::tgamma(r + 2.0L);
}

// Solves for x on t_k = a + k h, k = 0..n.  `rhs` is sampled pointwise.
inline std::vector<double> solve_foie_direct(double c_id, const std::vector<FoieTerm>& terms,
                                             const std::function<double(double)>& rhs, double a,
                                             double b, std::size_t n) {
  if (n < 1) throw std::invalid_argument("solve_foie_direct: need n >= 1");
  if (c_id == 0.0) throw std::invalid_argument("solve_foie_direct: zero identity coefficient");
  const long double h = (static_cast<long double>(b) - a) / static_cast<long double>(n);

  // nodes: 0, then a geometric ladder up to h, then uniform
  const std::size_t levels = 14;
  std::vector<long double> T{0.0L};
  for (std::size_t j = levels; j >= 1; --j)
    T.push_back(h / static_cast<long double>(1u << j));
  for (std::size_t k = 1; k <= n; ++k) T.push_back(h * static_cast<long double>(k));
  const std::size_t K = T.size();  // = levels + n + 1

  // power tables at the uniform spacings, per term: (d h)^r and (d h)^{r+1}
  struct Pows {
    std::vector<long double> pr, pr1;
  };
  std::vector<Pows> tabs(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const long double r = terms[j].order;
    tabs[j].pr.resize(n + 1);
    tabs[j].pr1.resize(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
      tabs[j].pr[d] = std::pow(h * static_cast<long double>(d), r);
      tabs[j].pr1[d] = std::pow(h * static_cast<long double>(d), r + 1.0L);
    }
  }

  // I^r x(t_k) ~ sum over cells [T_i, T_{i+1}] of wa x_i + wb x_{i+1}, the
  // exact integral of the kernel against the linear interpolant:
  //   A = t_k - T_{i+1},  B = t_k - T_i,  L = T_{i+1} - T_i
  //   g0 = (B^r - A^r)/r, g1 = (B^{r+1} - A^{r+1})/(r+1)
  //   wa = (g1 - A g0)/(L Gamma(r)),  wb = (B g0 - g1)/(L Gamma(r))
  std::vector<long double> x(K, 0.0L);
  x[0] = static_cast<long double>(rhs(a)) / c_id;

  for (std::size_t k = 1; k < K; ++k) {
    const long double tk = T[k];
    long double acc = rhs(a + static_cast<double>(tk));
    long double diag = c_id;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      const long double r = terms[j].order;
      const long double gr = std::tgamma(r);
      for (std::size_t i = 0; i < k; ++i) {
        long double Ar, Br, Ar1, Br1;
        if (i > levels && k > levels) {  // cell and target both on the uniform part
          const std::size_t du = k - i;
          Ar = tabs[j].pr[du - 1];
          Br = tabs[j].pr[du];
          Ar1 = tabs[j].pr1[du - 1];
          Br1 = tabs[j].pr1[du];
        } else {
          const long double A = tk - T[i + 1], B = tk - T[i];
          Ar = std::pow(A, r);
          Br = std::pow(B, r);
          Ar1 = std::pow(A, r + 1.0L);
          Br1 = std::pow(B, r + 1.0L);
        }
        const long double A = tk - T[i + 1];
        const long double B = tk - T[i];
        const long double L = T[i + 1] - T[i];
        const long double g0 = (Br - Ar) / r;
        const long double g1 = (Br1 - Ar1) / (r + 1.0L);
        const long double wa = (g1 - A * g0) / (L * gr);
        const long double wb = (B * g0 - g1) / (L * gr);
        acc -= terms[j].coeff * wa * x[i];
        if (i + 1 < k)
          acc -= terms[j].coeff * wb * x[i + 1];
        else
          diag += terms[j].coeff * wb;
      }
    }
    x[k] = acc / diag;
  }

  std::vector<double> out;
  out.reserve(n + 1);
  out.push_back(static_cast<double>(x[0]));
  for (std::size_t k = levels + 1; k < K; ++k) out.push_back(static_cast<double>(x[k]));
  return out;
}

}  // namespace testsupport
