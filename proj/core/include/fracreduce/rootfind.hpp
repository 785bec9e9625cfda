#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fracreduce/genpoly.hpp"

namespace fracreduce {

struct RootSet {
  std::vector<std::pair<Complex, int>> roots;  // (value, multiplicity)
};

// Simultaneous (Durand-Kerner) iteration on the monic polynomial, no
// deflation; nearby iterates are clustered at relative tolerance tol and the
// cluster mean reported with the cluster size as multiplicity. The monic
// product over the reported roots is rebuilt and compared against the input;
// NonConvergenceError if it disagrees beyond the documented budget.
RootSet find_roots(const IntPoly& P, double tol = 1e-7);

// One orbit {rep * xi^j} under the primitive q-th root of unity xi; mult[j]
// is the multiplicity of rep*xi^j as a root (0 when that phase is absent).
// The representative is the member with the smallest principal argument.
struct Orbit {
  Complex representative{};
  std::vector<int> mult;  // size q
};

struct OrbitSet {
  std::int64_t q = 1;
  std::vector<Orbit> orbits;
};

// Two roots share an orbit iff their ratio is within tol of some q-th root of
// unity; all zero roots form one orbit with representative 0 (multiplicity
// collected at phase 0).
OrbitSet cluster_orbits(const RootSet& roots, std::int64_t q, double tol = 1e-7);

// Exact fast path: splits off rational roots (with multiplicity) of a
// polynomial with Gaussian-rational coefficients. complete is true iff the
// leftover factor is constant; callers fall back to floating mode otherwise.
// Only real-coefficient inputs are attempted (complete = false if any
// coefficient has a nonzero imaginary part).
struct RationalRootSplit {
  std::vector<std::pair<BigRat, int>> roots;
  IntPolyX remainder;
  bool complete = false;
};

RationalRootSplit find_rational_roots(const IntPolyX& P);

}  // namespace fracreduce
