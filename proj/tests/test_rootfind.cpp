#include <cmath>
#include <complex>

#include "doctest.h"
#include "fracreduce/rootfind.hpp"

using namespace fracreduce;

namespace {

IntPoly from_roots(const std::vector<Complex>& roots) {
  IntPoly p = IntPoly::constant({1.0, 0.0});
  for (const auto& r : roots) {
    IntPoly lin;
    lin.c = {-r, {1.0, 0.0}};
    p = mul(p, lin);
  }
  return p;
}

}  // namespace

TEST_CASE("simple real roots") {
  auto rs = find_roots(from_roots({{1, 0}, {2, 0}, {-3, 0}}));
  REQUIRE(rs.roots.size() == 3);
  // sorted by (re, im)
  CHECK(rs.roots[0].first.real() == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(rs.roots[1].first.real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rs.roots[2].first.real() == doctest::Approx(2.0).epsilon(1e-9));
  for (const auto& [v, m] : rs.roots) CHECK(m == 1);
}

TEST_CASE("multiple roots cluster") {
  // a multiplicity-m root is located to roughly eps^{1/m}, so certification
  // needs a budget matching that limit, not the simple-root default
  auto rs = find_roots(from_roots({{2, 0}, {2, 0}, {-1, 0}}), 1e-4);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[1].second == 2);
  CHECK(rs.roots[1].first.real() == doctest::Approx(2.0).epsilon(1e-6));

  auto triple = find_roots(from_roots({{1, 0}, {1, 0}, {1, 0}}), 1e-3);
  REQUIRE(triple.roots.size() == 1);
  CHECK(triple.roots[0].second == 3);
  CHECK(std::abs(triple.roots[0].first - Complex{1, 0}) < 3e-5);
}

TEST_CASE("conjugate pair") {
  IntPoly p;
  p.c = {{1, 0}, {0, 0}, {1, 0}};  // X^2 + 1
  auto rs = find_roots(p);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0].first.imag() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(rs.roots[1].first.imag() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(rs.roots[0].first.real()) < 1e-9);
}

TEST_CASE("structural zero roots come off exactly") {
  // X^2 (X - 1)
  IntPoly p;
  p.c = {{0, 0}, {0, 0}, {-1, 0}, {1, 0}};
  auto rs = find_roots(p);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0].first == Complex{0, 0});
  CHECK(rs.roots[0].second == 2);
  CHECK(rs.roots[1].first.real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(find_roots(IntPoly::zero()), ZeroPolynomialError);
  CHECK(find_roots(IntPoly::constant({5, 0})).roots.empty());
  IntPoly p;
  p.c = {{1, 0}, {1, 0}};
  CHECK_THROWS_AS(find_roots(p, 0.0), InvalidToleranceError);
}

TEST_CASE("root set reproduces the polynomial") {
  // the certification property, checked from the outside: expand the returned
  // multiset and compare against the (monic) input
  auto p = from_roots({{0.5, 0}, {-1.5, 0.5}, {-1.5, -0.5}, {3, 0}});
  auto rs = find_roots(p);
  IntPoly back = IntPoly::constant({1.0, 0.0});
  int total = 0;
  for (const auto& [v, m] : rs.roots) {
    total += m;
    for (int i = 0; i < m; ++i) {
      IntPoly lin;
      lin.c = {-v, {1.0, 0.0}};
      back = mul(back, lin);
    }
  }
  CHECK(total == p.degree());
  for (std::size_t i = 0; i < p.c.size(); ++i) CHECK(std::abs(back.c[i] - p.c[i]) < 1e-8);
}

TEST_CASE("orbit clustering by q-th roots of unity") {
  // {2, 2i} under q = 4: one orbit, representative at phase 0
  RootSet rs;
  rs.roots = {{{2, 0}, 1}, {{0, 2}, 1}};
  auto os = cluster_orbits(rs, 4);
  CHECK(os.q == 4);
  REQUIRE(os.orbits.size() == 1);
  const auto& orb = os.orbits[0];
  CHECK(std::abs(orb.representative - Complex{2, 0}) < 1e-12);
  REQUIRE(orb.mult.size() == 4);
  CHECK(orb.mult[0] == 1);
  CHECK(orb.mult[1] == 1);
  CHECK(orb.mult[2] == 0);
  CHECK(orb.mult[3] == 0);
}

TEST_CASE("orbits separate unrelated roots and absorb zeros") {
  RootSet rs;
  rs.roots = {{{1, 0}, 1}, {{-1, 0}, 2}, {{3, 0}, 1}, {{0, 0}, 2}};
  auto os = cluster_orbits(rs, 2);
  REQUIRE(os.orbits.size() == 3);  // zero orbit, {1,-1}, {3}
  CHECK(os.orbits[0].representative == Complex{0, 0});
  CHECK(os.orbits[0].mult[0] == 2);
  bool found_pair = false, found_three = false;
  for (const auto& orb : os.orbits) {
    if (std::abs(orb.representative - Complex{1, 0}) < 1e-12) {
      CHECK(orb.mult[0] == 1);
      CHECK(orb.mult[1] == 2);  // -1 = 1 * xi with xi = e^{i pi}
      found_pair = true;
    }
    if (std::abs(orb.representative - Complex{3, 0}) < 1e-12) {
      CHECK(orb.mult[0] == 1);
      CHECK(orb.mult[1] == 0);
      found_three = true;
    }
  }
  CHECK(found_pair);
  CHECK(found_three);
  CHECK_THROWS_AS(cluster_orbits(rs, 0), DomainError);
}

TEST_CASE("find_rational_roots complete split") {
  // (X - 1/2)(X + 3)^2 X
  IntPolyX lin1, lin2, x;
  lin1.c = {RatComplex(BigRat(-1, 2)), RatComplex(1)};
  lin2.c = {RatComplex(3), RatComplex(1)};
  x.c = {RatComplex(0), RatComplex(1)};
  auto P = mul(mul(mul(lin1, lin2), lin2), x);
  auto split = find_rational_roots(P);
  CHECK(split.complete);
  CHECK(split.remainder.degree() == 0);
  REQUIRE(split.roots.size() == 3);
  CHECK(split.roots[0].first == BigRat(-3));
  CHECK(split.roots[0].second == 2);
  CHECK(split.roots[1].first == BigRat(0));
  CHECK(split.roots[2].first == BigRat(1, 2));
}

TEST_CASE("find_rational_roots handles high multiplicity") {
  // (X - 1/2)^3 (X + 1): the floating pass locates a triple root only to
  // ~1e-5, so the split must recover 1/2 from loose candidates
  IntPolyX lin1, lin2;
  lin1.c = {RatComplex(BigRat(-1, 2)), RatComplex(1)};
  lin2.c = {RatComplex(1), RatComplex(1)};
  auto P = mul(mul(mul(lin1, lin1), lin1), lin2);
  auto split = find_rational_roots(P);
  CHECK(split.complete);
  REQUIRE(split.roots.size() == 2);
  CHECK(split.roots[0].first == BigRat(-1));
  CHECK(split.roots[0].second == 1);
  CHECK(split.roots[1].first == BigRat(1, 2));
  CHECK(split.roots[1].second == 3);
}

TEST_CASE("find_rational_roots reports irrational leftovers") {
  // (X - 2)(X^2 - 2): only the rational root comes off
  IntPolyX lin, quad;
  lin.c = {RatComplex(-2), RatComplex(1)};
  quad.c = {RatComplex(-2), RatComplex(0), RatComplex(1)};
  auto split = find_rational_roots(mul(lin, quad));
  CHECK_FALSE(split.complete);
  CHECK(split.remainder.degree() == 2);
  REQUIRE(split.roots.size() == 1);
  CHECK(split.roots[0].first == BigRat(2));
}
