#include <doctest.h>

#include <cmath>
#include <random>

#include "gnri/grid.hpp"

using namespace gnri;

namespace {

// cells whose centers sit within `band` grid cells of a kink radius
bool near_kink_1d(double x, double h, int band) {
  for (double kink : {-2.0, -1.0, 0.0, 1.0, 2.0})
    if (std::abs(x - kink) <= band * h) return true;
  return false;
}

}  // namespace

TEST_CASE("sa_bump closed form") {
  const auto spec = TestFamilySpec::sa_bump(2);
  double x = 0.0;
  CHECK(spec.evaluate(&x, 1) == doctest::Approx(2.0));
  x = 2.0;
  CHECK(spec.evaluate(&x, 1) == 0.0);
  x = -2.5;
  CHECK(spec.evaluate(&x, 1) == 0.0);
  const auto spec3 = TestFamilySpec::sa_bump(3);
  x = 1.5;
  CHECK(spec3.evaluate(&x, 1) == doctest::Approx(0.125));
  x = 1.0;  // branches agree at the joint
  CHECK(spec3.evaluate(&x, 1) == doctest::Approx(1.0));
}

TEST_CASE("sample enforces support margin") {
  const GridFunction f = GridFunction::sample(TestFamilySpec::sa_bump(2), 1, 4.0, 128);
  CHECK(f.support_margin_ok(2));
  CHECK(f.cell_volume() == doctest::Approx(8.0 / 128).epsilon(1e-15));
  CHECK_THROWS_AS(GridFunction::sample(TestFamilySpec::gaussian(4.2), 1, 4.0, 128),
                  support_error);
  // gaussian bump must vanish exactly outside its radius, not merely decay
  const GridFunction g = GridFunction::sample(TestFamilySpec::gaussian(1.0), 1, 4.0, 128);
  CHECK(g.support_margin_ok(2));
  int nonzero = 0;
  for (std::size_t p = 0; p < g.points(); ++p)
    if (g.value(p) != 0.0) ++nonzero;
  CHECK(nonzero > 0);
  CHECK(nonzero < static_cast<int>(g.points()));
}

TEST_CASE("derivative of x^2 matches the symbolic oracle") {
  const int m = 64;
  GridFunction f(1, 2.0, m);
  for (int i = 0; i < m; ++i) f.value(static_cast<std::size_t>(i)) = f.coordinate(i) * f.coordinate(i);
  const GridFunction d = derivative_tensor(f, 1);
  double worst = 0.0;
  for (int i = 2; i < m - 2; ++i)
    worst = std::max(worst, std::abs(d.value(static_cast<std::size_t>(i)) - 2.0 * f.coordinate(i)));
  CHECK(worst <= 1e-10);  // central differences are exact on quadratics
}

TEST_CASE("derivative errors") {
  GridFunction f(1, 1.0, 8);
  CHECK_THROWS_AS(derivative_tensor(f, 4), resolution_error);
  const GridFunction t = derivative_tensor(f, 1);
  CHECK_THROWS_AS(derivative_tensor(t, 1), error);  // tensor input rejected
}

TEST_CASE("zero function has zero derivative tensor") {
  GridFunction f(2, 1.0, 16);
  const GridFunction d = derivative_tensor(f, 2);
  CHECK(d.comps() == 4);
  for (std::size_t p = 0; p < d.points(); ++p)
    for (int c = 0; c < d.comps(); ++c) CHECK(d.value(p, c) == 0.0);
}

TEST_CASE("sa_bump second derivative on the first branch") {
  const int m = 512;
  const GridFunction u = GridFunction::sample(TestFamilySpec::sa_bump(2), 1, 4.0, m);
  const GridFunction d2 = magnitude(derivative_tensor(u, 2));
  const double h = u.spacing();
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    const double x = u.coordinate(i);
    if (std::abs(x) >= 1.0 || near_kink_1d(x, h, 4)) continue;
    worst = std::max(worst, std::abs(d2.value(static_cast<std::size_t>(i)) - 2.0));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("|d^k sa_bump| equals k! away from the kinks") {
  const int m = 512;
  for (int k = 1; k <= 4; ++k) {
    const GridFunction u = GridFunction::sample(TestFamilySpec::sa_bump(k), 1, 4.0, m);
    const GridFunction dk = magnitude(derivative_tensor(u, k));
    const double h = u.spacing();
    const double kfact = std::tgamma(k + 1.0);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      const double x = u.coordinate(i);
      if (std::abs(x) >= 2.0 || near_kink_1d(x, h, k + 2)) continue;
      worst = std::max(worst, std::abs(dk.value(static_cast<std::size_t>(i)) - kfact));
    }
    CAPTURE(k);
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("magnitude") {
  GridFunction t(2, 1.0, 16, 2);
  t.value(5, 0) = 3.0;
  t.value(5, 1) = -4.0;
  const GridFunction m = magnitude(t);
  CHECK(m.value(5) == doctest::Approx(5.0));
  CHECK(m.value(6) == 0.0);
}

TEST_CASE("dilate composition and identity") {
  auto base = TestFamilySpec::sa_bump(2);
  const auto once = dilate(dilate(base, 2.0), 3.0);
  const auto direct = dilate(base, 6.0);
  double x = 0.21;
  CHECK(once.evaluate(&x, 1) == direct.evaluate(&x, 1));
  CHECK(dilate(base, 1.0).evaluate(&x, 1) == base.evaluate(&x, 1));
  CHECK_THROWS_AS(dilate(base, 0.0), exponent_error);
  // dilated sample at x equals the base at s*x
  x = 0.5;
  CHECK(dilate(base, 2.0).evaluate(&x, 1) == doctest::Approx(1.0));
  // support radius of the dilated bump is 2/s
  CHECK(dilate(base, 4.0).support_half_extent(1) == doctest::Approx(0.5));
}

TEST_CASE("derivative commutes with linear combinations") {
  const int m = 64;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  GridFunction f(1, 2.0, m), g(1, 2.0, m);
  for (int i = 4; i < m - 4; ++i) {
    f.value(static_cast<std::size_t>(i)) = dist(rng);
    g.value(static_cast<std::size_t>(i)) = dist(rng);
  }
  GridFunction combo(1, 2.0, m);
  for (std::size_t p = 0; p < combo.points(); ++p)
    combo.value(p) = 2.5 * f.value(p) - 0.75 * g.value(p);
  const GridFunction dc = derivative_tensor(combo, 2);
  const GridFunction df = derivative_tensor(f, 2);
  const GridFunction dg = derivative_tensor(g, 2);
  for (std::size_t p = 0; p < dc.points(); ++p)
    CHECK(dc.value(p) ==
          doctest::Approx(2.5 * df.value(p) - 0.75 * dg.value(p)).epsilon(1e-12));
}

TEST_CASE("dilation then derivative matches s^j times the dilated derivative") {
  // matched grids: sampling the base on a box scaled by s puts its cell
  // centers exactly at s times the centers of the dilated sample's box
  const int m = 256;
  const double L = 4.0;
  const double s = 2.0;
  for (int j : {1, 2}) {
    const auto base = TestFamilySpec::sa_bump(2);
    const GridFunction a =
        derivative_tensor(GridFunction::sample(dilate(base, s), 1, L, m), j);
    const GridFunction b = derivative_tensor(GridFunction::sample(base, 1, s * L, m), j);
    double worst = 0.0;
    for (std::size_t p = 0; p < a.points(); ++p)
      worst = std::max(worst, std::abs(a.value(p) - std::pow(s, j) * b.value(p)));
    CAPTURE(j);
    CHECK(worst <= 1e-12 * std::pow(s, j) * b.max_abs() + 1e-12);
  }
}

TEST_CASE("2D gradient of a product") {
  const int m = 48;
  GridFunction f(2, 1.0, m);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto idx = f.index_of(p);
    f.value(p) = f.coordinate(idx[0]) * f.coordinate(idx[1]);
  }
  const GridFunction d = derivative_tensor(f, 1);
  for (int i = 4; i < m - 4; ++i)
    for (int j = 4; j < m - 4; ++j) {
      const std::size_t p = f.point_of({i, j, 0});
      CHECK(d.value(p, 0) == doctest::Approx(f.coordinate(j)).epsilon(1e-10));
      CHECK(d.value(p, 1) == doctest::Approx(f.coordinate(i)).epsilon(1e-10));
    }
}

TEST_CASE("family parser") {
  const auto sa = TestFamilySpec::parse("sa_bump:k=3,s=2.0");
  CHECK(sa.family == TestFamilySpec::Family::sa_bump);
  CHECK(sa.order == 3);
  CHECK(sa.dilation == 2.0);
  const auto chi = TestFamilySpec::parse("chi:1.0");
  CHECK(chi.family == TestFamilySpec::Family::indicator);
  CHECK(chi.measure == 1.0);
  const auto g = TestFamilySpec::parse("gauss:r=0.35");
  CHECK(g.radius == doctest::Approx(0.35));
  CHECK_THROWS_AS(TestFamilySpec::parse("blob:1"), parse_error);
  CHECK_THROWS_AS(TestFamilySpec::parse("gauss:r=abc"), parse_error);
  // round trip through str()
  const auto rt = TestFamilySpec::parse(sa.str());
  CHECK(rt.order == sa.order);
  CHECK(rt.dilation == sa.dilation);
}
