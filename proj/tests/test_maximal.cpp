#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gnri/maximal.hpp"

using namespace gnri;

namespace {

// Exhaustive reference: every scale, every position, clipped sums over a
// full-cube denominator.
GridFunction brute_force_maximal(const GridFunction& f) {
  const int n = f.dim(), m = f.res();
  GridFunction out(n, f.half_width(), m, 1);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto idx = f.index_of(p);
    double best = 0.0;
    for (int ell = 1; ell <= m; ++ell) {
      std::array<int, 3> a{0, 0, 0};
      const auto scan = [&](auto&& self, int axis) -> void {
        if (axis == n) {
          double sum = 0.0;
          std::array<int, 3> c{0, 0, 0};
          const auto inner = [&](auto&& go, int ax) -> void {
            if (ax == n) {
              sum += f.value(f.point_of(c));
              return;
            }
            for (int i = std::max(0, a[static_cast<std::size_t>(ax)]);
                 i < std::min(m, a[static_cast<std::size_t>(ax)] + ell); ++i) {
              c[static_cast<std::size_t>(ax)] = i;
              go(go, ax + 1);
            }
          };
          inner(inner, 0);
          best = std::max(best, sum / std::pow(ell, n));
          return;
        }
        for (int s = idx[static_cast<std::size_t>(axis)] - ell + 1;
             s <= idx[static_cast<std::size_t>(axis)]; ++s) {
          a[static_cast<std::size_t>(axis)] = s;
          self(self, axis + 1);
        }
      };
      scan(scan, 0);
    }
    out.value(p) = best;
  }
  return out;
}

GridFunction abs_random(int dim, int res, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(0.0, 2.0);
  GridFunction f(dim, 2.0, res);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto idx = f.index_of(p);
    bool interior = true;
    for (int d = 0; d < dim; ++d)
      interior = interior && idx[static_cast<std::size_t>(d)] >= 2 &&
                 idx[static_cast<std::size_t>(d)] < res - 2;
    if (interior) f.value(p) = val(rng);
  }
  return f;
}

}  // namespace

TEST_CASE("maximal operator matches exhaustive brute force") {
  for (const auto& [dim, res] : std::vector<std::pair<int, int>>{{1, 24}, {2, 10}}) {
    const GridFunction f = abs_random(dim, res, 100 + static_cast<std::uint64_t>(dim));
    const GridFunction fast = maximal_operator(f);
    const GridFunction slow = brute_force_maximal(f);
    double worst = 0.0;
    for (std::size_t p = 0; p < f.points(); ++p)
      worst = std::max(worst, std::abs(fast.value(p) - slow.value(p)));
    CAPTURE(dim);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("Mf dominates f and constants are preserved on the support") {
  const GridFunction f = GridFunction::sample(TestFamilySpec::indicator(1.0), 1, 4.0, 128);
  const GridFunction mf = maximal_operator(f);
  for (std::size_t p = 0; p < f.points(); ++p) {
    CHECK(mf.value(p) >= f.value(p));
    if (f.value(p) == 1.0) CHECK(mf.value(p) == doctest::Approx(1.0));
  }
}

TEST_CASE("1D indicator closed form away from the support") {
  // Mchi(x) = 1/x for chi_(0,1) at x > 1; centered version: mass/(dist + a/2)
  const int m = 512;
  const double a = 1.0;
  const GridFunction f = GridFunction::sample(TestFamilySpec::indicator(a), 1, 6.0, m);
  const GridFunction mf = maximal_operator(f);
  const StepRearrangement rf = rearrange(f);
  const double measured = rf.total_measure();
  const double h = f.spacing();
  for (double x : {2.0, -2.0, 3.5}) {
    const int i = static_cast<int>(std::floor((x + 6.0) / h));
    const double expected = measured / (std::abs(f.coordinate(i)) + measured / 2.0);
    CHECK(std::abs(mf.value(static_cast<std::size_t>(i)) - expected) <= 2.0 * h);
  }
}

TEST_CASE("sublinearity") {
  const GridFunction f = abs_random(1, 64, 7);
  const GridFunction g = abs_random(1, 64, 8);
  GridFunction sum(1, 2.0, 64);
  for (std::size_t p = 0; p < sum.points(); ++p) sum.value(p) = f.value(p) + g.value(p);
  const GridFunction mf = maximal_operator(f);
  const GridFunction mg = maximal_operator(g);
  const GridFunction ms = maximal_operator(sum);
  for (std::size_t p = 0; p < sum.points(); ++p)
    CHECK(ms.value(p) <= mf.value(p) + mg.value(p) + 1e-12);
}

TEST_CASE("dilation covariance up to resampling") {
  const int m = 256;
  const double L = 4.0;
  const auto base = TestFamilySpec::gaussian(0.8);
  const GridFunction mu = maximal_operator(GridFunction::sample(base, 1, L, m));
  for (double s : {0.5, 2.0}) {
    const GridFunction mus = maximal_operator(GridFunction::sample(dilate(base, s), 1, L, m));
    // compare M(T_s u)(x) with (Mu)(s x) by nearest-cell lookup
    double worst = 0.0, top = 0.0;
    const double h = 2.0 * L / m;
    for (int i = 0; i < m; ++i) {
      const double xs = s * mus.coordinate(i);
      if (std::abs(xs) > L - h) continue;
      const int k = std::clamp(static_cast<int>(std::floor((xs + L) / h)), 0, m - 1);
      worst = std::max(worst, std::abs(mus.value(static_cast<std::size_t>(i)) -
                                       mu.value(static_cast<std::size_t>(k))));
      top = std::max(top, mu.value(static_cast<std::size_t>(k)));
    }
    CAPTURE(s);
    CHECK(worst <= 0.05 * top);
  }
}

TEST_CASE("riesz-herz band for the 1D indicator") {
  const GridFunction f = GridFunction::sample(TestFamilySpec::indicator(1.0), 1, 6.0, 512);
  const double supp = rearrange(f).total_measure();
  const auto band = riesz_herz_ratio(f, log_grid(0.1, 10.0, 32));
  CHECK(band.c_min >= 0.5 * (1.0 - 0.05));
  CHECK(band.c_max <= 1.05);
  // spot value: u**(2) = 1/2, (Mchi)*(2) = 2/(2+1)
  for (const auto& [t, ratio] : band.samples)
    if (std::abs(t - 2.0) < 0.05) CHECK(ratio == doctest::Approx(0.75).epsilon(0.05));
  // ratio -> 1 as t -> 0: both sides approach sup |f|
  const auto small = riesz_herz_ratio(f, log_grid(1e-3 * supp, 1e-2 * supp, 8));
  CHECK(small.c_min >= 0.95);
  CHECK(small.c_max <= 1.05);
}

TEST_CASE("riesz-herz equivalence band over the built-in family") {
  double c_min = kInf, c_max = 0.0;
  for (const auto& spec : built_in_family(1, 4.0)) {
    const GridFunction f = GridFunction::sample(spec, 1, 4.0, 256);
    const auto band = riesz_herz_ratio(f, default_riesz_herz_grid(f));
    c_min = std::min(c_min, band.c_min);
    c_max = std::max(c_max, band.c_max);
    CHECK(band.c_min >= (1.0 / 2.0) * 0.9);  // one-sided dimensional bound
  }
  CHECK(c_max / c_min <= 50.0);
}

TEST_CASE("riesz-herz 2D stays within the dimensional band") {
  const GridFunction f = GridFunction::sample(TestFamilySpec::gaussian(0.5), 2, 4.0, 96);
  const auto band = riesz_herz_ratio(f, default_riesz_herz_grid(f));
  CHECK(band.c_min >= 0.1);
  CHECK(band.c_max <= 1.1);
  CHECK(band.c_max / band.c_min <= 200.0);
}
