#include "gnri/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gnri {

namespace {

double unit_ball_measure(int dim) {
  switch (dim) {
    case 1:
      return 2.0;
    case 2:
      return std::numbers::pi;
    case 3:
      return 4.0 * std::numbers::pi / 3.0;
  }
  throw error("unit_ball_measure: dim must be 1, 2 or 3");
}

}  // namespace

std::vector<double> default_nc_grid() { return log_grid(1e-6, 1e6, 64); }

NecessaryConditionResult necessary_condition(const SpaceSpec& X, const SpaceSpec& Y,
                                             const SpaceSpec& Z, int j, int k,
                                             const std::vector<double>& t_grid) {
  if (!(1 <= j && j < k)) throw exponent_error("necessary_condition: need 1 <= j < k");
  const double a = static_cast<double>(j) / k;
  NecessaryConditionResult out;
  out.t = t_grid;
  out.ratio.reserve(t_grid.size());
  for (double t : t_grid) {
    const double den = std::pow(fundamental_function(Y, t), a) *
                       std::pow(fundamental_function(Z, t), 1.0 - a);
    out.ratio.push_back(fundamental_function(X, t) / den);
  }
  out.sup = *std::max_element(out.ratio.begin(), out.ratio.end());
  const DivergenceVerdict v = detect_fast_divergence(out.t, out.ratio);
  out.divergent = v.divergent;
  out.direction = v.direction;
  out.slope = v.slope;
  return out;
}

double bump_norm_closed_form(double s, const SpaceSpec& space, int level, int dim) {
  if (!(s > 0.0)) throw exponent_error("bump_norm_closed_form: s must be positive");
  if (level < 0) throw exponent_error("bump_norm_closed_form: level must be >= 0");
  const double measure = unit_ball_measure(dim) * std::pow(2.0 / s, dim);
  return std::pow(s, level) * fundamental_function(space, measure);
}

FalsifyResult falsify(const SpaceSpec& X, const SpaceSpec& Y, const SpaceSpec& Z, int j, int k,
                      const std::vector<double>& s_range, int dim, int res, double half_width) {
  if (!(1 <= j && j < k && k <= 4)) throw exponent_error("falsify: need 1 <= j < k <= 4");
  FalsifyResult out;
  const double a = static_cast<double>(j) / k;
  for (double s : s_range) {
    const double lhs = bump_norm_closed_form(s, X, j, dim);
    const double rhs = std::pow(bump_norm_closed_form(s, Y, k, dim), a) *
                       std::pow(bump_norm_closed_form(s, Z, 0, dim), 1.0 - a);
    out.s_analytic.push_back(s);
    out.analytic.push_back(lhs / rhs);
  }
  const DivergenceVerdict v = detect_fast_divergence(out.s_analytic, out.analytic);
  out.falsified = v.divergent;
  out.direction = v.direction;
  out.slope = v.slope;

  // empirical curve on the sampled bump wherever the dilation fits the grid
  GNProblem pb;
  pb.j = j;
  pb.k = k;
  pb.X = X;
  pb.Y = Y;
  pb.Z = Z;
  pb.family = {TestFamilySpec::sa_bump(k)};
  pb.dim = dim;
  pb.res = res;
  pb.half_width = half_width;
  const ScanCurve curve = best_constant_scan(pb, GNMode::lorentz, s_range);
  out.s_empirical = curve.s;
  out.empirical = curve.ratio;

  double band_lo = kInf, band_hi = 0.0;
  for (std::size_t i = 0; i < out.s_empirical.size(); ++i) {
    const auto it = std::find(out.s_analytic.begin(), out.s_analytic.end(), out.s_empirical[i]);
    if (it == out.s_analytic.end()) continue;
    const double ana = out.analytic[static_cast<std::size_t>(it - out.s_analytic.begin())];
    if (!(ana > 0.0)) continue;
    const double rel = out.empirical[i] / ana;
    band_lo = std::min(band_lo, rel);
    band_hi = std::max(band_hi, rel);
  }
  out.tracking_band = (band_hi > 0.0 && std::isfinite(band_lo)) ? band_hi / band_lo : kInf;
  return out;
}

}  // namespace gnri
