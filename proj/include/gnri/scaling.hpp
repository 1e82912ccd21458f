#pragma once

#include <vector>

#include "gnri/gn.hpp"

namespace gnri {

struct NecessaryConditionResult {
  double sup = 0.0;
  bool divergent = false;
  int direction = 0;  // +1 toward large t, -1 toward small t
  double slope = 0.0;
  std::vector<double> t;
  std::vector<double> ratio;  // phi_X / (phi_Y^{j/k} phi_Z^{1-j/k})
};

// Fundamental-function necessary condition for the interpolation inequality;
// divergence decided by the fast (100x per 4 decades) curve heuristic.
NecessaryConditionResult necessary_condition(const SpaceSpec& X, const SpaceSpec& Y,
                                             const SpaceSpec& Z, int j, int k,
                                             const std::vector<double>& t_grid);
std::vector<double> default_nc_grid();

// s^level * phi_space(omega_n (2/s)^n): the closed-form equivalent of the
// dilated-bump norms, with the ball-measure normalization folded in.
double bump_norm_closed_form(double s, const SpaceSpec& space, int level, int dim);

struct FalsifyResult {
  std::vector<double> s_analytic;
  std::vector<double> analytic;  // closed-form lhs/rhs ratio
  std::vector<double> s_empirical;
  std::vector<double> empirical;  // sampled-bump ratio at feasible s
  bool falsified = false;
  int direction = 0;
  double slope = 0.0;
  double tracking_band = 0.0;  // max/min of empirical/analytic on common s
};

// Analytic curve from the closed forms over all of s_range; empirical curve
// from the dilated bump wherever it fits the grid; verdict from the analytic
// curve's fast-divergence heuristic.
FalsifyResult falsify(const SpaceSpec& X, const SpaceSpec& Y, const SpaceSpec& Z, int j, int k,
                      const std::vector<double>& s_range, int dim, int res, double half_width);

}  // namespace gnri
