#pragma once

#include <utility>
#include <vector>

#include "gnri/rearrange.hpp"

namespace gnri {

// Discrete uncentered cubic Hardy-Littlewood maximal operator: at each cell
// center, the sup over all axis-aligned cubes of 1..res cells per side and
// every position containing the cell, of the cube average of |f|. Cubes may
// stick out of the box; the sum is clipped while the denominator keeps the
// full cube volume (sound for compactly supported f). Exact for the discrete
// measure: summed-area table per scale plus a separable sliding-window max.
GridFunction maximal_operator(const GridFunction& f);

struct RieszHerzBand {
  double c_min = kInf;
  double c_max = 0.0;
  std::vector<std::pair<double, double>> samples;  // (t, u**(t)/(Mu)*(t))
};

// Ratios u**(t)/(Mu)*(t) over the t_grid, restricted to t below the measure
// of {Mu > 0} (the box).
RieszHerzBand riesz_herz_ratio(const GridFunction& f, const std::vector<double>& t_grid);

// 64 log-spaced points per decade across (1e-3, 1e2) * support measure.
std::vector<double> default_riesz_herz_grid(const GridFunction& f);

}  // namespace gnri
