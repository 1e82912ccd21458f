#include "gnri/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace gnri {

StepRearrangement::StepRearrangement(std::vector<double> values, std::vector<double> widths) {
  if (values.size() != widths.size())
    throw error("StepRearrangement: values/widths size mismatch");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b];
  });
  values_.reserve(values.size());
  widths_.reserve(values.size());
  for (std::size_t k : order) {
    const double v = values[k];
    const double w = widths[k];
    if (!std::isfinite(v) || v < 0.0) throw error("StepRearrangement: values must be finite and >= 0");
    if (!(w > 0.0) || !std::isfinite(w)) throw error("StepRearrangement: widths must be positive");
    if (v == 0.0) continue;
    if (!values_.empty() && values_.back() == v)
      widths_.back() += w;  // exact-equality merge only
    else {
      values_.push_back(v);
      widths_.push_back(w);
    }
  }
  rebuild();
}

void StepRearrangement::rebuild() {
  cum_.resize(values_.size());
  integral_.resize(values_.size());
  double c = 0.0, m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    c += widths_[i];
    m += values_[i] * widths_[i];
    cum_[i] = c;
    integral_[i] = m;
  }
}

double StepRearrangement::value_at(double t) const {
  if (t < 0.0) throw error("StepRearrangement: t must be >= 0");
  if (values_.empty() || t >= total_measure()) return 0.0;
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
  return values_[static_cast<std::size_t>(it - cum_.begin())];
}

double StepRearrangement::prefix_integral(double t) const {
  if (t < 0.0) throw error("StepRearrangement: t must be >= 0");
  if (values_.empty()) return 0.0;
  if (t >= total_measure()) return mass();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - cum_.begin());
  const double before = i == 0 ? 0.0 : integral_[i - 1];
  return before + values_[i] * (t - left_edge(i));
}

StepRearrangement StepRearrangement::scaled(double c) const {
  if (c < 0.0) c = -c;
  if (c == 0.0) return StepRearrangement();
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return StepRearrangement(std::move(v), widths_);
}

StepRearrangement StepRearrangement::powered(double a) const {
  std::vector<double> v(values_);
  for (double& x : v) x = std::pow(x, a);
  return StepRearrangement(std::move(v), widths_);
}

StepRearrangement rearrange(const GridFunction& f) {
  const GridFunction* src = &f;
  std::optional<GridFunction> mag;
  if (f.comps() > 1) {
    mag.emplace(magnitude(f));
    src = &*mag;
  }
  std::vector<double> vals;
  vals.reserve(src->points());
  for (std::size_t p = 0; p < src->points(); ++p) {
    const double v = std::abs(src->value(p));
    if (!std::isfinite(v)) throw error("rearrange: input has non-finite entries");
    if (v > 0.0) vals.push_back(v);
  }
  std::vector<double> widths(vals.size(), f.cell_volume());
  return StepRearrangement(std::move(vals), std::move(widths));
}

double maximal_rearrangement(const StepRearrangement& r, double t) {
  if (!(t > 0.0)) throw error("maximal_rearrangement: t must be positive");
  return r.prefix_integral(t) / t;
}

double hlp_constant(const StepRearrangement& u, const StepRearrangement& v) {
  if (u.empty() && v.empty()) return 1.0;
  if (v.empty()) return kInf;
  if (u.empty()) return 0.0;

  std::vector<double> ts = u.breakpoints();
  const auto vb = v.breakpoints();
  ts.insert(ts.end(), vb.begin(), vb.end());
  const double t_max = std::max(u.total_measure(), v.total_measure());
  ts.push_back(t_max);
  // belt-and-braces refinement; both prefix integrals are piecewise linear,
  // so the breakpoints already carry the sup
  const double lo = std::min(u.width(0), v.width(0)) * 1e-2;
  const double hi = t_max * 10.0;
  if (hi > lo)
    for (double t : log_grid(lo, hi, 64)) ts.push_back(t);

  double sup = 0.0;
  for (double t : ts) {
    if (!(t > 0.0)) continue;
    const double den = v.prefix_integral(t);
    const double num = u.prefix_integral(t);
    if (den <= 0.0) {
      if (num > 0.0) return kInf;
      continue;
    }
    sup = std::max(sup, num / den);
  }
  return sup;
}

}  // namespace gnri
