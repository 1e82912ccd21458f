#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gnri/grid.hpp"

namespace gnri {

// Non-increasing step function on (0, total_measure): the discrete stand-in
// for u*. Values are strictly decreasing and positive after construction
// (equal values merge exactly, zeros are dropped); evaluation is
// right-continuous and 0 beyond the total measure.
class StepRearrangement {
 public:
  StepRearrangement() = default;
  StepRearrangement(std::vector<double> values, std::vector<double> widths);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double value(std::size_t i) const { return values_[i]; }
  double width(std::size_t i) const { return widths_[i]; }
  double left_edge(std::size_t i) const { return i == 0 ? 0.0 : cum_[i - 1]; }
  double right_edge(std::size_t i) const { return cum_[i]; }
  double total_measure() const { return cum_.empty() ? 0.0 : cum_.back(); }
  double mass() const { return integral_.empty() ? 0.0 : integral_.back(); }

  // u*(t); right-continuous, 0 for t >= total_measure.
  double value_at(double t) const;
  // ∫_0^t u*(s) ds, exact.
  double prefix_integral(double t) const;

  StepRearrangement scaled(double c) const;
  StepRearrangement powered(double a) const;
  std::vector<double> breakpoints() const { return cum_; }

 private:
  std::vector<double> values_;
  std::vector<double> widths_;
  std::vector<double> cum_;       // running widths
  std::vector<double> integral_;  // running value*width
  void rebuild();
};

// Sorts |f| (magnitude first for tensor input); every sample contributes one
// cell volume of measure.
StepRearrangement rearrange(const GridFunction& f);

// u**(t) = (1/t) ∫_0^t u*.
double maximal_rearrangement(const StepRearrangement& r, double t);

// sup_t ∫_0^t u* / ∫_0^t v* over breakpoints of both plus a log refinement;
// +inf when v is identically zero but u is not.
double hlp_constant(const StepRearrangement& u, const StepRearrangement& v);

}  // namespace gnri
