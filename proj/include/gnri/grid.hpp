#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gnri/core.hpp"

namespace gnri {

// Closed-form test family. `dilation = s` means the function evaluates the
// base profile at s*x, so support shrinks by 1/s.
struct TestFamilySpec {
  enum class Family { indicator, gaussian_bump, polynomial_bump, sa_bump };

  Family family = Family::gaussian_bump;
  double measure = 1.0;  // indicator: target measure of the cube
  double radius = 1.0;   // bumps: support radius
  int order = 2;         // sa_bump exponent k / polynomial_bump degree
  std::array<double, 3> center{0.0, 0.0, 0.0};
  double dilation = 1.0;

  // Value of the (dilated) function at a point x in R^dim.
  double evaluate(const double* x, int dim) const;
  // Per-axis half extent of the support, center offset included, after dilation.
  double support_half_extent(int dim) const;
  // Support radius of the base profile (before dilation, center excluded).
  double base_radius(int dim) const;

  std::string str() const;
  static TestFamilySpec parse(const std::string& text);

  static TestFamilySpec indicator(double measure);
  static TestFamilySpec gaussian(double radius);
  static TestFamilySpec polynomial(double radius, int degree);
  static TestFamilySpec sa_bump(int k);
};

TestFamilySpec dilate(TestFamilySpec spec, double s);

// Scalar- or tensor-valued samples at the cell centers of a uniform cubic
// grid over [-half_width, half_width]^dim. Tensor entries are stored
// point-major: comps() consecutive doubles per point.
class GridFunction {
 public:
  GridFunction(int dim, double half_width, int res, int comps = 1, int tensor_order = 0);

  static GridFunction sample(const TestFamilySpec& spec, int dim, double half_width, int res);

  int dim() const { return dim_; }
  int res() const { return res_; }
  int comps() const { return comps_; }
  int tensor_order() const { return tensor_order_; }
  double half_width() const { return half_width_; }
  double spacing() const { return 2.0 * half_width_ / res_; }
  double cell_volume() const;
  double box_measure() const;
  std::size_t points() const;

  double value(std::size_t point, int comp = 0) const {
    return values_[point * static_cast<std::size_t>(comps_) + static_cast<std::size_t>(comp)];
  }
  double& value(std::size_t point, int comp = 0) {
    return values_[point * static_cast<std::size_t>(comps_) + static_cast<std::size_t>(comp)];
  }
  const std::vector<double>& data() const { return values_; }
  std::vector<double>& data() { return values_; }

  std::array<int, 3> index_of(std::size_t point) const;
  std::size_t point_of(const std::array<int, 3>& idx) const;
  // Cell-center coordinate along one axis for index i in [0, res).
  double coordinate(int i) const { return -half_width_ + (i + 0.5) * spacing(); }

  // Entries on the outermost `layers` cell layers are exactly zero.
  bool support_margin_ok(int layers = 2) const;
  double max_abs() const;

 private:
  int dim_, res_, comps_, tensor_order_;
  double half_width_;
  std::vector<double> values_;
};

// j-fold iterated order-2 central differences; output has dim^j components
// per point (component layout: newest axis is the leading index). Values
// outside the box count as zero, which is exact for compactly supported
// input.
GridFunction derivative_tensor(const GridFunction& f, int order);

// Pointwise Euclidean norm over all tensor entries.
GridFunction magnitude(const GridFunction& f);

// Small default family used by the CLI and smoke tests; supports scale with
// the box so everything fits with margin.
std::vector<TestFamilySpec> built_in_family(int dim, double half_width);

}  // namespace gnri
