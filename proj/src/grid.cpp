#include "gnri/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gnri {

namespace {

double cube_side(double measure, int dim) { return std::pow(measure, 1.0 / dim); }

}  // namespace

TestFamilySpec TestFamilySpec::indicator(double measure) {
  TestFamilySpec s;
  s.family = Family::indicator;
  s.measure = measure;
  return s;
}

TestFamilySpec TestFamilySpec::gaussian(double radius) {
  TestFamilySpec s;
  s.family = Family::gaussian_bump;
  s.radius = radius;
  return s;
}

TestFamilySpec TestFamilySpec::polynomial(double radius, int degree) {
  TestFamilySpec s;
  s.family = Family::polynomial_bump;
  s.radius = radius;
  s.order = degree;
  return s;
}

TestFamilySpec TestFamilySpec::sa_bump(int k) {
  TestFamilySpec s;
  s.family = Family::sa_bump;
  s.order = k;
  return s;
}

TestFamilySpec dilate(TestFamilySpec spec, double s) {
  if (!(s > 0.0)) throw exponent_error("dilate: s must be positive");
  spec.dilation *= s;
  return spec;
}

double TestFamilySpec::base_radius(int dim) const {
  switch (family) {
    case Family::indicator:
      return 0.5 * cube_side(measure, dim);
    case Family::gaussian_bump:
    case Family::polynomial_bump:
      return radius;
    case Family::sa_bump:
      return 2.0;
  }
  throw error("unreachable family");
}

double TestFamilySpec::support_half_extent(int dim) const {
  double off = 0.0;
  for (int d = 0; d < dim; ++d) off = std::max(off, std::abs(center[static_cast<std::size_t>(d)]));
  return (off + base_radius(dim)) / dilation;
}

double TestFamilySpec::evaluate(const double* x, int dim) const {
  double d2 = 0.0;
  double y[3];
  for (int d = 0; d < dim; ++d) {
    y[d] = dilation * x[d] - center[static_cast<std::size_t>(d)];
    d2 += y[d] * y[d];
  }
  const double rho = std::sqrt(d2);
  switch (family) {
    case Family::indicator: {
      const double half = 0.5 * cube_side(measure, dim);
      for (int d = 0; d < dim; ++d)
        if (!(std::abs(y[d]) < half)) return 0.0;
      return 1.0;
    }
    case Family::gaussian_bump: {
      if (!(rho < radius)) return 0.0;
      const double r2 = radius * radius;
      return std::exp(-d2 / (r2 - d2));
    }
    case Family::polynomial_bump: {
      if (!(rho < radius)) return 0.0;
      const double base = 1.0 - d2 / (radius * radius);
      return std::pow(base, order);
    }
    case Family::sa_bump: {
      if (rho < 1.0) return 2.0 - std::pow(rho, order);
      if (rho <= 2.0) return std::pow(2.0 - rho, order);
      return 0.0;
    }
  }
  throw error("unreachable family");
}

std::string TestFamilySpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::indicator:
      os << "chi:" << measure;
      break;
    case Family::gaussian_bump:
      os << "gauss:r=" << radius;
      break;
    case Family::polynomial_bump:
      os << "poly:r=" << radius << ",d=" << order;
      break;
    case Family::sa_bump:
      os << "sa_bump:k=" << order;
      break;
  }
  if (dilation != 1.0) os << ",s=" << dilation;
  bool shifted = false;
  for (double c : center) shifted = shifted || c != 0.0;
  if (shifted) os << ",c=" << center[0] << "/" << center[1] << "/" << center[2];
  return os.str();
}

namespace {

double parse_num(const std::string& text, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw parse_error("");
    return v;
  } catch (...) {
    throw parse_error("family: bad numeric value for '" + field + "': \"" + text + "\"");
  }
}

}  // namespace

TestFamilySpec TestFamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  TestFamilySpec spec;
  if (name == "chi" || name == "indicator")
    spec.family = Family::indicator;
  else if (name == "gauss" || name == "gaussian_bump")
    spec.family = Family::gaussian_bump;
  else if (name == "poly" || name == "polynomial_bump")
    spec.family = Family::polynomial_bump;
  else if (name == "sa" || name == "sa_bump")
    spec.family = Family::sa_bump;
  else
    throw parse_error("family: unknown family \"" + name + "\"");

  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string item;
  bool first = true;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (!first) throw parse_error("family: expected key=value, got \"" + item + "\"");
      // bare leading number sets the primary parameter
      const double v = parse_num(item, "value");
      switch (spec.family) {
        case Family::indicator:
          spec.measure = v;
          break;
        case Family::gaussian_bump:
        case Family::polynomial_bump:
          spec.radius = v;
          break;
        case Family::sa_bump:
          spec.order = static_cast<int>(v);
          break;
      }
    } else {
      const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
      if (key == "k" || key == "d")
        spec.order = static_cast<int>(parse_num(val, key));
      else if (key == "r")
        spec.radius = parse_num(val, key);
      else if (key == "a" || key == "measure")
        spec.measure = parse_num(val, key);
      else if (key == "s")
        spec.dilation = parse_num(val, key);
      else if (key == "c") {
        std::stringstream cs(val);
        std::string part;
        int axis = 0;
        while (std::getline(cs, part, '/') && axis < 3)
          spec.center[static_cast<std::size_t>(axis++)] = parse_num(part, "c");
      } else
        throw parse_error("family: unknown key \"" + key + "\"");
    }
    first = false;
  }
  if (!(spec.dilation > 0.0)) throw parse_error("family: dilation s must be positive");
  return spec;
}

GridFunction::GridFunction(int dim, double half_width, int res, int comps, int tensor_order)
    : dim_(dim), res_(res), comps_(comps), tensor_order_(tensor_order), half_width_(half_width) {
  if (dim < 1 || dim > 3) throw error("GridFunction: dim must be 1, 2 or 3");
  if (res < 8) throw resolution_error("GridFunction: res must be at least 8");
  if (!(half_width > 0.0)) throw error("GridFunction: half_width must be positive");
  if (comps < 1 || tensor_order < 0) throw error("GridFunction: bad comps/tensor_order");
  const std::size_t pts = points();
  if (pts * static_cast<std::size_t>(comps) > (static_cast<std::size_t>(1) << 28))
    throw resolution_error("GridFunction: grid too large");
  values_.assign(pts * static_cast<std::size_t>(comps), 0.0);
}

std::size_t GridFunction::points() const {
  std::size_t p = 1;
  for (int d = 0; d < dim_; ++d) p *= static_cast<std::size_t>(res_);
  return p;
}

double GridFunction::cell_volume() const {
  double v = 1.0;
  for (int d = 0; d < dim_; ++d) v *= spacing();
  return v;
}

double GridFunction::box_measure() const {
  double v = 1.0;
  for (int d = 0; d < dim_; ++d) v *= 2.0 * half_width_;
  return v;
}

std::array<int, 3> GridFunction::index_of(std::size_t point) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int d = 0; d < dim_; ++d) {
    idx[static_cast<std::size_t>(d)] = static_cast<int>(point % static_cast<std::size_t>(res_));
    point /= static_cast<std::size_t>(res_);
  }
  return idx;
}

std::size_t GridFunction::point_of(const std::array<int, 3>& idx) const {
  std::size_t p = 0;
  for (int d = dim_ - 1; d >= 0; --d)
    p = p * static_cast<std::size_t>(res_) + static_cast<std::size_t>(idx[static_cast<std::size_t>(d)]);
  return p;
}

bool GridFunction::support_margin_ok(int layers) const {
  const std::size_t n = points();
  for (std::size_t p = 0; p < n; ++p) {
    const auto idx = index_of(p);
    bool boundary = false;
    for (int d = 0; d < dim_; ++d) {
      const int i = idx[static_cast<std::size_t>(d)];
      if (i < layers || i >= res_ - layers) boundary = true;
    }
    if (!boundary) continue;
    for (int c = 0; c < comps_; ++c)
      if (value(p, c) != 0.0) return false;
  }
  return true;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

GridFunction GridFunction::sample(const TestFamilySpec& spec, int dim, double half_width,
                                  int res) {
  GridFunction f(dim, half_width, res, 1);
  const double h = f.spacing();
  const double margin = half_width - 2.0 * h;
  if (!(spec.support_half_extent(dim) <= margin))
    throw support_error("sample: support of " + spec.str() +
                        " does not fit inside the box with a 2-layer margin");
  const std::size_t n = f.points();
  parallel_for(n, [&](std::size_t p) {
    const auto idx = f.index_of(p);
    double x[3] = {0, 0, 0};
    for (int d = 0; d < dim; ++d) x[d] = f.coordinate(idx[static_cast<std::size_t>(d)]);
    f.value(p) = spec.evaluate(x, dim);
  });
  return f;
}

GridFunction derivative_tensor(const GridFunction& f, int order) {
  if (order < 1) throw error("derivative_tensor: order must be >= 1");
  if (f.comps() != 1 || f.tensor_order() != 0)
    throw error("derivative_tensor: input must be scalar-valued");
  if (2 * order >= f.res())
    throw resolution_error("derivative_tensor: resolution too coarse for order " +
                           std::to_string(order));
  const int n = f.dim();
  const int m = f.res();
  const double inv2h = 1.0 / (2.0 * f.spacing());

  GridFunction cur = f;
  for (int level = 0; level < order; ++level) {
    const int in_comps = cur.comps();
    GridFunction next(n, f.half_width(), m, in_comps * n, level + 1);
    const std::size_t pts = cur.points();
    parallel_for(pts, [&](std::size_t p) {
      const auto idx = cur.index_of(p);
      for (int axis = 0; axis < n; ++axis) {
        const int i = idx[static_cast<std::size_t>(axis)];
        std::size_t plus = 0, minus = 0;
        bool has_plus = i + 1 < m, has_minus = i - 1 >= 0;
        if (has_plus) {
          auto up = idx;
          up[static_cast<std::size_t>(axis)] = i + 1;
          plus = cur.point_of(up);
        }
        if (has_minus) {
          auto dn = idx;
          dn[static_cast<std::size_t>(axis)] = i - 1;
          minus = cur.point_of(dn);
        }
        for (int c = 0; c < in_comps; ++c) {
          const double vp = has_plus ? cur.value(plus, c) : 0.0;
          const double vm = has_minus ? cur.value(minus, c) : 0.0;
          next.value(p, axis * in_comps + c) = (vp - vm) * inv2h;
        }
      }
    });
    cur = std::move(next);
  }
  return cur;
}

GridFunction magnitude(const GridFunction& f) {
  GridFunction out(f.dim(), f.half_width(), f.res(), 1);
  const int c = f.comps();
  parallel_for(f.points(), [&](std::size_t p) {
    double s = 0.0;
    for (int k = 0; k < c; ++k) {
      const double v = f.value(p, k);
      s += v * v;
    }
    out.value(p) = std::sqrt(s);
  });
  return out;
}

std::vector<TestFamilySpec> built_in_family(int dim, double half_width) {
  const double scale = half_width / 4.0;
  std::vector<TestFamilySpec> fam;
  fam.push_back(TestFamilySpec::indicator(std::pow(1.6 * scale, dim)));
  fam.push_back(TestFamilySpec::gaussian(0.9 * scale));
  fam.push_back(TestFamilySpec::polynomial(0.9 * scale, 6));
  fam.push_back(dilate(TestFamilySpec::sa_bump(2), 2.0 / (0.7 * half_width)));
  return fam;
}

}  // namespace gnri
