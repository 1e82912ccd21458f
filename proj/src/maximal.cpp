#include "gnri/maximal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace gnri {

namespace {

// Inclusive-prefix summed-area table with a zero guard layer: sat index i
// covers cells [0, i) along each axis.
class SummedArea {
 public:
  SummedArea(const GridFunction& f) : dim_(f.dim()), m_(f.res()) {
    const int s = m_ + 1;
    std::size_t total = 1;
    for (int d = 0; d < dim_; ++d) total *= static_cast<std::size_t>(s);
    sat_.assign(total, 0.0);
    const std::size_t n = f.points();
    for (std::size_t p = 0; p < n; ++p) {
      const auto idx = f.index_of(p);
      sat_[at(idx[0] + 1, dim_ >= 2 ? idx[1] + 1 : 0, dim_ >= 3 ? idx[2] + 1 : 0)] = f.value(p);
    }
    // prefix along each axis in turn
    const int e1 = dim_ >= 2 ? s : 1;
    const int e2 = dim_ >= 3 ? s : 1;
    for (int i2 = 0; i2 < e2; ++i2)
      for (int i1 = 0; i1 < e1; ++i1)
        for (int i0 = 1; i0 < s; ++i0) sat_[at(i0, i1, i2)] += sat_[at(i0 - 1, i1, i2)];
    if (dim_ >= 2)
      for (int i2 = 0; i2 < e2; ++i2)
        for (int i1 = 1; i1 < e1; ++i1)
          for (int i0 = 0; i0 < s; ++i0) sat_[at(i0, i1, i2)] += sat_[at(i0, i1 - 1, i2)];
    if (dim_ >= 3)
      for (int i2 = 1; i2 < e2; ++i2)
        for (int i1 = 0; i1 < e1; ++i1)
          for (int i0 = 0; i0 < s; ++i0) sat_[at(i0, i1, i2)] += sat_[at(i0, i1, i2 - 1)];
  }

  // sum of f over the half-open cell box [lo, hi), already clamped by caller
  double box(const std::array<int, 3>& lo, const std::array<int, 3>& hi) const {
    switch (dim_) {
      case 1:
        return sat_[at(hi[0], 0, 0)] - sat_[at(lo[0], 0, 0)];
      case 2:
        return sat_[at(hi[0], hi[1], 0)] - sat_[at(lo[0], hi[1], 0)] -
               sat_[at(hi[0], lo[1], 0)] + sat_[at(lo[0], lo[1], 0)];
      default:
        return sat_[at(hi[0], hi[1], hi[2])] - sat_[at(lo[0], hi[1], hi[2])] -
               sat_[at(hi[0], lo[1], hi[2])] - sat_[at(hi[0], hi[1], lo[2])] +
               sat_[at(lo[0], lo[1], hi[2])] + sat_[at(lo[0], hi[1], lo[2])] +
               sat_[at(hi[0], lo[1], lo[2])] - sat_[at(lo[0], lo[1], lo[2])];
    }
  }

 private:
  std::size_t at(int i0, int i1, int i2) const {
    const std::size_t s = static_cast<std::size_t>(m_ + 1);
    return (static_cast<std::size_t>(i2) * (dim_ >= 2 ? s : 1) + static_cast<std::size_t>(i1)) *
               s +
           static_cast<std::size_t>(i0);
  }
  int dim_, m_;
  std::vector<double> sat_;
};

struct Shaped {
  std::array<int, 3> ext{1, 1, 1};
  std::vector<double> data;
  void resize(const std::array<int, 3>& e) {
    ext = e;
    data.assign(static_cast<std::size_t>(e[0]) * e[1] * e[2], 0.0);
  }
  std::size_t at(int i0, int i1, int i2) const {
    return (static_cast<std::size_t>(i2) * ext[1] + static_cast<std::size_t>(i1)) *
               static_cast<std::size_t>(ext[0]) +
           static_cast<std::size_t>(i0);
  }
};

// out[x] = max over in[x .. x+window-1] with the given strides.
void sliding_max_line(const double* in, int count, std::size_t stride, int window, double* out,
                      std::size_t out_stride, std::vector<int>& dq) {
  dq.resize(static_cast<std::size_t>(count));
  int head = 0, tail = 0;
  for (int e = 0; e < count; ++e) {
    const double v = in[static_cast<std::size_t>(e) * stride];
    while (tail > head && in[static_cast<std::size_t>(dq[tail - 1]) * stride] <= v) --tail;
    dq[static_cast<std::size_t>(tail++)] = e;
    const int x = e - window + 1;
    if (x >= 0) {
      while (dq[head] < x) ++head;
      out[static_cast<std::size_t>(x) * out_stride] =
          in[static_cast<std::size_t>(dq[head]) * stride];
    }
  }
}

void sliding_max_axis(const Shaped& in, Shaped& out, int axis, int window) {
  auto ext = in.ext;
  ext[static_cast<std::size_t>(axis)] = in.ext[static_cast<std::size_t>(axis)] - window + 1;
  out.resize(ext);
  std::array<std::size_t, 3> stride{1, static_cast<std::size_t>(in.ext[0]),
                                    static_cast<std::size_t>(in.ext[0]) *
                                        static_cast<std::size_t>(in.ext[1])};
  std::array<std::size_t, 3> out_stride{1, static_cast<std::size_t>(ext[0]),
                                        static_cast<std::size_t>(ext[0]) *
                                            static_cast<std::size_t>(ext[1])};
  const int o1 = axis == 0 ? 1 : 0;
  const int o2 = axis == 2 ? 1 : 2;
  std::vector<int> dq;
  for (int j2 = 0; j2 < in.ext[static_cast<std::size_t>(o2)]; ++j2)
    for (int j1 = 0; j1 < in.ext[static_cast<std::size_t>(o1)]; ++j1) {
      const std::size_t base = static_cast<std::size_t>(j1) * stride[static_cast<std::size_t>(o1)] +
                               static_cast<std::size_t>(j2) * stride[static_cast<std::size_t>(o2)];
      const std::size_t out_base =
          static_cast<std::size_t>(j1) * out_stride[static_cast<std::size_t>(o1)] +
          static_cast<std::size_t>(j2) * out_stride[static_cast<std::size_t>(o2)];
      sliding_max_line(in.data.data() + base, in.ext[static_cast<std::size_t>(axis)],
                       stride[static_cast<std::size_t>(axis)], window, out.data.data() + out_base,
                       out_stride[static_cast<std::size_t>(axis)], dq);
    }
}

}  // namespace

GridFunction maximal_operator(const GridFunction& f) {
  std::optional<GridFunction> mag;
  const GridFunction* src = &f;
  if (f.comps() > 1) {
    mag.emplace(magnitude(f));
    src = &*mag;
  }
  const int n = src->dim();
  const int m = src->res();
  GridFunction abs_f(n, src->half_width(), m, 1);
  for (std::size_t p = 0; p < src->points(); ++p) abs_f.value(p) = std::abs(src->value(p));

  const SummedArea sat(abs_f);
  GridFunction result(n, src->half_width(), m, 1);

  Shaped avg, tmp_a, tmp_b;
  for (int ell = 1; ell <= m; ++ell) {
    std::array<int, 3> ext{1, 1, 1};
    for (int d = 0; d < n; ++d) ext[static_cast<std::size_t>(d)] = m + ell - 1;
    avg.resize(ext);
    double cells = 1.0;
    for (int d = 0; d < n; ++d) cells *= ell;
    const double inv_cells = 1.0 / cells;

    const int e0 = ext[0], e1 = ext[1], e2 = ext[2];
    parallel_for(static_cast<std::size_t>(e2) * static_cast<std::size_t>(e1), [&](std::size_t row) {
      const int i2 = static_cast<int>(row / static_cast<std::size_t>(e1));
      const int i1 = static_cast<int>(row % static_cast<std::size_t>(e1));
      std::array<int, 3> lo{0, 0, 0}, hi{1, 1, 1};
      if (n >= 2) {
        const int a1 = i1 - (ell - 1);
        lo[1] = std::clamp(a1, 0, m);
        hi[1] = std::clamp(a1 + ell, 0, m);
      }
      if (n >= 3) {
        const int a2 = i2 - (ell - 1);
        lo[2] = std::clamp(a2, 0, m);
        hi[2] = std::clamp(a2 + ell, 0, m);
      }
      const bool empty_rest = (n >= 2 && lo[1] >= hi[1]) || (n >= 3 && lo[2] >= hi[2]);
      for (int i0 = 0; i0 < e0; ++i0) {
        const int a0 = i0 - (ell - 1);
        lo[0] = std::clamp(a0, 0, m);
        hi[0] = std::clamp(a0 + ell, 0, m);
        double s = 0.0;
        if (!empty_rest && lo[0] < hi[0]) s = sat.box(lo, hi);
        avg.data[avg.at(i0, i1, i2)] = s * inv_cells;
      }
    });

    const Shaped* cur = &avg;
    for (int d = 0; d < n; ++d) {
      Shaped& dst = (cur == &tmp_a) ? tmp_b : tmp_a;
      sliding_max_axis(*cur, dst, d, ell);
      cur = &dst;
    }
    for (std::size_t p = 0; p < result.points(); ++p) {
      const auto idx = result.index_of(p);
      const double v = cur->data[cur->at(idx[0], idx[1], idx[2])];
      if (v > result.value(p)) result.value(p) = v;
    }
  }
  return result;
}

RieszHerzBand riesz_herz_ratio(const GridFunction& f, const std::vector<double>& t_grid) {
  const StepRearrangement r = rearrange(f);
  if (r.empty()) throw error("riesz_herz_ratio: f must not be identically zero");
  const StepRearrangement mr = rearrange(maximal_operator(f));
  RieszHerzBand band;
  const double cap = mr.total_measure();
  for (double t : t_grid) {
    if (!(t > 0.0) || t >= cap) continue;
    const double den = mr.value_at(t);
    if (!(den > 0.0)) continue;
    const double ratio = maximal_rearrangement(r, t) / den;
    band.samples.emplace_back(t, ratio);
    band.c_min = std::min(band.c_min, ratio);
    band.c_max = std::max(band.c_max, ratio);
  }
  if (band.samples.empty()) throw error("riesz_herz_ratio: no valid t in the grid");
  return band;
}

std::vector<double> default_riesz_herz_grid(const GridFunction& f) {
  const double supp = rearrange(f).total_measure();
  if (!(supp > 0.0)) throw error("default_riesz_herz_grid: f must not be identically zero");
  return log_grid(1e-3 * supp, 1e2 * supp, 64);
}

}  // namespace gnri
