#include "gnri/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace gnri {

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || points_per_decade < 1)
    throw error("log_grid: need 0 < lo < hi and points_per_decade >= 1");
  const double decades = std::log10(hi / lo);
  const int count = std::max(2, static_cast<int>(std::lround(decades * points_per_decade)) + 1);
  return log_grid_n(lo, hi, count);
}

std::vector<double> log_grid_n(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw error("log_grid_n: need 0 < lo < hi and count >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

int thread_budget() {
  static const int budget = [] {
    if (const char* env = std::getenv("GN_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hc == 0 ? 1u : hc, 8u));
  }();
  return budget;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const int threads = thread_budget();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

struct Sample {
  double t, y;
};

std::vector<Sample> sorted_samples(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size()) throw error("divergence check: size mismatch");
  std::vector<Sample> s;
  s.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] > 0.0 && y[i] >= 0.0 && std::isfinite(y[i])) s.push_back({t[i], y[i]});
  std::sort(s.begin(), s.end(), [](const Sample& a, const Sample& b) { return a.t < b.t; });
  return s;
}

double slope_near_end(const std::vector<Sample>& s, bool large_t_end) {
  if (s.size() < 2) return 0.0;
  const double edge = large_t_end ? s.back().t : s.front().t;
  std::vector<double> ts, ys;
  for (const auto& smp : s) {
    const double span = large_t_end ? edge / smp.t : smp.t / edge;
    if (span <= 1.0001e4 && smp.y > 0.0) {
      ts.push_back(smp.t);
      ys.push_back(smp.y);
    }
  }
  if (ts.size() < 2) return 0.0;
  return loglog_slope(ts, ys);
}

}  // namespace

double loglog_slope(const std::vector<double>& t, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log10(t[i]), ly = std::log10(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return 0.0;
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

DivergenceVerdict detect_fast_divergence(const std::vector<double>& t,
                                         const std::vector<double>& y) {
  DivergenceVerdict v;
  const auto s = sorted_samples(t, y);
  if (s.empty()) return v;
  for (const auto& smp : s) v.sup = std::max(v.sup, smp.y);

  // growth toward large t: y_j over the min of y on {t <= t_j / 1e4}
  double best_up = 1.0, best_down = 1.0;
  {
    std::size_t lo = 0;
    double running_min = kInf;
    for (std::size_t j = 0; j < s.size(); ++j) {
      while (lo < s.size() && s[lo].t <= s[j].t / 1e4 * (1.0 + 1e-9)) {
        running_min = std::min(running_min, s[lo].y);
        ++lo;
      }
      if (std::isfinite(running_min) && running_min > 0.0)
        best_up = std::max(best_up, s[j].y / running_min);
    }
  }
  {
    std::size_t hi = s.size();
    double running_min = kInf;
    for (std::size_t j = s.size(); j-- > 0;) {
      while (hi > 0 && s[hi - 1].t >= s[j].t * 1e4 / (1.0 + 1e-9)) {
        --hi;
        running_min = std::min(running_min, s[hi].y);
      }
      if (std::isfinite(running_min) && running_min > 0.0)
        best_down = std::max(best_down, s[j].y / running_min);
    }
  }
  if (best_up >= best_down) {
    v.growth = best_up;
    v.direction = +1;
  } else {
    v.growth = best_down;
    v.direction = -1;
  }
  v.divergent = v.growth >= 100.0;
  v.slope = slope_near_end(s, v.direction > 0);
  if (!v.divergent) v.direction = 0;
  return v;
}

bool grows_unbounded(const std::vector<double>& t, const std::vector<double>& y, int direction) {
  const auto s = sorted_samples(t, y);
  if (s.empty()) return false;
  double sup = 0.0;
  for (const auto& smp : s) sup = std::max(sup, smp.y);
  if (sup > 1e6) return true;

  // per-decade maxima, in increasing t order
  std::map<int, double> decade_max;
  for (const auto& smp : s) {
    const int d = static_cast<int>(std::floor(std::log10(smp.t)));
    auto [it, inserted] = decade_max.try_emplace(d, smp.y);
    if (!inserted) it->second = std::max(it->second, smp.y);
  }
  std::vector<double> m;
  m.reserve(decade_max.size());
  for (const auto& [d, val] : decade_max) m.push_back(val);
  if (m.size() < 2) return false;
  const std::size_t need = std::min<std::size_t>(3, m.size() - 1);

  // monotone decade-maxima run toward an end, gated by the fitted slope over
  // the nearest 6 decades; the slope gate keeps curves that converge to a
  // finite limit (monotone but flattening) from firing
  const auto end_slope = [&](bool large_end) {
    const double edge = large_end ? s.back().t : s.front().t;
    std::vector<double> ts, ys;
    for (const auto& smp : s) {
      const double span = large_end ? edge / smp.t : smp.t / edge;
      if (span <= 1.0001e6) {
        ts.push_back(smp.t);
        ys.push_back(smp.y);
      }
    }
    return loglog_slope(ts, ys);
  };

  if (direction >= 0) {
    std::size_t run_up = 0;  // trailing strict increases
    for (std::size_t i = m.size() - 1; i-- > 0;) {
      if (m[i + 1] > m[i] * (1.0 + 1e-9))
        ++run_up;
      else
        break;
    }
    if (run_up >= need && end_slope(true) >= 0.005) return true;
  }
  if (direction <= 0) {
    std::size_t run_down = 0;  // leading strict decreases = growth toward small t
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      if (m[i] > m[i + 1] * (1.0 + 1e-9))
        ++run_down;
      else
        break;
    }
    if (run_down >= need && end_slope(false) <= -0.005) return true;
  }
  return false;
}

}  // namespace gnri
