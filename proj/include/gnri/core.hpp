#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnri {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Error taxonomy. Precondition violations carry their own types so the CLI
// can map them onto exit codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class support_error : public error {
 public:
  using error::error;
};
class resolution_error : public error {
 public:
  using error::error;
};
class exponent_error : public error {
 public:
  using error::error;
};
class hypothesis_error : public error {
 public:
  using error::error;
};
class bracket_error : public error {
 public:
  using error::error;
};
class parse_error : public error {
 public:
  using error::error;
};

// Geometric grid from lo to hi with a fixed point density per decade of t.
std::vector<double> log_grid(double lo, double hi, int points_per_decade);
// Geometric grid with a fixed total point count (count >= 2).
std::vector<double> log_grid_n(double lo, double hi, int count);

// Thread cap from GN_THREADS (default: hardware concurrency, at most 8).
int thread_budget();
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct DivergenceVerdict {
  bool divergent = false;
  int direction = 0;    // +1 grows toward large t, -1 toward small t
  double growth = 1.0;  // largest growth factor over a 4-decade window
  double slope = 0.0;   // log-log slope fitted near the witness end
  double sup = 0.0;
};

// Curve heuristic: divergent iff the values grow by >= 100x across some
// 4-decade window of t (either direction). Robust against slow log factors.
DivergenceVerdict detect_fast_divergence(const std::vector<double>& t,
                                         const std::vector<double>& y);

// Closed-form ratio heuristic: unbounded iff sup > 1e6, or the per-decade
// maxima grow strictly monotonically toward one end of the grid with a
// non-vanishing fitted end slope. Catches slow (logarithmic) divergence that
// the 100x rule ignores while ignoring ratios that level off at a finite
// limit. direction: 0 = either end, +1 = toward large t, -1 = toward small t.
bool grows_unbounded(const std::vector<double>& t, const std::vector<double>& y,
                     int direction = 0);

// Least-squares slope of log10(y) against log10(t).
double loglog_slope(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace gnri
