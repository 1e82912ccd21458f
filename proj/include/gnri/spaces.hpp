#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gnri/rearrange.hpp"

namespace gnri {

// Convex superlinear generator of an Orlicz space. Closed-form families plus
// a tabulated monotone form (log-log interpolation between knots).
class YoungFunction {
 public:
  enum class Kind { power, power_log, composed, tabulated };

  static YoungFunction power(double p);
  static YoungFunction power_log(double p, double a);
  static YoungFunction composed(const YoungFunction& base, double alpha);
  static YoungFunction tabulated(std::vector<double> ts, std::vector<double> as);

  double operator()(double t) const;
  // Monotone bisection; A(inverse(y)) = y to ~1e-12 relative.
  double inverse(double y) const;

  Kind kind() const { return kind_; }
  std::string str() const;
  static YoungFunction parse(const std::string& text);

 private:
  YoungFunction() = default;
  Kind kind_ = Kind::power;
  double p_ = 2.0, a_ = 0.0, alpha_ = 1.0;
  std::shared_ptr<const YoungFunction> base_;
  std::vector<double> log_t_, log_a_;  // tabulated knots in log-log
};

struct YoungCheckReport {
  bool increasing = false;
  bool convex = false;
  bool superlinear = false;  // A(t)/t at 1e12 exceeds 1e3 * A(1)
  bool sublinear = false;    // A(t)/t at 1e-12 below 1e-3 * A(1)
  double ratio_large = 0.0;  // A(1e12)/1e12 / A(1)
  double ratio_small = 0.0;  // A(1e-12)/1e-12 / A(1)
  bool heuristic_index = false;  // tabulated generator: index is a heuristic
  bool ok() const { return increasing && convex && superlinear && sublinear; }
};

// Numerical validation of the Young-function invariants (diagnostic; the
// CLI `young-check` verb prints it). Weak-but-legitimate generators like
// t^1.01 fail the superlinearity proxy without being rejected elsewhere.
YoungCheckReport young_check(const YoungFunction& A);

double young_inverse(const YoungFunction& A, double y);

// Upper dilation index of the fundamental function 1/A^{-1}(1/t): the upper
// Boyd index for the implemented closed-form families.
double upper_index_estimate(const YoungFunction& A);

struct SpaceSpec {
  enum class Kind { lebesgue, lorentz, orlicz };

  Kind kind = Kind::lebesgue;
  double P = 2.0;  // primary exponent (Lebesgue p / Lorentz P)
  double p = 2.0;  // secondary Lorentz exponent
  std::optional<YoungFunction> A;

  static SpaceSpec lebesgue(double p);
  static SpaceSpec lorentz(double P, double p);
  static SpaceSpec orlicz(YoungFunction A);

  std::string str() const;
  static SpaceSpec parse(const std::string& text);
};

// ( ∫ t^{p/P-1} u*(t)^p dt )^{1/p}, exact segment-by-segment quadrature;
// p = inf: sup over segments of t^{1/P} u*(t) at the right endpoints.
double lorentz_norm(const StepRearrangement& r, double P, double p);

// ρ_A = Σ A(value)·width (equals the spatial integral by equimeasurability).
double orlicz_modular(const StepRearrangement& r, const YoungFunction& A);

// inf{λ : ρ_A(u/λ) <= 1} by bisection on the strictly monotone modular.
double luxemburg_norm(const StepRearrangement& r, const YoungFunction& A);

// φ_X(t): t^{1/P} for Lebesgue/Lorentz, 1/A^{-1}(1/t) for Orlicz.
double fundamental_function(const SpaceSpec& space, double t);

// X^α: Lebesgue(p) -> Lebesgue(αp), Lorentz(P,p) -> Lorentz(αP,αp),
// Orlicz(A) -> Orlicz(A(t^α)).
SpaceSpec convexify(const SpaceSpec& space, double alpha);

double space_norm(const StepRearrangement& r, const SpaceSpec& space);

}  // namespace gnri
