#include "gnri/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gnri {

namespace {

bool is_inf(double x) { return std::isinf(x) && x > 0; }

double parse_exponent(const std::string& text, const std::string& field) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw parse_error("");
    return v;
  } catch (...) {
    throw parse_error("space: bad numeric value for field '" + field + "': \"" + text + "\"");
  }
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
  if (!(p > 1.0)) throw exponent_error("YoungFunction::power: need p > 1");
  YoungFunction A;
  A.kind_ = Kind::power;
  A.p_ = p;
  return A;
}

YoungFunction YoungFunction::power_log(double p, double a) {
  if (!(p > 1.0)) throw exponent_error("YoungFunction::power_log: need p > 1");
  YoungFunction A;
  A.kind_ = Kind::power_log;
  A.p_ = p;
  A.a_ = a;
  return A;
}

YoungFunction YoungFunction::composed(const YoungFunction& base, double alpha) {
  if (!(alpha > 0.0)) throw exponent_error("YoungFunction::composed: need alpha > 0");
  YoungFunction A;
  A.kind_ = Kind::composed;
  A.alpha_ = alpha;
  A.base_ = std::make_shared<YoungFunction>(base);
  return A;
}

YoungFunction YoungFunction::tabulated(std::vector<double> ts, std::vector<double> as) {
  if (ts.size() != as.size() || ts.size() < 2)
    throw error("YoungFunction::tabulated: need >= 2 knots");
  YoungFunction A;
  A.kind_ = Kind::tabulated;
  A.log_t_.reserve(ts.size());
  A.log_a_.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0) || !(as[i] > 0.0))
      throw error("YoungFunction::tabulated: knots must be positive");
    if (i > 0 && !(ts[i] > ts[i - 1] && as[i] > as[i - 1]))
      throw error("YoungFunction::tabulated: knots must be strictly increasing");
    A.log_t_.push_back(std::log(ts[i]));
    A.log_a_.push_back(std::log(as[i]));
  }
  return A;
}

double YoungFunction::operator()(double t) const {
  if (t < 0.0) t = -t;
  if (t == 0.0) return 0.0;
  switch (kind_) {
    case Kind::power:
      return std::pow(t, p_);
    case Kind::power_log:
      return std::pow(t, p_) * std::pow(std::log(std::numbers::e + t), a_);
    case Kind::composed:
      return (*base_)(std::pow(t, alpha_));
    case Kind::tabulated: {
      const double lt = std::log(t);
      std::size_t hi = 1;
      while (hi + 1 < log_t_.size() && log_t_[hi] < lt) ++hi;
      const double x0 = log_t_[hi - 1], x1 = log_t_[hi];
      const double y0 = log_a_[hi - 1], y1 = log_a_[hi];
      return std::exp(y0 + (y1 - y0) * (lt - x0) / (x1 - x0));
    }
  }
  throw error("unreachable Young kind");
}

double YoungFunction::inverse(double y) const {
  if (!(y > 0.0) || !std::isfinite(y))
    throw error("YoungFunction::inverse: y must be positive and finite");
  double lo = 1.0, hi = 1.0;
  int guard = 0;
  while ((*this)(hi) < y) {
    hi *= 2.0;
    if (++guard > 4000 || hi > 1e300)
      throw bracket_error("YoungFunction::inverse: y out of range (too large)");
  }
  guard = 0;
  while ((*this)(lo) > y) {
    lo *= 0.5;
    if (++guard > 4000 || lo < 1e-300)
      throw bracket_error("YoungFunction::inverse: y out of range (too small)");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string YoungFunction::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::power:
      os << "pow:" << p_;
      break;
    case Kind::power_log:
      os << "plog:" << p_ << "," << a_;
      break;
    case Kind::composed:
      os << "comp:" << base_->str() << ":" << alpha_;
      break;
    case Kind::tabulated:
      os << "tab[" << log_t_.size() << " knots]";
      break;
  }
  return os.str();
}

namespace {

YoungFunction parse_young_tokens(const std::vector<std::string>& toks, std::size_t& pos) {
  if (pos >= toks.size()) throw parse_error("young: missing generator name");
  const std::string head = toks[pos++];
  if (head == "pow") {
    if (pos >= toks.size()) throw parse_error("young: pow needs an exponent");
    return YoungFunction::power(parse_exponent(toks[pos++], "pow"));
  }
  if (head == "plog") {
    if (pos >= toks.size()) throw parse_error("young: plog needs \"p,a\"");
    const std::string both = toks[pos++];
    const auto comma = both.find(',');
    if (comma == std::string::npos) throw parse_error("young: plog needs \"p,a\", got \"" + both + "\"");
    return YoungFunction::power_log(parse_exponent(both.substr(0, comma), "plog p"),
                                    parse_exponent(both.substr(comma + 1), "plog a"));
  }
  if (head == "comp") {
    YoungFunction base = parse_young_tokens(toks, pos);
    if (pos >= toks.size()) throw parse_error("young: comp needs a trailing alpha");
    return YoungFunction::composed(base, parse_exponent(toks[pos++], "comp alpha"));
  }
  throw parse_error("young: unknown generator \"" + head + "\"");
}

std::vector<std::string> split_colons(const std::string& text) {
  std::vector<std::string> toks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) toks.push_back(item);
  return toks;
}

}  // namespace

YoungFunction YoungFunction::parse(const std::string& text) {
  const auto toks = split_colons(text);
  std::size_t pos = 0;
  YoungFunction A = parse_young_tokens(toks, pos);
  if (pos != toks.size()) throw parse_error("young: trailing tokens in \"" + text + "\"");
  return A;
}

YoungCheckReport young_check(const YoungFunction& A) {
  YoungCheckReport rep;
  rep.heuristic_index = A.kind() == YoungFunction::Kind::tabulated;

  const auto grid = log_grid_n(1e-12, 1e12, 128);
  rep.increasing = true;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(A(grid[i]) > A(grid[i - 1]) * (1.0 + 1e-12))) rep.increasing = false;

  rep.convex = true;
  for (std::size_t i = 0; i < grid.size() && rep.convex; ++i)
    for (std::size_t j = i; j < grid.size(); ++j) {
      const double s = grid[i], t = grid[j];
      const double lhs = A(0.5 * (s + t));
      const double rhs = 0.5 * (A(s) + A(t));
      if (!(lhs <= rhs * (1.0 + 1e-9))) {
        rep.convex = false;
        break;
      }
    }

  const double a1 = A(1.0);
  rep.ratio_large = A(1e12) / 1e12 / a1;
  rep.ratio_small = A(1e-12) / 1e-12 / a1;
  rep.superlinear = rep.ratio_large > 1e3;
  rep.sublinear = rep.ratio_small < 1e-3;
  return rep;
}

double young_inverse(const YoungFunction& A, double y) { return A.inverse(y); }

double upper_index_estimate(const YoungFunction& A) {
  const auto phi = [&A](double t) { return 1.0 / A.inverse(1.0 / t); };
  // Sample the dilation ratio deep inside both asymptotic ends: there the
  // slowly varying factors of phi(st)/phi(t) cancel, so the estimate tracks
  // the end exponents (= the index for the implemented families). Near the
  // transition the ratio overshoots by O(loglog/log), which never converges
  // at usable scales.
  std::vector<double> tgrid = log_grid_n(1e-40, 1e-25, 128);
  for (double t : log_grid_n(1e25, 1e40, 128)) tgrid.push_back(t);
  double best = 0.0;
  for (int e = 10; e <= 20; e += 2) {
    const double s = std::ldexp(1.0, e);
    double h = 0.0;
    for (double t : tgrid) h = std::max(h, phi(s * t) / phi(t));
    best = std::max(best, std::log(h) / std::log(s));
  }
  return best;
}

SpaceSpec SpaceSpec::lebesgue(double p) {
  if (!(p >= 1.0)) throw exponent_error("Lebesgue: need p >= 1");
  SpaceSpec s;
  s.kind = Kind::lebesgue;
  s.P = p;
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::lorentz(double P, double p) {
  if (!(P >= 1.0) || !(p >= 1.0)) throw exponent_error("Lorentz: need P, p >= 1");
  if (is_inf(P) && !is_inf(p))
    throw exponent_error("Lorentz: P = inf only pairs with p = inf");
  SpaceSpec s;
  s.kind = Kind::lorentz;
  s.P = P;
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::orlicz(YoungFunction A) {
  SpaceSpec s;
  s.kind = Kind::orlicz;
  s.A = std::move(A);
  return s;
}

std::string SpaceSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::lebesgue:
      os << "Lp:" << P;
      break;
    case Kind::lorentz:
      os << "Lor:" << P << "," << p;
      break;
    case Kind::orlicz:
      os << "Orl:" << A->str();
      break;
  }
  return os.str();
}

SpaceSpec SpaceSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw parse_error("space: expected \"Lp:..\", \"Lor:..\" or \"Orl:..\", got \"" + text + "\"");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (head == "Lp") return lebesgue(parse_exponent(rest, "Lebesgue p"));
  if (head == "Lor") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw parse_error("space: Lorentz needs \"P,q\", missing second exponent in \"" + text + "\"");
    return lorentz(parse_exponent(rest.substr(0, comma), "Lorentz P"),
                   parse_exponent(rest.substr(comma + 1), "Lorentz q"));
  }
  if (head == "Orl") return orlicz(YoungFunction::parse(rest));
  throw parse_error("space: unknown space kind \"" + head + "\"");
}

double lorentz_norm(const StepRearrangement& r, double P, double p) {
  if (!(P >= 1.0) || !(p >= 1.0)) throw exponent_error("lorentz_norm: need P, p >= 1");
  if (is_inf(P) && !is_inf(p))
    throw exponent_error("lorentz_norm: P = inf requires p = inf");
  if (r.empty()) return 0.0;
  if (is_inf(p)) {
    if (is_inf(P)) return r.value(0);
    double sup = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
      sup = std::max(sup, r.value(i) * std::pow(r.right_edge(i), 1.0 / P));
    return sup;
  }
  const double e = p / P;
  double sum = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double a = r.left_edge(i), b = r.right_edge(i);
    sum += std::pow(r.value(i), p) * (std::pow(b, e) - std::pow(a, e)) / e;
  }
  return std::pow(sum, 1.0 / p);
}

double orlicz_modular(const StepRearrangement& r, const YoungFunction& A) {
  double sum = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double term = A(r.value(i)) * r.width(i);
    if (!std::isfinite(term)) return kInf;  // overflow marker
    sum += term;
  }
  return sum;
}

double luxemburg_norm(const StepRearrangement& r, const YoungFunction& A) {
  if (r.empty()) return 0.0;
  const auto rho = [&](double lambda) {
    double sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double term = A(r.value(i) / lambda) * r.width(i);
      if (!std::isfinite(term)) return kInf;
      sum += term;
    }
    return sum;
  };
  double lo = r.value(0), hi = lo;
  int guard = 0;
  while (rho(hi) > 1.0) {
    hi *= 2.0;
    if (++guard > 2000) throw bracket_error("luxemburg_norm: no upper bracket");
  }
  guard = 0;
  while (rho(lo) <= 1.0) {
    lo *= 0.5;
    if (lo < 1e-300) {
      // modular stays <= 1 for every lambda: degenerate generator
      if (rho(lo) <= 1.0) throw bracket_error("luxemburg_norm: modular never reaches 1");
      break;
    }
    if (++guard > 2000) throw bracket_error("luxemburg_norm: no lower bracket");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double fundamental_function(const SpaceSpec& space, double t) {
  if (!(t > 0.0)) throw error("fundamental_function: t must be positive");
  switch (space.kind) {
    case SpaceSpec::Kind::lebesgue:
    case SpaceSpec::Kind::lorentz:
      return is_inf(space.P) ? 1.0 : std::pow(t, 1.0 / space.P);
    case SpaceSpec::Kind::orlicz:
      return 1.0 / space.A->inverse(1.0 / t);
  }
  throw error("unreachable space kind");
}

SpaceSpec convexify(const SpaceSpec& space, double alpha) {
  if (!(alpha > 0.0)) throw exponent_error("convexify: alpha must be positive");
  switch (space.kind) {
    case SpaceSpec::Kind::lebesgue: {
      const double q = alpha * space.P;
      if (!(q >= 1.0 - 1e-12)) throw exponent_error("convexify: alpha*p < 1 is not a space");
      return SpaceSpec::lebesgue(std::max(q, 1.0));
    }
    case SpaceSpec::Kind::lorentz: {
      const double Q = is_inf(space.P) ? kInf : alpha * space.P;
      const double q = is_inf(space.p) ? kInf : alpha * space.p;
      if (!(Q >= 1.0 - 1e-12) || !(q >= 1.0 - 1e-12))
        throw exponent_error("convexify: alpha*P or alpha*q < 1 is not a space");
      return SpaceSpec::lorentz(is_inf(Q) ? kInf : std::max(Q, 1.0),
                                is_inf(q) ? kInf : std::max(q, 1.0));
    }
    case SpaceSpec::Kind::orlicz:
      return SpaceSpec::orlicz(YoungFunction::composed(*space.A, alpha));
  }
  throw error("unreachable space kind");
}

double space_norm(const StepRearrangement& r, const SpaceSpec& space) {
  switch (space.kind) {
    case SpaceSpec::Kind::lebesgue:
      return lorentz_norm(r, space.P, space.P);
    case SpaceSpec::Kind::lorentz:
      return lorentz_norm(r, space.P, space.p);
    case SpaceSpec::Kind::orlicz:
      return luxemburg_norm(r, *space.A);
  }
  throw error("unreachable space kind");
}

}  // namespace gnri
