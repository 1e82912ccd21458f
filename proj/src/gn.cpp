#include "gnri/gn.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace gnri {

namespace {

void require_orders(int j, int k) {
  if (!(1 <= j && j < k && k <= 4)) throw exponent_error("need 1 <= j < k <= 4");
}

nlohmann::json records_json(const std::vector<FunctionRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rec : records)
    arr.push_back({{"family", rec.family}, {"lhs", rec.lhs}, {"rhs", rec.rhs}, {"ratio", rec.ratio}});
  return arr;
}

nlohmann::json problem_metadata(const GNProblem& pb) {
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& f : pb.family) fam.push_back(f.str());
  return {{"j", pb.j},
          {"k", pb.k},
          {"X", pb.X.str()},
          {"Y", pb.Y.str()},
          {"Z", pb.Z.str()},
          {"dim", pb.dim},
          {"res", pb.res},
          {"half_width", pb.half_width},
          {"family", fam},
          {"tolerances",
           {{"stability_drift", 0.20},
            {"balance", 1e-12},
            {"luxemburg_rel", 1e-13},
            {"divergence_fast", "100x per 4 decades"}}}};
}

std::vector<FunctionRecord> run_family(const GNProblem& pb, int res, bool starred) {
  std::vector<FunctionRecord> records(pb.family.size());
  parallel_for(pb.family.size(), [&](std::size_t i) {
    const GridFunction u = GridFunction::sample(pb.family[i], pb.dim, pb.half_width, res);
    const RatioParts parts = gn_ratio(u, pb.j, pb.k, pb.X, pb.Y, pb.Z, starred);
    records[i] = {pb.family[i].str(), parts.lhs, parts.rhs, parts.ratio};
  });
  return records;
}

VerificationReport make_report(const GNProblem& pb, const std::string& mode, bool starred) {
  VerificationReport rep;
  rep.mode = mode;
  rep.metadata = problem_metadata(pb);
  rep.metadata["starred_rhs"] = starred;
  rep.records = run_family(pb, pb.res, starred);
  double best = 0.0;
  bool finite = true;
  for (const auto& rec : rep.records) {
    if (!std::isfinite(rec.ratio)) finite = false;
    best = std::max(best, rec.ratio);
  }
  rep.best_constant = best;
  if (!finite) {
    rep.pass = false;
    rep.detail = "non-finite ratio in the family";
    return rep;
  }
  if (pb.check_stability) {
    const auto refined = run_family(pb, 2 * pb.res, starred);
    double best2 = 0.0;
    for (const auto& rec : refined) best2 = std::max(best2, rec.ratio);
    rep.refined_constant = best2;
    rep.drift = best > 0.0 ? std::abs(best2 - best) / best : 0.0;
    rep.pass = rep.drift <= 0.20;
    if (!rep.pass) rep.detail = "best constant unstable under resolution doubling";
  } else {
    rep.refined_constant = best;
    rep.pass = true;
  }
  return rep;
}

}  // namespace

double mazya_ratio(const GridFunction& u, int j, int k) {
  require_orders(j, k);
  if (u.comps() != 1) throw error("mazya_ratio: u must be scalar-valued");
  const double top = u.max_abs();
  if (top == 0.0) return 0.0;  // empty sup convention

  const GridFunction gj = magnitude(derivative_tensor(u, j));
  const GridFunction gk = magnitude(derivative_tensor(u, k));
  const GridFunction mu = maximal_operator(u);
  const GridFunction mgk = maximal_operator(gk);

  const double floor = 1e-12 * top;
  const double a = static_cast<double>(j) / k;
  double sup = 0.0;
  for (std::size_t p = 0; p < u.points(); ++p) {
    const double m0 = mu.value(p);
    if (!(m0 > floor)) continue;
    const double mk = mgk.value(p);
    if (!(mk > 0.0)) continue;
    const double denom = std::pow(mk, a) * std::pow(m0, 1.0 - a);
    sup = std::max(sup, gj.value(p) / denom);
  }
  return sup;
}

StepRearrangement star_star_majorant(const StepRearrangement& r) {
  if (r.empty()) return r;
  std::vector<double> values, widths;
  const auto push = [&](double a, double b) {
    values.push_back(r.prefix_integral(a) / a);
    widths.push_back(b - a);
  };
  // first segment: the running average is constant there
  values.push_back(r.value(0));
  widths.push_back(r.width(0));
  for (std::size_t i = 1; i < r.size(); ++i) {
    const double a = r.left_edge(i), b = r.right_edge(i);
    const auto pts = log_grid_n(a, b, 17);
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) push(pts[s], pts[s + 1]);
  }
  const double total = r.total_measure();
  const auto tail = log_grid(total, total * 1e8, 64);
  for (std::size_t s = 0; s + 1 < tail.size(); ++s) push(tail[s], tail[s + 1]);
  return StepRearrangement(std::move(values), std::move(widths));
}

RatioParts gn_ratio(const GridFunction& u, int j, int k, const SpaceSpec& X, const SpaceSpec& Y,
                    const SpaceSpec& Z, bool starred) {
  require_orders(j, k);
  const double a = static_cast<double>(j) / k;
  const StepRearrangement rj = rearrange(magnitude(derivative_tensor(u, j)));
  StepRearrangement rk = rearrange(magnitude(derivative_tensor(u, k)));
  StepRearrangement r0 = rearrange(u);
  if (starred) {
    rk = star_star_majorant(rk);
    r0 = star_star_majorant(r0);
  }
  RatioParts parts;
  parts.lhs = space_norm(rj, X);
  parts.rhs = std::pow(space_norm(rk, Y), a) * std::pow(space_norm(r0, Z), 1.0 - a);
  parts.ratio = parts.rhs > 0.0 ? parts.lhs / parts.rhs : (parts.lhs > 0.0 ? kInf : 0.0);
  return parts;
}

VerificationReport verify_ribfs(const GNProblem& pb) {
  require_orders(pb.j, pb.k);
  const SpaceSpec y_conv = convexify(pb.Y, static_cast<double>(pb.k) / pb.j);
  if (!local_embedding_proxy(pb.X, y_conv))
    throw hypothesis_error(
        "verify_ribfs: hypothesis Y^{k/j} -> X local embedding fails "
        "(fundamental-function proxy diverges as t -> 0)");
  VerificationReport rep = make_report(pb, "ribfs", /*starred=*/true);
  rep.metadata["embedding_proxy"] = "sup_{t<=1} phi_X/phi_{Y^{k/j}} finite (proxy)";
  return rep;
}

VerificationReport verify_lorentz(const GNProblem& pb) {
  require_orders(pb.j, pb.k);
  const auto lorentz_exponents = [](const SpaceSpec& s, const char* name) {
    if (s.kind == SpaceSpec::Kind::orlicz)
      throw exponent_error(std::string("verify_lorentz: ") + name + " must be Lebesgue/Lorentz");
    return std::pair<double, double>(s.P, s.p);
  };
  const auto [P, p] = lorentz_exponents(pb.X, "X");
  const auto [R, r] = lorentz_exponents(pb.Y, "Y");
  const auto [Q, q] = lorentz_exponents(pb.Z, "Z");
  if (!(P > 1.0 && Q > 1.0 && R > 1.0))
    throw exponent_error("verify_lorentz: need P, Q, R > 1");
  const double a = static_cast<double>(pb.j) / pb.k;
  const auto iv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
  if (std::abs(iv(P) - (a * iv(R) + (1.0 - a) * iv(Q))) > 1e-12)
    throw exponent_error("verify_lorentz: primary exponent balance violated (assCor13)");
  if (std::abs(iv(p) - (a * iv(r) + (1.0 - a) * iv(q))) > 1e-12)
    throw exponent_error("verify_lorentz: secondary exponent balance violated (assCor13)");
  return make_report(pb, "lorentz", /*starred=*/false);
}

bool OrliczReport::pass() const {
  if (cfo_failed) return false;
  if (!starred.pass) return false;
  if (plain.has_value() && !plain->pass) return false;
  return true;
}

nlohmann::json OrliczReport::to_json() const {
  nlohmann::json out{{"mode", "orlicz"},
                     {"cfo_failed", cfo_failed},
                     {"K_cfo", std::isfinite(K_cfo) ? nlohmann::json(K_cfo) : nlohmann::json("inf")},
                     {"upper_index_B", index_B},
                     {"upper_index_C", index_C},
                     {"pass", pass()}};
  if (!cfo_failed) {
    out["starred"] = starred.to_json();
    if (plain.has_value()) out["plain"] = plain->to_json();
  }
  return out;
}

std::string OrliczReport::to_text() const {
  std::ostringstream os;
  if (cfo_failed) {
    os << "orlicz: CFO divergent (condition ratio grows without bound); "
          "inequality falsifiable via the scaling module\n";
    return os.str();
  }
  os << "orlicz: K_cfo = " << K_cfo << ", upper indices B/C = " << index_B << "/" << index_C
     << "\n";
  os << "-- maximal-function form --\n" << starred.to_text();
  if (plain.has_value()) os << "-- plain form (indices < 1) --\n" << plain->to_text();
  return os.str();
}

OrliczReport verify_orlicz(const GNProblem& pb) {
  require_orders(pb.j, pb.k);
  if (pb.X.kind != SpaceSpec::Kind::orlicz || pb.Y.kind != SpaceSpec::Kind::orlicz ||
      pb.Z.kind != SpaceSpec::Kind::orlicz)
    throw exponent_error("verify_orlicz: X, Y, Z must all be Orlicz spaces");
  const YoungFunction &A = *pb.X.A, &B = *pb.Y.A, &C = *pb.Z.A;
  const double a = static_cast<double>(pb.j) / pb.k;

  OrliczReport rep;
  const auto grid = log_grid_n(1e-12, 1e12, 512);
  std::vector<double> ratio;
  ratio.reserve(grid.size());
  for (double t : grid)
    ratio.push_back(std::pow(B.inverse(t), a) * std::pow(C.inverse(t), 1.0 - a) / A.inverse(t));
  rep.K_cfo = *std::max_element(ratio.begin(), ratio.end());
  rep.index_B = upper_index_estimate(B);
  rep.index_C = upper_index_estimate(C);
  if (grows_unbounded(grid, ratio)) {
    rep.cfo_failed = true;
    rep.K_cfo = kInf;
    return rep;
  }
  rep.starred = make_report(pb, "orlicz(**)", /*starred=*/true);
  if (rep.index_B < 1.0 && rep.index_C < 1.0)
    rep.plain = make_report(pb, "orlicz(plain)", /*starred=*/false);
  return rep;
}

ScanCurve best_constant_scan(const GNProblem& pb, GNMode mode,
                             const std::vector<double>& s_values) {
  require_orders(pb.j, pb.k);
  const bool starred = mode == GNMode::ribfs || mode == GNMode::orlicz_starred;
  ScanCurve curve;
  std::vector<double> ratios(s_values.size(), -1.0);
  parallel_for(s_values.size(), [&](std::size_t i) {
    double best = -1.0;
    for (const auto& member : pb.family) {
      const TestFamilySpec spec = dilate(member, s_values[i]);
      const double h = 2.0 * pb.half_width / pb.res;
      if (spec.support_half_extent(pb.dim) > pb.half_width - 2.0 * h) continue;
      if (spec.support_half_extent(pb.dim) < 10.0 * h) continue;  // under-resolved
      const GridFunction u = GridFunction::sample(spec, pb.dim, pb.half_width, pb.res);
      best = std::max(best, gn_ratio(u, pb.j, pb.k, pb.X, pb.Y, pb.Z, starred).ratio);
    }
    ratios[i] = best;
  });
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    if (ratios[i] < 0.0) continue;
    curve.s.push_back(s_values[i]);
    curve.ratio.push_back(ratios[i]);
    curve.max_ratio = std::max(curve.max_ratio, ratios[i]);
    curve.min_ratio = std::min(curve.min_ratio, ratios[i]);
  }
  return curve;
}

nlohmann::json VerificationReport::to_json() const {
  return {{"mode", mode},
          {"records", records_json(records)},
          {"best_constant", best_constant},
          {"refined_constant", refined_constant},
          {"drift", drift},
          {"pass", pass},
          {"detail", detail},
          {"metadata", metadata}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "mode " << mode << "  best " << std::setprecision(6) << best_constant << "  refined "
     << refined_constant << "  drift " << std::setprecision(3) << drift * 100 << "%  "
     << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) os << "  (" << detail << ")";
  os << "\n";
  os << std::left << std::setw(28) << "function" << std::right << std::setw(14) << "lhs"
     << std::setw(14) << "rhs" << std::setw(12) << "ratio" << "\n";
  for (const auto& rec : records) {
    os << std::left << std::setw(28) << rec.family << std::right << std::setw(14)
       << std::setprecision(6) << rec.lhs << std::setw(14) << rec.rhs << std::setw(12) << rec.ratio
       << "\n";
  }
  return os.str();
}

}  // namespace gnri
