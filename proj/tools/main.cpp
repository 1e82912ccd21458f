// Command-line front end: rearrangements, interpolation-inequality
// verification, scaling scans, Hölder factorization checks and
// Young-function diagnostics. Exit codes: 0 pass, 1 mathematical
// failure/falsification, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gnri/gn.hpp"
#include "gnri/scaling.hpp"

#ifndef GNRI_VERSION
#define GNRI_VERSION "0.0.0"
#endif

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw gnri::parse_error("cannot open output file: " + path);
  return file;
}

gnri::GridFunction load_grid(const std::string& family, const std::string& input, int dim,
                             int res, double half_width) {
  if (!family.empty())
    return gnri::GridFunction::sample(gnri::TestFamilySpec::parse(family), dim, half_width, res);
  std::ifstream in(input);
  if (!in) throw gnri::parse_error("cannot open input file: " + input);
  json spec = json::parse(in);
  gnri::GridFunction f(spec.at("dim").get<int>(), spec.at("half_width").get<double>(),
                       spec.at("res").get<int>());
  const auto& values = spec.at("values");
  if (values.size() != f.points())
    throw gnri::parse_error("input file: expected " + std::to_string(f.points()) + " values");
  for (std::size_t i = 0; i < f.points(); ++i) f.value(i) = values[i].get<double>();
  return f;
}

std::vector<gnri::TestFamilySpec> parse_family_list(const std::vector<std::string>& texts) {
  std::vector<gnri::TestFamilySpec> out;
  for (const auto& t : texts) out.push_back(gnri::TestFamilySpec::parse(t));
  if (out.empty()) throw gnri::parse_error("no family members given");
  return out;
}

struct VerifyConfig {
  std::string mode = "lorentz";
  gnri::GNProblem problem;
  std::vector<double> dilations = gnri::log_grid_n(0.25, 4.0, 9);
  std::string out_prefix = "report";
  json raw;  // embedded verbatim into the report
};

VerifyConfig read_verify_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gnri::parse_error("cannot open config file: " + path);
  json cfg = json::parse(in);
  VerifyConfig vc;
  vc.raw = cfg;
  vc.mode = cfg.value("mode", "lorentz");
  auto& pb = vc.problem;
  pb.j = cfg.value("j", 1);
  pb.k = cfg.value("k", 2);
  pb.X = gnri::SpaceSpec::parse(cfg.at("X").get<std::string>());
  pb.Y = gnri::SpaceSpec::parse(cfg.at("Y").get<std::string>());
  pb.Z = gnri::SpaceSpec::parse(cfg.at("Z").get<std::string>());
  pb.dim = cfg.value("dim", 1);
  pb.res = cfg.value("res", 512);
  pb.half_width = cfg.value("half_width", 4.0);
  pb.check_stability = cfg.value("check_stability", true);
  std::vector<std::string> fam;
  if (cfg.contains("family"))
    fam = cfg.at("family").get<std::vector<std::string>>();
  else
    for (const auto& member : gnri::built_in_family(pb.dim, pb.half_width))
      fam.push_back(member.str());
  pb.family = parse_family_list(fam);
  if (cfg.contains("dilations")) {
    const auto& d = cfg.at("dilations");
    vc.dilations = gnri::log_grid_n(d.at("min").get<double>(), d.at("max").get<double>(),
                                    d.value("count", 9));
  }
  vc.out_prefix = cfg.value("out_prefix", "report");
  return vc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gnri::parse_error("cannot open output file: " + path);
  out << text;
}

json base_metadata(const VerifyConfig& vc) {
  return {{"version", GNRI_VERSION}, {"config", vc.raw}};
}

int run_verify(const VerifyConfig& vc) {
  using namespace gnri;
  const auto& pb = vc.problem;

  if (vc.mode == "falsify") {
    const auto s_range = vc.dilations.size() >= 2 ? vc.dilations : log_grid(1e-2, 1e2, 4);
    const FalsifyResult res =
        falsify(pb.X, pb.Y, pb.Z, pb.j, pb.k, s_range, pb.dim, pb.res, pb.half_width);
    json out = base_metadata(vc);
    out["mode"] = "falsify";
    out["falsified"] = res.falsified;
    out["direction"] = res.direction > 0 ? "s->inf" : (res.direction < 0 ? "s->0" : "none");
    out["slope"] = res.slope;
    out["tracking_band"] = res.tracking_band;
    write_text(vc.out_prefix + ".json", out.dump(2) + "\n");
    std::ostringstream txt;
    txt << "falsify " << pb.X.str() << " <= " << pb.Y.str() << "^(j/k) * " << pb.Z.str()
        << "^(1-j/k), j=" << pb.j << " k=" << pb.k << "\n"
        << (res.falsified ? "FALSIFIED" : "no divergence detected") << "  witness "
        << out["direction"].get<std::string>() << "  slope " << res.slope << "  tracking band "
        << res.tracking_band << "x\n";
    write_text(vc.out_prefix + ".txt", txt.str());
    std::ostringstream csv;
    csv << "s,analytic,empirical\n";
    for (std::size_t i = 0; i < res.s_analytic.size(); ++i) {
      csv << res.s_analytic[i] << "," << res.analytic[i] << ",";
      bool have = false;
      for (std::size_t k = 0; k < res.s_empirical.size(); ++k)
        if (res.s_empirical[k] == res.s_analytic[i]) {
          csv << res.empirical[k];
          have = true;
          break;
        }
      if (!have) csv << "";
      csv << "\n";
    }
    write_text(vc.out_prefix + "_curve.csv", csv.str());
    std::cout << txt.str();
    return res.falsified ? kExitFail : kExitPass;
  }

  VerificationReport rep;
  std::optional<OrliczReport> orl;
  GNMode scan_mode = GNMode::lorentz;
  if (vc.mode == "lorentz") {
    rep = verify_lorentz(pb);
  } else if (vc.mode == "ribfs") {
    rep = verify_ribfs(pb);
    scan_mode = GNMode::ribfs;
  } else if (vc.mode == "orlicz") {
    orl = verify_orlicz(pb);
    scan_mode = GNMode::orlicz_starred;
  } else {
    throw parse_error("unknown mode \"" + vc.mode + "\" (ribfs|lorentz|orlicz|falsify)");
  }

  json out = base_metadata(vc);
  std::string text;
  bool pass;
  if (orl.has_value()) {
    out.update(orl->to_json());
    text = orl->to_text();
    pass = orl->pass();
    if (orl->cfo_failed) {
      write_text(vc.out_prefix + ".json", out.dump(2) + "\n");
      write_text(vc.out_prefix + ".txt", text);
      std::cout << text << "CFO divergent\n";
      return kExitFail;
    }
  } else {
    out.update(rep.to_json());
    text = rep.to_text();
    pass = rep.pass;
  }

  const ScanCurve curve = best_constant_scan(pb, scan_mode, vc.dilations);
  std::ostringstream csv;
  csv << "s,ratio\n";
  for (std::size_t i = 0; i < curve.s.size(); ++i)
    csv << curve.s[i] << "," << curve.ratio[i] << "\n";
  write_text(vc.out_prefix + "_curve.csv", csv.str());
  out["dilation_curve"] = {{"s", curve.s},
                           {"ratio", curve.ratio},
                           {"max", curve.max_ratio},
                           {"min", curve.min_ratio}};
  write_text(vc.out_prefix + ".json", out.dump(2) + "\n");
  write_text(vc.out_prefix + ".txt", text);
  std::cout << text;
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("gnri ") + GNRI_VERSION +
               " - rearrangement-invariant norms and interpolation inequalities"};
  app.require_subcommand(1);

  // rearrange
  auto* cmd_re = app.add_subcommand("rearrange", "print t, u*(t), u**(t) as CSV");
  std::string re_family, re_input, re_out;
  int re_dim = 1, re_res = 512, re_tsamples = 120;
  double re_hw = 4.0;
  cmd_re->add_option("--family", re_family, "built-in family, e.g. sa_bump:k=2 or chi:1.0");
  cmd_re->add_option("--input", re_input, "grid function JSON file {dim,res,half_width,values}");
  cmd_re->add_option("--dim", re_dim);
  cmd_re->add_option("--res", re_res);
  cmd_re->add_option("--half-width", re_hw);
  cmd_re->add_option("--t-samples", re_tsamples);
  cmd_re->add_option("--out", re_out, "output CSV (default stdout)");

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "run an inequality verification from a config");
  std::string ver_config, ver_mode, ver_prefix;
  std::vector<std::string> ver_family;
  std::string ver_X, ver_Y, ver_Z;
  int ver_j = 1, ver_k = 2, ver_dim = 1, ver_res = 512, ver_scount = 9;
  double ver_hw = 4.0, ver_smin = 0.25, ver_smax = 4.0;
  bool ver_nostab = false;
  cmd_ver->add_option("--config", ver_config, "JSON config file");
  cmd_ver->add_option("--mode", ver_mode, "ribfs|lorentz|orlicz|falsify");
  cmd_ver->add_option("--X", ver_X);
  cmd_ver->add_option("--Y", ver_Y);
  cmd_ver->add_option("--Z", ver_Z);
  cmd_ver->add_option("--j", ver_j);
  cmd_ver->add_option("--k", ver_k);
  cmd_ver->add_option("--family", ver_family, "family member (repeatable)");
  cmd_ver->add_option("--dim", ver_dim);
  cmd_ver->add_option("--res", ver_res);
  cmd_ver->add_option("--half-width", ver_hw);
  cmd_ver->add_option("--smin", ver_smin);
  cmd_ver->add_option("--smax", ver_smax);
  cmd_ver->add_option("--scount", ver_scount);
  cmd_ver->add_flag("--no-stability", ver_nostab, "skip the resolution-doubling check");
  cmd_ver->add_option("--out-prefix", ver_prefix, "report file prefix (default report)");

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "emit diagnostic curves as CSV");
  std::string scan_what, scan_out;
  std::vector<std::string> scan_family;
  std::string scan_X = "Lp:2", scan_Y = "Lp:2", scan_Z = "Lp:2";
  int scan_j = 1, scan_k = 2, scan_dim = 1, scan_res = 512, scan_scount = 9;
  double scan_hw = 4.0, scan_smin = 0.25, scan_smax = 4.0;
  cmd_scan->add_option("--what", scan_what, "riesz-herz|gnnc|mazya|best-constant|falsify")
      ->required();
  cmd_scan->add_option("--family", scan_family, "family member (repeatable)");
  cmd_scan->add_option("--X", scan_X);
  cmd_scan->add_option("--Y", scan_Y);
  cmd_scan->add_option("--Z", scan_Z);
  cmd_scan->add_option("--j", scan_j);
  cmd_scan->add_option("--k", scan_k);
  cmd_scan->add_option("--dim", scan_dim);
  cmd_scan->add_option("--res", scan_res);
  cmd_scan->add_option("--half-width", scan_hw);
  cmd_scan->add_option("--smin", scan_smin);
  cmd_scan->add_option("--smax", scan_smax);
  cmd_scan->add_option("--scount", scan_scount);
  cmd_scan->add_option("--out", scan_out, "output CSV (default stdout)");

  // holder
  auto* cmd_hold = app.add_subcommand("holder", "Hölder factorization operations");
  std::string hold_op, hold_A, hold_B, hold_C;
  std::string hold_X = "Lp:2", hold_Y = "Lp:4", hold_Z = "Lp:4";
  std::string hold_f = "gauss:r=0.9", hold_g = "poly:r=0.9,d=6";
  double hold_P = 2, hold_p = 2, hold_R = 6, hold_r = 6;
  int hold_res = 256, hold_pairs = 50;
  double hold_hw = 4.0;
  std::uint64_t hold_seed = 1;
  cmd_hold->add_option("--op", hold_op, "factor|check|saturate|multiplier|orlicz")->required();
  cmd_hold->add_option("--P", hold_P);
  cmd_hold->add_option("--p", hold_p);
  cmd_hold->add_option("--R", hold_R);
  cmd_hold->add_option("--r", hold_r);
  cmd_hold->add_option("--X", hold_X);
  cmd_hold->add_option("--Y", hold_Y);
  cmd_hold->add_option("--Z", hold_Z);
  cmd_hold->add_option("--f", hold_f, "family string for f");
  cmd_hold->add_option("--g", hold_g, "family string for g");
  cmd_hold->add_option("--A", hold_A, "Young function, e.g. pow:2");
  cmd_hold->add_option("--B", hold_B);
  cmd_hold->add_option("--C", hold_C);
  cmd_hold->add_option("--res", hold_res);
  cmd_hold->add_option("--half-width", hold_hw);
  cmd_hold->add_option("--pairs", hold_pairs);
  cmd_hold->add_option("--seed", hold_seed);

  // young-check
  auto* cmd_yc = app.add_subcommand("young-check", "validate Young-function invariants");
  std::string yc_A;
  cmd_yc->add_option("--A", yc_A, "Young function, e.g. pow:2 or plog:2,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_re->parsed()) {
      if (re_family.empty() == re_input.empty())
        throw gnri::parse_error("rearrange: give exactly one of --family / --input");
      const gnri::GridFunction f = load_grid(re_family, re_input, re_dim, re_res, re_hw);
      const gnri::StepRearrangement r = gnri::rearrange(f);
      if (r.empty()) throw gnri::error("rearrange: the function is identically zero");
      const double supp = r.total_measure();
      std::ofstream file;
      std::ostream& os = open_or_stdout(file, re_out);
      os << "t,ustar,ustarstar\n";
      for (double t : gnri::log_grid_n(1e-3 * supp, 1e2 * supp, re_tsamples))
        os << t << "," << r.value_at(t) << "," << gnri::maximal_rearrangement(r, t) << "\n";
      return kExitPass;
    }

    if (cmd_ver->parsed()) {
      VerifyConfig vc;
      if (!ver_config.empty()) {
        vc = read_verify_config(ver_config);
        if (!ver_prefix.empty()) vc.out_prefix = ver_prefix;
        if (!ver_mode.empty()) vc.mode = ver_mode;
      } else {
        if (ver_X.empty() || ver_Y.empty() || ver_Z.empty())
          throw gnri::parse_error("verify: need --config or all of --X --Y --Z");
        vc.mode = ver_mode.empty() ? "lorentz" : ver_mode;
        vc.problem.j = ver_j;
        vc.problem.k = ver_k;
        vc.problem.X = gnri::SpaceSpec::parse(ver_X);
        vc.problem.Y = gnri::SpaceSpec::parse(ver_Y);
        vc.problem.Z = gnri::SpaceSpec::parse(ver_Z);
        vc.problem.dim = ver_dim;
        vc.problem.res = ver_res;
        vc.problem.half_width = ver_hw;
        vc.problem.check_stability = !ver_nostab;
        if (ver_family.empty())
          vc.problem.family = gnri::built_in_family(ver_dim, ver_hw);
        else
          vc.problem.family = parse_family_list(ver_family);
        vc.dilations = gnri::log_grid_n(ver_smin, ver_smax, ver_scount);
        vc.out_prefix = ver_prefix.empty() ? "report" : ver_prefix;
        vc.raw = {{"mode", vc.mode}, {"j", ver_j},   {"k", ver_k},
                  {"X", ver_X},      {"Y", ver_Y},   {"Z", ver_Z},
                  {"dim", ver_dim},  {"res", ver_res}, {"half_width", ver_hw}};
      }
      return run_verify(vc);
    }

    if (cmd_scan->parsed()) {
      std::ofstream file;
      std::ostream& os = open_or_stdout(file, scan_out);
      if (scan_family.empty())
        for (const auto& member : gnri::built_in_family(scan_dim, scan_hw))
          scan_family.push_back(member.str());
      if (scan_what == "riesz-herz") {
        os << "family,t,ratio\n";
        for (const auto& text : scan_family) {
          const auto f = gnri::GridFunction::sample(gnri::TestFamilySpec::parse(text), scan_dim,
                                                    scan_hw, scan_res);
          const auto band = gnri::riesz_herz_ratio(f, gnri::default_riesz_herz_grid(f));
          for (const auto& [t, ratio] : band.samples)
            os << text << "," << t << "," << ratio << "\n";
        }
      } else if (scan_what == "gnnc") {
        const auto res = gnri::necessary_condition(
            gnri::SpaceSpec::parse(scan_X), gnri::SpaceSpec::parse(scan_Y),
            gnri::SpaceSpec::parse(scan_Z), scan_j, scan_k, gnri::default_nc_grid());
        os << "t,ratio\n";
        for (std::size_t i = 0; i < res.t.size(); ++i)
          os << res.t[i] << "," << res.ratio[i] << "\n";
        if (res.divergent) {
          std::cerr << "gnnc: divergent (" << (res.direction > 0 ? "t->inf" : "t->0")
                    << ", slope " << res.slope << ")\n";
          return kExitFail;
        }
      } else if (scan_what == "mazya") {
        os << "family,sup_ratio\n";
        for (const auto& text : scan_family) {
          const auto u = gnri::GridFunction::sample(gnri::TestFamilySpec::parse(text), scan_dim,
                                                    scan_hw, scan_res);
          os << text << "," << gnri::mazya_ratio(u, scan_j, scan_k) << "\n";
        }
      } else if (scan_what == "best-constant" || scan_what == "falsify") {
        gnri::GNProblem pb;
        pb.j = scan_j;
        pb.k = scan_k;
        pb.X = gnri::SpaceSpec::parse(scan_X);
        pb.Y = gnri::SpaceSpec::parse(scan_Y);
        pb.Z = gnri::SpaceSpec::parse(scan_Z);
        pb.dim = scan_dim;
        pb.res = scan_res;
        pb.half_width = scan_hw;
        pb.family = parse_family_list(scan_family);
        const auto s_values = gnri::log_grid_n(scan_smin, scan_smax, scan_scount);
        if (scan_what == "best-constant") {
          const auto curve = gnri::best_constant_scan(pb, gnri::GNMode::lorentz, s_values);
          os << "s,ratio\n";
          for (std::size_t i = 0; i < curve.s.size(); ++i)
            os << curve.s[i] << "," << curve.ratio[i] << "\n";
        } else {
          const auto res = gnri::falsify(pb.X, pb.Y, pb.Z, pb.j, pb.k, s_values, pb.dim, pb.res,
                                         pb.half_width);
          os << "s,analytic\n";
          for (std::size_t i = 0; i < res.s_analytic.size(); ++i)
            os << res.s_analytic[i] << "," << res.analytic[i] << "\n";
          if (res.falsified) return kExitFail;
        }
      } else {
        throw gnri::parse_error("scan: unknown --what \"" + scan_what + "\"");
      }
      return kExitPass;
    }

    if (cmd_hold->parsed()) {
      if (hold_op == "factor") {
        const auto fac = gnri::lorentz_factor(hold_P, hold_p, hold_R, hold_r);
        std::cout << "Q=" << fac.Q << " q=" << fac.q << "\n";
        return kExitPass;
      }
      if (hold_op == "check") {
        const auto f = gnri::GridFunction::sample(gnri::TestFamilySpec::parse(hold_f), 1, hold_hw,
                                                  hold_res);
        const auto g = gnri::GridFunction::sample(gnri::TestFamilySpec::parse(hold_g), 1, hold_hw,
                                                  hold_res);
        const double ratio = gnri::holder_check(f, g, gnri::SpaceSpec::parse(hold_X),
                                                gnri::SpaceSpec::parse(hold_Y),
                                                gnri::SpaceSpec::parse(hold_Z));
        std::cout << "ratio=" << ratio << "\n";
        return kExitPass;
      }
      if (hold_op == "saturate") {
        const auto f = gnri::random_grid_function(hold_res, hold_hw, hold_seed);
        const auto fac = gnri::lorentz_factor(hold_P, hold_p, hold_R, hold_r);
        const auto g = gnri::lorentz_saturator(f, hold_P, hold_p, hold_R, hold_r);
        const double ratio = gnri::holder_check(
            f, g, gnri::SpaceSpec::lorentz(hold_P, hold_p), gnri::SpaceSpec::lorentz(hold_R, hold_r),
            gnri::SpaceSpec::lorentz(fac.Q, fac.q));
        std::cout << "Q=" << fac.Q << " q=" << fac.q << " ratio=" << ratio << "\n";
        return kExitPass;
      }
      if (hold_op == "multiplier") {
        const auto f = gnri::GridFunction::sample(gnri::TestFamilySpec::parse(hold_f), 1, hold_hw,
                                                  hold_res);
        const double est = gnri::multiplier_norm_estimate(f, gnri::SpaceSpec::parse(hold_X),
                                                          gnri::SpaceSpec::parse(hold_Y));
        if (std::isinf(est)) {
          std::cout << "multiplier norm: inf (no local embedding)\n";
          return kExitFail;
        }
        std::cout << "lower_bound=" << est << "\n";
        return kExitPass;
      }
      if (hold_op == "orlicz") {
        if (hold_A.empty() || hold_B.empty() || hold_C.empty())
          throw gnri::parse_error("holder --op orlicz: need --A --B --C");
        const auto rep = gnri::orlicz_factor_check(
            gnri::YoungFunction::parse(hold_A), gnri::YoungFunction::parse(hold_B),
            gnri::YoungFunction::parse(hold_C), hold_pairs, hold_seed);
        if (rep.unbounded) {
          std::cout << "condition (iii): unbounded\n";
          return kExitFail;
        }
        std::cout << "K_pre=" << rep.K_pre << " K_iii=" << rep.K_iii
                  << " cond_ii=" << (rep.cond_ii_ok ? "ok" : "FAIL") << " ratio=" << rep.ratio_i
                  << " bound=" << 2.0 * rep.K_iii << "\n";
        return rep.cond_ii_ok && rep.ratio_i <= 2.0 * rep.K_iii * (1.0 + 1e-6) ? kExitPass
                                                                               : kExitFail;
      }
      throw gnri::parse_error("holder: unknown --op \"" + hold_op + "\"");
    }

    if (cmd_yc->parsed()) {
      const auto A = gnri::YoungFunction::parse(yc_A);
      const auto rep = gnri::young_check(A);
      std::cout << "increasing:   " << (rep.increasing ? "ok" : "FAIL") << "\n"
                << "convex:       " << (rep.convex ? "ok" : "FAIL") << "\n"
                << "superlinear:  " << (rep.superlinear ? "ok" : "FAIL") << "  (A(t)/t at 1e12 / A(1) = "
                << rep.ratio_large << ")\n"
                << "sublinear:    " << (rep.sublinear ? "ok" : "FAIL") << "  (A(t)/t at 1e-12 / A(1) = "
                << rep.ratio_small << ")\n"
                << "upper index:  " << gnri::upper_index_estimate(A)
                << (rep.heuristic_index ? "  (heuristic: tabulated generator)" : "") << "\n";
      return rep.ok() ? kExitPass : kExitFail;
    }
  } catch (const gnri::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gnri::exponent_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gnri::hypothesis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gnri::support_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
