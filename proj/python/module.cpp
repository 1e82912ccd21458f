#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnri/scaling.hpp"

namespace py = pybind11;
using namespace gnri;

namespace {

SpaceSpec space(const std::string& text) { return SpaceSpec::parse(text); }
YoungFunction young(const std::string& text) { return YoungFunction::parse(text); }

GNProblem make_problem(int j, int k, const std::string& X, const std::string& Y,
                       const std::string& Z, const std::vector<std::string>& family, int dim,
                       int res, double half_width, bool check_stability) {
  GNProblem pb;
  pb.j = j;
  pb.k = k;
  pb.X = space(X);
  pb.Y = space(Y);
  pb.Z = space(Z);
  for (const auto& f : family) pb.family.push_back(TestFamilySpec::parse(f));
  pb.dim = dim;
  pb.res = res;
  pb.half_width = half_width;
  pb.check_stability = check_stability;
  return pb;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rearrangement-invariant norms, maximal operators and "
            "interpolation-inequality verification";
  m.attr("__version__") = GNRI_VERSION;

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<exponent_error>(m, "ExponentError", PyExc_ValueError);
  py::register_exception<support_error>(m, "SupportError", PyExc_ValueError);
  py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_ValueError);

  py::class_<TestFamilySpec>(m, "TestFamilySpec")
      .def_static("parse", &TestFamilySpec::parse)
      .def("__str__", &TestFamilySpec::str)
      .def("dilate", [](const TestFamilySpec& spec, double s) { return dilate(spec, s); });

  py::class_<GridFunction>(m, "GridFunction")
      .def_static(
          "sample",
          [](const std::string& family, int dim, double half_width, int res) {
            return GridFunction::sample(TestFamilySpec::parse(family), dim, half_width, res);
          },
          py::arg("family"), py::arg("dim") = 1, py::arg("half_width") = 4.0,
          py::arg("res") = 512)
      .def(py::init([](int dim, double half_width, int res, const std::vector<double>& values) {
             GridFunction f(dim, half_width, res);
             if (values.size() != f.points())
               throw parse_error("GridFunction: wrong number of values");
             for (std::size_t i = 0; i < values.size(); ++i) f.value(i) = values[i];
             return f;
           }),
           py::arg("dim"), py::arg("half_width"), py::arg("res"), py::arg("values"))
      .def_property_readonly("dim", &GridFunction::dim)
      .def_property_readonly("res", &GridFunction::res)
      .def_property_readonly("comps", &GridFunction::comps)
      .def_property_readonly("half_width", &GridFunction::half_width)
      .def_property_readonly("cell_volume", &GridFunction::cell_volume)
      .def_property_readonly("values", [](const GridFunction& f) { return f.data(); })
      .def("max_abs", &GridFunction::max_abs);

  m.def("derivative_tensor", &derivative_tensor, py::arg("f"), py::arg("order"));
  m.def("magnitude", &magnitude);

  py::class_<StepRearrangement>(m, "StepRearrangement")
      .def(py::init([](const std::vector<double>& values, const std::vector<double>& widths) {
             return StepRearrangement(values, widths);
           }),
           py::arg("values"), py::arg("widths"))
      .def_property_readonly("values",
                             [](const StepRearrangement& r) {
                               std::vector<double> v(r.size());
                               for (std::size_t i = 0; i < r.size(); ++i) v[i] = r.value(i);
                               return v;
                             })
      .def_property_readonly("widths",
                             [](const StepRearrangement& r) {
                               std::vector<double> w(r.size());
                               for (std::size_t i = 0; i < r.size(); ++i) w[i] = r.width(i);
                               return w;
                             })
      .def_property_readonly("total_measure", &StepRearrangement::total_measure)
      .def_property_readonly("mass", &StepRearrangement::mass)
      .def("value_at", &StepRearrangement::value_at)
      .def("average", [](const StepRearrangement& r, double t) {
        return maximal_rearrangement(r, t);
      });

  m.def("rearrange", &rearrange);
  m.def("maximal_rearrangement", &maximal_rearrangement);
  m.def("hlp_constant", &hlp_constant);

  m.def("lorentz_norm", &lorentz_norm, py::arg("r"), py::arg("P"), py::arg("p"));
  m.def("orlicz_modular",
        [](const StepRearrangement& r, const std::string& A) { return orlicz_modular(r, young(A)); });
  m.def("luxemburg_norm",
        [](const StepRearrangement& r, const std::string& A) { return luxemburg_norm(r, young(A)); });
  m.def("space_norm",
        [](const StepRearrangement& r, const std::string& X) { return space_norm(r, space(X)); });
  m.def("fundamental_function",
        [](const std::string& X, double t) { return fundamental_function(space(X), t); });
  m.def("convexify",
        [](const std::string& X, double alpha) { return convexify(space(X), alpha).str(); });
  m.def("young_inverse",
        [](const std::string& A, double y) { return young_inverse(young(A), y); });
  m.def("upper_index_estimate",
        [](const std::string& A) { return upper_index_estimate(young(A)); });
  m.def("young_check", [](const std::string& text) {
    const YoungCheckReport rep = young_check(young(text));
    py::dict out;
    out["increasing"] = rep.increasing;
    out["convex"] = rep.convex;
    out["superlinear"] = rep.superlinear;
    out["sublinear"] = rep.sublinear;
    out["ratio_large"] = rep.ratio_large;
    out["ratio_small"] = rep.ratio_small;
    out["heuristic_index"] = rep.heuristic_index;
    out["ok"] = rep.ok();
    return out;
  });

  m.def("maximal_operator", &maximal_operator);
  m.def("riesz_herz_ratio", [](const GridFunction& f) {
    const auto band = riesz_herz_ratio(f, default_riesz_herz_grid(f));
    py::dict out;
    out["c_min"] = band.c_min;
    out["c_max"] = band.c_max;
    out["samples"] = band.samples;
    return out;
  });
  m.def("mazya_ratio", &mazya_ratio, py::arg("u"), py::arg("j"), py::arg("k"));

  m.def("lorentz_factor", [](double P, double p, double R, double r) {
    const auto fac = lorentz_factor(P, p, R, r);
    return py::make_tuple(fac.Q, fac.q);
  });
  m.def("holder_check", [](const GridFunction& f, const GridFunction& g, const std::string& X,
                           const std::string& Y, const std::string& Z) {
    return holder_check(f, g, space(X), space(Y), space(Z));
  });
  m.def("lorentz_saturator", &lorentz_saturator, py::arg("f"), py::arg("P"), py::arg("p"),
        py::arg("R"), py::arg("r"));
  m.def("multiplier_norm_estimate",
        [](const GridFunction& f, const std::string& X, const std::string& Y) {
          return multiplier_norm_estimate(f, space(X), space(Y));
        });
  m.def(
      "orlicz_factor_check",
      [](const std::string& A, const std::string& B, const std::string& C, int pairs,
         std::uint64_t seed) {
        const auto rep = orlicz_factor_check(young(A), young(B), young(C), pairs, seed);
        py::dict out;
        out["compatible"] = rep.compatible;
        out["K_pre"] = rep.K_pre;
        out["unbounded"] = rep.unbounded;
        out["K_iii"] = rep.K_iii;
        out["cond_ii_ok"] = rep.cond_ii_ok;
        out["ratio"] = rep.ratio_i;
        return out;
      },
      py::arg("A"), py::arg("B"), py::arg("C"), py::arg("pairs") = 50, py::arg("seed") = 1);

  m.def(
      "verify_lorentz",
      [](int j, int k, const std::string& X, const std::string& Y, const std::string& Z,
         const std::vector<std::string>& family, int dim, int res, double half_width,
         bool check_stability) {
        return verify_lorentz(
                   make_problem(j, k, X, Y, Z, family, dim, res, half_width, check_stability))
            .to_json()
            .dump();
      },
      py::arg("j"), py::arg("k"), py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("family"),
      py::arg("dim") = 1, py::arg("res") = 512, py::arg("half_width") = 4.0,
      py::arg("check_stability") = true);
  m.def(
      "verify_ribfs",
      [](int j, int k, const std::string& X, const std::string& Y, const std::string& Z,
         const std::vector<std::string>& family, int dim, int res, double half_width,
         bool check_stability) {
        return verify_ribfs(
                   make_problem(j, k, X, Y, Z, family, dim, res, half_width, check_stability))
            .to_json()
            .dump();
      },
      py::arg("j"), py::arg("k"), py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("family"),
      py::arg("dim") = 1, py::arg("res") = 512, py::arg("half_width") = 4.0,
      py::arg("check_stability") = true);
  m.def(
      "verify_orlicz",
      [](int j, int k, const std::string& A, const std::string& B, const std::string& C,
         const std::vector<std::string>& family, int dim, int res, double half_width,
         bool check_stability) {
        return verify_orlicz(make_problem(j, k, "Orl:" + A, "Orl:" + B, "Orl:" + C, family, dim,
                                          res, half_width, check_stability))
            .to_json()
            .dump();
      },
      py::arg("j"), py::arg("k"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("family"),
      py::arg("dim") = 1, py::arg("res") = 512, py::arg("half_width") = 4.0,
      py::arg("check_stability") = true);

  m.def(
      "necessary_condition",
      [](const std::string& X, const std::string& Y, const std::string& Z, int j, int k) {
        const auto res = necessary_condition(space(X), space(Y), space(Z), j, k, default_nc_grid());
        py::dict out;
        out["sup"] = res.sup;
        out["divergent"] = res.divergent;
        out["direction"] = res.direction;
        out["slope"] = res.slope;
        out["t"] = res.t;
        out["ratio"] = res.ratio;
        return out;
      },
      py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("j"), py::arg("k"));
  m.def(
      "falsify",
      [](const std::string& X, const std::string& Y, const std::string& Z, int j, int k,
         double smin, double smax, int count, int dim, int res, double half_width) {
        const auto out =
            falsify(space(X), space(Y), space(Z), j, k, log_grid_n(smin, smax, count), dim, res,
                    half_width);
        py::dict d;
        d["falsified"] = out.falsified;
        d["direction"] = out.direction;
        d["slope"] = out.slope;
        d["tracking_band"] = out.tracking_band;
        d["s_analytic"] = out.s_analytic;
        d["analytic"] = out.analytic;
        d["s_empirical"] = out.s_empirical;
        d["empirical"] = out.empirical;
        return d;
      },
      py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("j"), py::arg("k"),
      py::arg("smin") = 1e-2, py::arg("smax") = 1e2, py::arg("count") = 9, py::arg("dim") = 1,
      py::arg("res") = 512, py::arg("half_width") = 4.0);
  m.def(
      "best_constant_scan",
      [](int j, int k, const std::string& X, const std::string& Y, const std::string& Z,
         const std::vector<std::string>& family, double smin, double smax, int count, int dim,
         int res, double half_width, bool starred) {
        const GNProblem pb = make_problem(j, k, X, Y, Z, family, dim, res, half_width, false);
        const auto curve = best_constant_scan(pb, starred ? GNMode::ribfs : GNMode::lorentz,
                                              log_grid_n(smin, smax, count));
        py::dict d;
        d["s"] = curve.s;
        d["ratio"] = curve.ratio;
        d["max"] = curve.max_ratio;
        d["min"] = curve.min_ratio;
        return d;
      },
      py::arg("j"), py::arg("k"), py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("family"),
      py::arg("smin") = 0.25, py::arg("smax") = 4.0, py::arg("count") = 9, py::arg("dim") = 1,
      py::arg("res") = 512, py::arg("half_width") = 4.0, py::arg("starred") = false);
  m.def("bump_norm_closed_form", [](double s, const std::string& X, int level, int dim) {
    return bump_norm_closed_form(s, space(X), level, dim);
  });
}
