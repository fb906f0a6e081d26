// _core.cpp: Python bindings for the zetastrips library.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "zetastrips/contour.hpp"
#include "zetastrips/errors.hpp"
#include "zetastrips/pipeline.hpp"
#include "zetastrips/stats.hpp"
#include "zetastrips/zeros.hpp"
#include "zetastrips/zeta.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace zetastrips;

namespace {

py::tuple eval_tuple(const EvalResult& r) { return py::make_tuple(r.value, r.abs_error_bound); }

RunConfig make_config(int m_max, double sigma_right, double sigma_left, double measurement_sigma,
                      bool rounding_emulation, const std::string& output_dir, double scan_step,
                      unsigned worker_count) {
    RunConfig c;
    c.m_max = m_max;
    c.sigma_right = sigma_right;
    c.sigma_left = sigma_left;
    c.measurement_sigma = measurement_sigma;
    c.rounding_emulation = rounding_emulation;
    c.output_dir = output_dir;
    c.scan_step = scan_step;
    c.worker_count = worker_count;
    return c;
}

py::dict trace_dict(const ContourTrace& tr) {
    py::list pts;
    for (const auto& p : tr.points) pts.append(py::make_tuple(p.sigma, p.t));
    py::dict d;
    d["k"] = tr.k;
    d["kind"] = to_string(tr.kind);
    d["terminus"] = to_string(tr.terminus.type);
    d["terminus_value"] = tr.terminus.value;
    d["zero_ordinal"] = tr.zero_ordinal;
    d["points"] = pts;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riemann zeta evaluation, Im zeta = 0 contour tracing and strip statistics";

    py::register_exception<ZetaError>(m, "ZetaError", PyExc_RuntimeError);

    m.def("eval_zeta", [](double sigma, double t) { return eval_tuple(eval_zeta({sigma, t})); },
          py::arg("sigma"), py::arg("t"), "zeta(sigma + it) as (value, abs_error_bound)");
    m.def("eval_zeta_deriv", [](double sigma, double t) { return eval_tuple(eval_zeta_deriv({sigma, t})); },
          py::arg("sigma"), py::arg("t"));
    m.def("eval_dirichlet",
          [](double sigma, double t, std::size_t terms) { return eval_tuple(eval_dirichlet({sigma, t}, terms)); },
          py::arg("sigma"), py::arg("t"), py::arg("terms"));
    m.def("phase", [](double sigma, double t) { return phase({sigma, t}).theta; }, py::arg("sigma"), py::arg("t"));
    m.def("rs_theta", [](double t) { return rs_theta(t); }, py::arg("t"));
    m.def("hardy_z", [](double t) { return hardy_z(t); }, py::arg("t"));
    m.def("functional_eq_residual", [](double sigma, double t) { return functional_eq_residual({sigma, t}); },
          py::arg("sigma"), py::arg("t"));
    m.def("asymptotic_im", [](double sigma, double t) { return asymptotic_im({sigma, t}); }, py::arg("sigma"),
          py::arg("t"));
    m.def(
        "strip_asymptote",
        [](int strip, const std::string& kind) {
            return strip_asymptote(strip, kind == "primary" ? AsymptoteKind::Primary : AsymptoteKind::Boundary);
        },
        py::arg("m"), py::arg("kind") = "boundary");

    m.def(
        "find_critical_zeros",
        [](double t_min, double t_max, double scan_step) {
            ZeroScanOptions o;
            o.scan_step = scan_step;
            std::vector<std::pair<long, double>> out;
            for (const auto& z : find_critical_zeros(t_min, t_max, o)) out.emplace_back(z.ordinal, z.t);
            return out;
        },
        py::arg("t_min"), py::arg("t_max"), py::arg("scan_step") = 0.05, "List of (ordinal, t)");
    m.def("count_zeros_rvm", &count_zeros_rvm, py::arg("T"));

    m.def(
        "trace_contours",
        [](int m_max, double sigma_right, double sigma_left) {
            RunConfig c;
            c.m_max = m_max;
            c.sigma_right = sigma_right;
            c.sigma_left = sigma_left;
            const auto zeros = compute_zeros(c);
            py::list out;
            for (const auto& tr : compute_traces(c, zeros)) out.append(trace_dict(tr));
            return out;
        },
        py::arg("m_max"), py::arg("sigma_right") = 8.0, py::arg("sigma_left") = -3.0);
    m.def(
        "classify_zero_contour",
        [](double t, long ordinal) { return std::string(to_string(classify_zero_contour({t, ordinal}))); },
        py::arg("t"), py::arg("ordinal") = 0);

    m.def(
        "linfit",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            const FitResult f = linfit(xs, ys);
            py::dict d;
            d["slope"] = f.slope;
            d["intercept"] = f.intercept;
            d["slope_stderr"] = f.slope_stderr;
            d["intercept_stderr"] = f.intercept_stderr;
            d["n"] = f.n;
            return d;
        },
        py::arg("xs"), py::arg("ys"));

    m.def(
        "run_json",
        [](int m_max, double sigma_right, double sigma_left, double measurement_sigma, bool rounding_emulation,
           const std::string& output_dir, double scan_step, unsigned worker_count) {
            const RunConfig c = make_config(m_max, sigma_right, sigma_left, measurement_sigma, rounding_emulation,
                                            output_dir, scan_step, worker_count);
            py::gil_scoped_release release;
            return run(c).report.dump();
        },
        py::arg("m_max") = 200, py::arg("sigma_right") = 8.0, py::arg("sigma_left") = -3.0,
        py::arg("measurement_sigma") = 0.5, py::arg("rounding_emulation") = true,
        py::arg("output_dir") = "zeta_output", py::arg("scan_step") = 0.05, py::arg("worker_count") = 0u);
    m.def(
        "validate",
        [](int m_max, double sigma_right, double sigma_left, double measurement_sigma, double scan_step) {
            const RunConfig c =
                make_config(m_max, sigma_right, sigma_left, measurement_sigma, true, ".", scan_step, 0);
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& r : validate(c)) out.emplace_back(r.name, r.pass, r.detail);
            return out;
        },
        py::arg("m_max") = 200, py::arg("sigma_right") = 8.0, py::arg("sigma_left") = -3.0,
        py::arg("measurement_sigma") = 0.5, py::arg("scan_step") = 0.05);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
