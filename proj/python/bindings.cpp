#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srs/asymptotics.hpp"
#include "srs/srs_pde.hpp"
#include "srs/whitham.hpp"

namespace py = pybind11;
using namespace srs;

namespace {

py::dict frame_dict(const EllipticFrame& f)
{
    py::dict d;
    d["xi"] = f.gp.xi;
    d["lambda_minus"] = f.gp.lambda_minus;
    d["lambda_plus"] = f.gp.lambda_plus;
    d["d"] = f.gp.d;
    d["tau"] = f.tau;
    d["period_a"] = f.period_a;
    d["B_g"] = f.B_g;
    d["B_zeta"] = f.B_zeta;
    d["Delta"] = f.Delta;
    d["zeta_inf"] = f.zeta_inf;
    d["e1"] = f.e1;
    d["e0"] = f.e0;
    d["E0"] = f.E0;
    d["g_hat_inf"] = f.g_hat_inf;
    d["g_hat_0"] = f.g_hat_0;
    d["phi_hat"] = f.phi_hat;
    return d;
}

SpectralConstants constants(double l, double omega)
{
    return derive_spectral_constants(PhysicalParams::make(l, omega));
}

}  // namespace

PYBIND11_MODULE(srs_whitham, m)
{
    m.doc() = "Whitham parameters, asymptotic fields and direct integration for the SRS boundary problem";

    static py::exception<Error> base(m, "SrsError");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<BorderError>(m, "BorderError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

    py::class_<SpectralConstants>(m, "SpectralConstants")
        .def_property_readonly("l", [](const SpectralConstants& c) { return c.params.l; })
        .def_property_readonly("p", [](const SpectralConstants& c) { return c.params.p; })
        .def_property_readonly("omega", [](const SpectralConstants& c) { return c.params.omega; })
        .def_readonly("E", &SpectralConstants::E)
        .def_readonly("omega0", &SpectralConstants::omega0)
        .def_readonly("xi0", &SpectralConstants::xi0)
        .def_property_readonly("xi_disp", &SpectralConstants::xi_disp);
    m.def("constants", &constants, py::arg("l") = -0.5, py::arg("omega") = 0.5);

    m.def("region", [](double xi, const SpectralConstants& c) { return region_name(classify_region(xi, c).region); });

    m.def("genus0", [](double xi, const SpectralConstants& c) {
        const Genus0Roots g = solve_genus0(xi, c);
        return py::make_tuple(g.lambda_minus, g.lambda_mid, g.lambda_plus);
    });
    m.def("genus1", [](double xi, const SpectralConstants& c) {
        const Genus1Params g = solve_genus1(xi, c);
        py::dict d;
        d["lambda_minus"] = g.lambda_minus;
        d["lambda_plus"] = g.lambda_plus;
        d["d"] = g.d;
        d["residuals"] = whitham_algebraic_residuals(g, c);
        return d;
    });
    m.def("elliptic_frame", [](double xi, const SpectralConstants& c) { return frame_dict(build_elliptic_frame(xi, c)); });
    m.def("theta3", &theta3);

    m.def("polynomial_P", &polynomial_P, py::arg("x"), py::arg("alpha"), py::arg("beta"));
    m.def("alpha0_x0", &alpha0_x0);
    m.def(
        "certify",
        [](double beta, double eps) {
            const PositivityCertificate cert = certify_positivity(beta, eps);
            py::dict d;
            d["status"] = status_name(cert.status);
            d["boxes"] = cert.boxes.size();
            d["min_alpha_found"] = cert.min_alpha_found;
            d["argmin"] = py::make_tuple(cert.argmin_x, cert.argmin_alpha);
            d["x_max"] = cert.x_max;
            return d;
        },
        py::arg("beta"), py::arg("eps") = 1e-3);

    py::class_<FieldEvaluator>(m, "FieldEvaluator")
        .def(py::init<const SpectralConstants&>())
        .def("__call__",
             [](FieldEvaluator& ev, double x, double t) {
                 const FieldTriple f = ev(x, t);
                 return py::make_tuple(f.q, f.mu, f.nu);
             })
        .def("region", [](const FieldEvaluator& ev, double x, double t) { return region_name(ev.region(x, t).region); });

    m.def(
        "integrate",
        [](double l, double omega, double x_max, double t_max, double dx, double dt) {
            PdeOptions o;
            o.x_max = x_max;
            o.t_max = t_max;
            o.dx = dx;
            o.dt = dt;
            o.snapshot_times = {t_max};
            PdeResult r;
            {
                py::gil_scoped_release release;
                r = integrate_srs(PhysicalParams::make(l, omega), o);
            }
            const FieldGrid& g = r.snapshots.front();
            py::dict d;
            d["x"] = g.x;
            d["t"] = g.t;
            d["q"] = g.q;
            d["mu"] = g.mu;
            d["nu"] = g.nu;
            d["max_conservation"] = r.max_conservation;
            return d;
        },
        py::arg("l") = -0.5, py::arg("omega") = 0.5, py::arg("x_max") = 10.0, py::arg("t_max") = 10.0,
        py::arg("dx") = 0.02, py::arg("dt") = 0.02);
}
