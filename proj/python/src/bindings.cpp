#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convfem/convfem.hpp"

namespace py = pybind11;
using namespace convfem;

namespace {

std::vector<std::vector<double>> dense_rows(const AntiBandMatrix& a) {
    const std::size_t n = a.size();
    const std::vector<double> flat = a.to_dense();
    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Convolutional finite element method for the linear oscillator";

    py::register_exception<SingularSystemError>(mod, "SingularSystemError", PyExc_RuntimeError);

    py::class_<Forcing>(mod, "Forcing")
        .def(py::init<>())
        .def_static("zero", &Forcing::zero)
        .def_static("sinusoid", &Forcing::sinusoid, py::arg("amplitude"), py::arg("frequency"))
        .def_static("pointwise", &Forcing::pointwise, py::arg("fn"))
        .def("__call__", &Forcing::operator(), py::arg("s"))
        .def_property_readonly("is_zero", &Forcing::is_zero);

    py::class_<OscillatorProblem>(mod, "OscillatorProblem")
        .def(py::init<double, double, double, double, double, Forcing>(), py::arg("m"),
             py::arg("k"), py::arg("u0"), py::arg("v0"), py::arg("horizon"),
             py::arg("forcing") = Forcing{})
        .def_property_readonly("m", &OscillatorProblem::mass)
        .def_property_readonly("k", &OscillatorProblem::stiffness)
        .def_property_readonly("u0", &OscillatorProblem::initial_displacement)
        .def_property_readonly("v0", &OscillatorProblem::initial_velocity)
        .def_property_readonly("horizon", &OscillatorProblem::horizon)
        .def_property_readonly("forcing", &OscillatorProblem::forcing);

    mod.def("natural_frequency", &natural_frequency);

    py::class_<Mesh>(mod, "Mesh")
        .def(py::init<std::vector<double>>(), py::arg("nodes"))
        .def_property_readonly("nodes", &Mesh::nodes)
        .def_property_readonly("element_count", &Mesh::element_count)
        .def_property_readonly("horizon", &Mesh::horizon)
        .def("element_length", &Mesh::element_length);

    py::class_<MeshCheck>(mod, "MeshCheck")
        .def_readonly("ok", &MeshCheck::ok)
        .def_readonly("error", &MeshCheck::error)
        .def_readonly("warnings", &MeshCheck::warnings);

    mod.def("uniform_mesh", &uniform_mesh, py::arg("horizon"), py::arg("n"));
    mod.def("validate_mesh", &validate_mesh);

    py::class_<QuadratureSpec>(mod, "QuadratureSpec")
        .def(py::init<>())
        .def_static("gauss", &QuadratureSpec::gauss, py::arg("points"), py::arg("panels"))
        .def_static("simpson", &QuadratureSpec::simpson, py::arg("panels"));

    mod.def(
        "convolve",
        [](const RealFunction& g, const RealFunction& h, double t, const QuadratureSpec& quad) {
            return convolve(g, h, t, quad);
        },
        py::arg("g"), py::arg("h"), py::arg("t"), py::arg("quad") = QuadratureSpec{});
    mod.def(
        "convolve_shifted",
        [](const RealFunction& g, const RealFunction& h, double t1, double t2,
           const QuadratureSpec& quad) { return convolve_shifted(g, h, t1, t2, quad); },
        py::arg("g"), py::arg("h"), py::arg("t1"), py::arg("t2"),
        py::arg("quad") = QuadratureSpec{});

    py::class_<Element>(mod, "Element")
        .def_static("make", &Element::make, py::arg("left"), py::arg("right"),
                    py::arg("index") = 0)
        .def_readonly("left", &Element::left)
        .def_readonly("right", &Element::right)
        .def_readonly("length", &Element::length);

    py::class_<LocalSystem>(mod, "LocalSystem")
        .def_readonly("kcal", &LocalSystem::kcal)
        .def_readonly("mass", &LocalSystem::mass)
        .def_readonly("stiffness", &LocalSystem::stiffness)
        .def_readonly("force", &LocalSystem::force);

    mod.def("local_matrices", &local_matrices, py::arg("element"), py::arg("m"), py::arg("k"));
    mod.def("local_force", &local_force, py::arg("element"), py::arg("forcing"),
            py::arg("quad") = QuadratureSpec{});

    py::class_<GlobalSystem>(mod, "GlobalSystem")
        .def_property_readonly("matrix",
                               [](const GlobalSystem& gs) { return dense_rows(gs.matrix); })
        .def_readonly("load", &GlobalSystem::load)
        .def_readonly("final_momentum_unknown", &GlobalSystem::final_momentum_unknown);

    py::class_<ReducedSystem>(mod, "ReducedSystem")
        .def_property_readonly("matrix",
                               [](const ReducedSystem& rs) { return dense_rows(rs.matrix); })
        .def_readonly("load", &ReducedSystem::load)
        .def_readonly("u0", &ReducedSystem::u0);

    mod.def("assemble_global", &assemble_global, py::arg("mesh"), py::arg("problem"),
            py::arg("quad") = QuadratureSpec{});
    mod.def("global_system_direct", &global_system_direct, py::arg("mesh"), py::arg("problem"),
            py::arg("quad") = QuadratureSpec{});
    mod.def("impose_initial_conditions", &impose_initial_conditions);
    mod.def("solve_reduced", &solve_reduced);
    mod.def(
        "recover_final_velocity",
        [](const GlobalSystem& gs, const std::vector<double>& u) {
            return recover_final_velocity(gs, u);
        },
        py::arg("system"), py::arg("displacements"));

    py::class_<Trajectory>(mod, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("displacements", &Trajectory::displacements)
        .def_readonly("velocities", &Trajectory::velocities)
        .def_property_readonly("scheme", [](const Trajectory& t) { return to_string(t.scheme); })
        .def_readonly("warnings", &Trajectory::warnings);

    mod.def("fem_trajectory", &fem_trajectory, py::arg("problem"), py::arg("mesh"),
            py::arg("quad") = QuadratureSpec{});
    mod.def("march", &march, py::arg("problem"), py::arg("tau"), py::arg("steps"),
            py::arg("quad") = QuadratureSpec{});
    mod.def("march_on_mesh", &march_on_mesh, py::arg("problem"), py::arg("mesh"),
            py::arg("quad") = QuadratureSpec{});
    mod.def("stability_limit", &stability_limit, py::arg("m"), py::arg("k"));
    mod.def("critical_period_ratio", &critical_period_ratio);
    mod.def("amplification_eigenvalues", &amplification_eigenvalues, py::arg("m"), py::arg("k"),
            py::arg("tau"));

    mod.def("exact_solution", &exact_solution, py::arg("problem"), py::arg("s"));

    py::class_<ErrorReport>(mod, "ErrorReport")
        .def_readonly("per_node_error", &ErrorReport::per_node_error)
        .def_readonly("at_times", &ErrorReport::at_times)
        .def_readonly("max_abs_error", &ErrorReport::max_abs_error);
    mod.def("error_metrics", &error_metrics, py::arg("trajectory"), py::arg("problem"));
}
