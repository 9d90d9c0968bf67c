#include <arbk/errors.hpp>
#include <arbk/experiments.hpp>
#include <arbk/io.hpp>
#include <arbk/potential.hpp>
#include <arbk/solvers.hpp>
#include <arbk/theta_schedule.hpp>
#include <arbk/version.hpp>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace arbk;

namespace {

py::dict log_to_dict(const TrialLog& log)
{
    py::list epoch, residual, error, bregman;
    for (const auto& r : log.records) {
        epoch.append(r.epoch);
        residual.append(r.rel_residual);
        error.append(r.rel_error);
        bregman.append(r.bregman);
    }
    py::dict d;
    d["method"] = log.method;
    d["seed"] = log.seed;
    d["epoch"] = epoch;
    d["rel_residual"] = residual;
    d["rel_error"] = error;
    d["bregman"] = bregman;
    return d;
}

} // namespace

PYBIND11_MODULE(_arbk, m)
{
    m.doc() = "Randomized and accelerated Bregman-Kaczmarz solvers for min lambda|x|_1 + |x|^2/2 s.t. Ax = b";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "ArbkError", PyExc_ValueError);

    m.def("soft_shrink", [](const Vector& x, double lambda) { return soft_shrink(x, lambda); }, py::arg("x"),
          py::arg("lambda_"));

    py::class_<Potential>(m, "Potential")
        .def(py::init<double>(), py::arg("lambda_") = 0.0)
        .def_property_readonly("lambda_", &Potential::lambda)
        .def("value", [](const Potential& p, const Vector& x) { return p.value(x); })
        .def("conjugate_value", [](const Potential& p, const Vector& x) { return p.conjugate_value(x); })
        .def("conjugate_gradient", [](const Potential& p, const Vector& x) { return p.conjugate_gradient(x); })
        .def("subgradient", [](const Potential& p, const Vector& x) { return p.subgradient(x); })
        .def(
            "bregman_distance",
            [](const Potential& p, const Vector& x, const Vector& x_star, const Vector& y) {
                return p.bregman_distance(BregmanPoint{x, x_star}, y);
            },
            py::arg("x"), py::arg("x_star"), py::arg("y"));

    py::class_<ThetaSchedule>(m, "ThetaSchedule")
        .def(py::init([](double theta0, bool constant) {
                 return ThetaSchedule(theta0, constant ? ThetaSchedule::Mode::constant
                                                       : ThetaSchedule::Mode::accelerated);
             }),
             py::arg("theta0"), py::arg("constant") = false)
        .def_property_readonly("theta", &ThetaSchedule::theta)
        .def_property_readonly("k", &ThetaSchedule::k)
        .def("advance", &ThetaSchedule::advance)
        .def_static("next", &ThetaSchedule::next);

    py::class_<LinearSystem>(m, "LinearSystem")
        .def(py::init<RowMatrix, Vector>(), py::arg("a"), py::arg("b"))
        .def_property_readonly("rows", &LinearSystem::rows)
        .def_property_readonly("cols", &LinearSystem::cols)
        .def_property_readonly("a", &LinearSystem::matrix)
        .def_property_readonly("b", &LinearSystem::rhs)
        .def_property_readonly("row_sq_norms", &LinearSystem::row_sq_norms)
        .def_property_readonly("frob_sq", &LinearSystem::frob_sq)
        .def("residual", [](const LinearSystem& s, const Vector& x) { return s.residual(x); });

    py::class_<GeneratedProblem>(m, "Problem")
        .def_property_readonly("system", [](const GeneratedProblem& p) { return p.sys; })
        .def_readonly("x_hat", &GeneratedProblem::x_hat)
        .def_readonly("y_hat", &GeneratedProblem::y_hat)
        .def_readonly("sparsity", &GeneratedProblem::sparsity)
        .def_property_readonly("lambda_", [](const GeneratedProblem& p) { return p.spec.lambda; })
        .def_property_readonly("seed", [](const GeneratedProblem& p) { return p.spec.seed; })
        .def("to_json", &io::problem_to_json)
        .def_static("from_json", [](const std::string& text) { return io::problem_from_json(text); });

    m.def(
        "generate",
        [](Index rows, Index cols, double lambda, std::uint64_t seed) {
            return generate(ProblemSpec{rows, cols, lambda, seed});
        },
        py::arg("m"), py::arg("n"), py::arg("lambda_"), py::arg("seed"));

    m.def(
        "solve",
        [](const GeneratedProblem& p, const std::string& method, int epochs, std::uint64_t seed, double tol,
           std::optional<double> theta0, bool constant_theta) {
            RunOptions options;
            options.theta0 = theta0;
            options.constant_theta = constant_theta;
            options.reference = p.x_hat;
            RunResult r;
            {
                py::gil_scoped_release release;
                r = run(parse_method(method), p.sys, Potential(p.spec.lambda), seed, StoppingRule{epochs, tol},
                        options);
            }
            py::dict d = log_to_dict(r.log);
            d["x"] = r.x;
            d["x_star"] = r.x_star;
            d["iterations"] = r.iterations;
            return d;
        },
        py::arg("problem"), py::arg("method"), py::arg("epochs"), py::arg("seed") = 0, py::arg("tol") = 0.0,
        py::arg("theta0") = py::none(), py::arg("constant_theta") = false);

    m.def(
        "compare",
        [](const GeneratedProblem& p, const std::vector<std::string>& methods, int trials, int epochs,
           std::uint64_t seed_base, double tol) {
            TrialsConfig config;
            for (const auto& name : methods) config.methods.push_back(parse_method(name));
            config.trials = trials;
            config.stop = StoppingRule{epochs, tol};
            config.seed_base = seed_base;
            TrialsResult r;
            {
                py::gil_scoped_release release;
                r = run_trials(p, config);
            }
            return io::aggregate_csv(r.table);
        },
        py::arg("problem"), py::arg("methods"), py::arg("trials") = 10, py::arg("epochs") = 10,
        py::arg("seed_base") = 0, py::arg("tol") = 0.0,
        "Runs shared-stream trials and returns the aggregated CSV text.");
}
