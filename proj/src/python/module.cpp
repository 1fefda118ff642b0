#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "covertroute/sweep.hpp"
#include "covertroute/verify.hpp"

namespace py = pybind11;
using namespace covertroute;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Covert multi-hop route planning core";

    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<InfeasibleLinkError>(m, "InfeasibleLinkError",
                                                PyExc_ValueError);
    py::register_exception<NoRouteError>(m, "NoRouteError", PyExc_RuntimeError);

    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y);

    py::class_<SystemNode>(m, "SystemNode")
        .def(py::init<NodeId, Point, double>(), py::arg("id"),
             py::arg("position"), py::arg("noise_var"))
        .def_readwrite("id", &SystemNode::id)
        .def_readwrite("position", &SystemNode::position)
        .def_readwrite("noise_var", &SystemNode::noise_var);

    py::class_<Warden>(m, "Warden")
        .def(py::init<Point, double>(), py::arg("position"),
             py::arg("noise_var"))
        .def_readwrite("position", &Warden::position)
        .def_readwrite("noise_var", &Warden::noise_var);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("dimension", &Scenario::dimension)
        .def_readwrite("alpha", &Scenario::alpha)
        .def_readwrite("nodes", &Scenario::nodes)
        .def_readwrite("wardens", &Scenario::wardens)
        .def_readwrite("source", &Scenario::source)
        .def_readwrite("dest", &Scenario::dest)
        .def("validate", &Scenario::validate)
        .def("to_json", [](const Scenario& s) { return scenario_to_json(s); });

    m.def("distance", &distance, py::arg("a"), py::arg("b"));
    m.def("generate_random", &generate_random, py::arg("seed"),
          py::arg("n_nodes"), py::arg("n_wardens"), py::arg("dimension"),
          py::arg("alpha"), py::arg("node_noise") = 1.0,
          py::arg("warden_noise") = 1.0);
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));
    m.def("scenario_from_json", &scenario_from_json, py::arg("text"));
    m.def("scenario_to_json", &scenario_to_json, py::arg("scenario"));

    py::class_<CovertBudget>(m, "CovertBudget")
        .def(py::init<double>(), py::arg("delta"))
        .def_readonly("delta", &CovertBudget::delta)
        .def_property_readonly("epsilon", &CovertBudget::epsilon)
        .def("gamma1", &CovertBudget::gamma1, py::arg("n"))
        .def("gamma2", &CovertBudget::gamma2, py::arg("n"));

    m.def("link_exposure", &link_exposure, py::arg("scenario"), py::arg("tx"),
          py::arg("rx"));
    m.def("bound_sk", &bound_sk, py::arg("terms"), py::arg("n"));
    m.def("bound_ik", &bound_ik, py::arg("terms"), py::arg("n"));
    m.def("exact_kl_sk", &exact_kl_sk, py::arg("terms"), py::arg("n"));
    m.def("exact_kl_ik", &exact_kl_ik, py::arg("terms"), py::arg("n"));

    py::class_<GaussianPair>(m, "GaussianPair")
        .def(py::init([](std::vector<double> sigma, std::vector<double> u,
                         std::int64_t replication) {
                 return GaussianPair{std::move(sigma), std::move(u), replication};
             }),
             py::arg("sigma_diag"), py::arg("u"), py::arg("replication") = 1)
        .def_readwrite("sigma_diag", &GaussianPair::sigma_diag)
        .def_readwrite("u", &GaussianPair::u)
        .def_readwrite("replication", &GaussianPair::replication);
    m.def("kl_gaussian_oracle", &kl_gaussian_oracle, py::arg("pair"));

    py::enum_<Regime>(m, "Regime")
        .value("MT_SK", Regime::MtSk)
        .value("MD_SK", Regime::MdSk)
        .value("MT_IK", Regime::MtIk)
        .value("MD_IK", Regime::MdIk);
    m.def("regime_name", &regime_name);
    m.def("regime_from_name", &regime_from_name, py::arg("name"));
    m.def("is_mt", &is_mt, py::arg("regime"));

    py::class_<Path>(m, "Path")
        .def(py::init([](std::vector<NodeId> nodes) {
                 return Path{std::move(nodes)};
             }),
             py::arg("nodes"))
        .def_readwrite("nodes", &Path::nodes)
        .def_property_readonly("hops", &Path::hops);

    py::class_<LinkParams>(m, "LinkParams")
        .def(py::init<double, double>(), py::arg("omega"), py::arg("gain"))
        .def_readwrite("omega", &LinkParams::omega)
        .def_readwrite("gain", &LinkParams::gain);
    m.def("link_params", &link_params, py::arg("path"), py::arg("scenario"));

    py::class_<PathPlan>(m, "PathPlan")
        .def_readonly("path", &PathPlan::path)
        .def_readonly("regime", &PathPlan::regime)
        .def_readonly("power_coeffs", &PathPlan::power_coeffs)
        .def_readonly("rate_coeffs", &PathPlan::rate_coeffs)
        .def_readonly("delay_coeffs", &PathPlan::delay_coeffs)
        .def_readonly("exposures", &PathPlan::exposures)
        .def_readonly("rate_coeff", &PathPlan::rate_coeff)
        .def_readonly("delay_total", &PathPlan::delay_total)
        .def_readonly("unconstrained", &PathPlan::unconstrained)
        .def("warden_terms", &PathPlan::warden_terms, py::arg("n"));

    m.def("allocate", &allocate, py::arg("regime"), py::arg("path"),
          py::arg("scenario"), py::arg("budget"));
    m.def("allocate_closed_form", &allocate_closed_form, py::arg("regime"),
          py::arg("links"), py::arg("budget"));
    m.def("allocate_numeric_oracle", &allocate_numeric_oracle, py::arg("regime"),
          py::arg("links"), py::arg("budget"));

    m.def("link_cost", &link_cost, py::arg("omega"), py::arg("regime"));

    py::class_<RouteResult>(m, "RouteResult")
        .def_readonly("regime", &RouteResult::regime)
        .def_readonly("path", &RouteResult::path)
        .def_readonly("path_cost", &RouteResult::path_cost)
        .def_readonly("plan", &RouteResult::plan);
    m.def("route", &route, py::arg("scenario"), py::arg("budget"),
          py::arg("regime"));

    py::class_<BruteForceResult>(m, "BruteForceResult")
        .def_readonly("min_cost", &BruteForceResult::min_cost)
        .def_readonly("best_metric_path", &BruteForceResult::best_metric_path)
        .def_readonly("best_metric", &BruteForceResult::best_metric)
        .def_readonly("paths_enumerated", &BruteForceResult::paths_enumerated);
    m.def("brute_force_route", &brute_force_route, py::arg("scenario"),
          py::arg("budget"), py::arg("regime"));

    py::enum_<SweepAxis>(m, "SweepAxis")
        .value("DELTA", SweepAxis::Delta)
        .value("NODES", SweepAxis::Nodes)
        .value("WARDENS", SweepAxis::Wardens)
        .value("ALPHA", SweepAxis::Alpha);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("dimension", &SweepSpec::dimension)
        .def_readwrite("alpha", &SweepSpec::alpha)
        .def_readwrite("node_noise", &SweepSpec::node_noise)
        .def_readwrite("warden_noise", &SweepSpec::warden_noise)
        .def_readwrite("n_nodes", &SweepSpec::n_nodes)
        .def_readwrite("n_wardens", &SweepSpec::n_wardens)
        .def_readwrite("delta", &SweepSpec::delta)
        .def_readwrite("axis", &SweepSpec::axis)
        .def_readwrite("values", &SweepSpec::values)
        .def_readwrite("trials", &SweepSpec::trials)
        .def_readwrite("base_seed", &SweepSpec::base_seed)
        .def_readwrite("regimes", &SweepSpec::regimes)
        .def_readwrite("nested", &SweepSpec::nested)
        .def_readwrite("jobs", &SweepSpec::jobs);

    py::class_<TrialRecord>(m, "TrialRecord")
        .def_readonly("axis_value", &TrialRecord::axis_value)
        .def_readonly("regime", &TrialRecord::regime)
        .def_readonly("trial", &TrialRecord::trial)
        .def_readonly("seed", &TrialRecord::seed)
        .def_readonly("rate_coeff", &TrialRecord::rate_coeff)
        .def_readonly("delay_coeff", &TrialRecord::delay_coeff)
        .def_readonly("path_len", &TrialRecord::path_len)
        .def_readonly("path_cost", &TrialRecord::path_cost)
        .def_readonly("failed", &TrialRecord::failed)
        .def_readonly("error", &TrialRecord::error);

    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("axis_value", &SummaryRow::axis_value)
        .def_readonly("regime", &SummaryRow::regime)
        .def_readonly("mean_rate", &SummaryRow::mean_rate)
        .def_readonly("mean_delay", &SummaryRow::mean_delay)
        .def_readonly("stderr_rate", &SummaryRow::stderr_rate)
        .def_readonly("stderr_delay", &SummaryRow::stderr_delay)
        .def_readonly("trials", &SummaryRow::trials);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("spec", &ExperimentResult::spec)
        .def_readonly("rows", &ExperimentResult::rows)
        .def_readonly("failed_trials", &ExperimentResult::failed_trials)
        .def("raw_csv",
             [](const ExperimentResult& r) {
                 std::ostringstream os;
                 write_raw_csv(os, r);
                 return os.str();
             })
        .def("summary_csv", [](const ExperimentResult& r) {
            std::ostringstream os;
            write_summary_csv(os, r);
            return os.str();
        });

    m.def("run_sweep", &run_sweep, py::arg("spec"),
          py::call_guard<py::gil_scoped_release>());
    m.def("summarize", &summarize, py::arg("result"));

    py::class_<VerifyOptions>(m, "VerifyOptions")
        .def(py::init<>())
        .def_readwrite("seed", &VerifyOptions::seed)
        .def_readwrite("cases", &VerifyOptions::cases)
        .def_readwrite("size_cap", &VerifyOptions::size_cap);

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("name", &SuiteReport::name)
        .def_readonly("cases", &SuiteReport::cases)
        .def_readonly("passed", &SuiteReport::passed)
        .def_readonly("detail", &SuiteReport::detail);
    m.def("run_verification", &run_verification, py::arg("options"));
}
