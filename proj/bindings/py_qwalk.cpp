// Python bindings for the qwalk core library.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qwalk/analysis.hpp"
#include "qwalk/ensembles.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/optimizer.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

Distribution as_distribution(const Eigen::VectorXd& v) {
    return Distribution::from_vector(v);
}

AcceptancePolicy parse_policy(const std::string& name) {
    if (name == "greedy") return AcceptancePolicy::greedy;
    if (name == "always_accept" || name == "always-accept")
        return AcceptancePolicy::always_accept;
    throw std::invalid_argument("unknown policy '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "classical vs quantum walk analysis on weighted networks";
    m.attr("__version__") = QWALK_VERSION;

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    // ----- graph ------------------------------------------------------------
    py::class_<Graph>(m, "Graph")
        .def(py::init<Eigen::MatrixXd, std::vector<std::string>>(), py::arg("weights"),
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("n", &Graph::size)
        .def_property_readonly("labels", &Graph::labels)
        .def("weights", &Graph::weights, py::return_value_policy::copy)
        .def("weight", &Graph::weight, py::arg("i"), py::arg("j"))
        .def("find_label", &Graph::find_label, py::arg("label"))
        .def("edge_count", &Graph::edge_count)
        .def("total_weight", &Graph::total_weight)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.size()) + ", edges=" +
                   std::to_string(g.edge_count()) + ")";
        });

    py::class_<DegreeVector>(m, "DegreeVector")
        .def_property_readonly(
            "d", [](const DegreeVector& dv) { return dv.d; },
            py::return_value_policy::copy)
        .def_readonly("mean_degree", &DegreeVector::mean_degree)
        .def_readonly("mean_root_degree", &DegreeVector::mean_root_degree);

    m.def("degrees", &degrees, py::arg("graph"));
    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def("giant_component", &giant_component, py::arg("graph"));
    m.def("from_edge_list", &from_edge_list, py::arg("text"));
    m.def("load_edge_list", &load_edge_list, py::arg("path"));
    m.def("to_edge_list", &to_edge_list, py::arg("graph"));
    m.def("save_edge_list", &save_edge_list, py::arg("graph"), py::arg("path"));
    m.def("generate_ba", &generate_ba, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("generate_er", &generate_er, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("generate_ws", &generate_ws, py::arg("n"), py::arg("k"), py::arg("beta"),
          py::arg("seed"));
    m.def("generate_rg", &generate_rg, py::arg("n"), py::arg("radius"), py::arg("seed"));
    m.def("rg_radius_for_mean_degree", &rg_radius_for_mean_degree, py::arg("n"),
          py::arg("mean_degree"));
    m.def("make_star", &make_star, py::arg("n"));
    m.def("make_ring", &make_ring, py::arg("n"));
    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_complete", &make_complete, py::arg("n"));

    // ----- spectral ----------------------------------------------------------
    m.def(
        "laplacian", [](const Graph& g) { return laplacian(g).matrix; }, py::arg("graph"));
    m.def(
        "quantum_hamiltonian", [](const Graph& g) { return quantum_hamiltonian(g).matrix; },
        py::arg("graph"));
    m.def(
        "classical_generator", [](const Graph& g) { return classical_generator(g).matrix; },
        py::arg("graph"));
    m.def(
        "spectrum",
        [](const Graph& g) {
            Spectrum s = eigendecompose(quantum_hamiltonian(g));
            return std::pair<Eigen::VectorXd, Eigen::MatrixXd>(std::move(s.eigenvalues),
                                                               std::move(s.eigenvectors));
        },
        py::arg("graph"), "eigenvalues and eigenvectors of the quantum hamiltonian");
    m.def(
        "group_eigenspaces",
        [](const Eigen::VectorXd& eigenvalues, double tol) {
            Spectrum s;
            s.eigenvalues = eigenvalues;
            s.eigenvectors =
                Eigen::MatrixXd::Identity(eigenvalues.size(), eigenvalues.size());
            std::vector<std::pair<double, std::vector<int>>> out;
            for (const auto& grp : group_eigenspaces(s, tol).groups)
                out.emplace_back(grp.eigenvalue, grp.members);
            return out;
        },
        py::arg("eigenvalues"), py::arg("tol"));
    m.def("ground_state", &ground_state, py::arg("graph"));
    m.def(
        "spectral_gap",
        [](const Graph& g, double tol) {
            const Spectrum s = eigendecompose(quantum_hamiltonian(g));
            if (tol < 0.0) tol = default_group_tolerance(s);
            return spectral_gap(group_eigenspaces(s, tol));
        },
        py::arg("graph"), py::arg("tol") = -1.0);
    m.def("general_eigenvalues", &general_eigenvalues, py::arg("matrix"),
          "sorted real parts of a general matrix's eigenvalues");

    // ----- walk ----------------------------------------------------------------
    py::class_<DensityState>(m, "DensityState")
        .def_static("pure", &DensityState::pure, py::arg("psi"))
        .def_static("mixed", &DensityState::mixed, py::arg("rho"))
        .def_static("uniform", &DensityState::uniform, py::arg("n"))
        .def_static("node", &DensityState::node, py::arg("n"), py::arg("i"))
        .def_property_readonly("is_pure", &DensityState::is_pure)
        .def_property_readonly("dim", &DensityState::dim);

    py::class_<WalkSummary>(m, "WalkSummary")
        .def_property_readonly(
            "p_classical", [](const WalkSummary& w) { return w.p_classical.p; },
            py::return_value_policy::copy)
        .def_property_readonly(
            "p_quantum", [](const WalkSummary& w) { return w.p_quantum.p; },
            py::return_value_policy::copy)
        .def_property_readonly(
            "p_correction",
            [](const WalkSummary& w) -> std::optional<Eigen::VectorXd> {
                if (!w.p_correction) return std::nullopt;
                return w.p_correction->p;
            },
            py::return_value_policy::copy)
        .def_readonly("quantumness", &WalkSummary::quantumness)
        .def_readonly("energy", &WalkSummary::energy)
        .def_readonly("gap", &WalkSummary::gap)
        .def_readonly("bound_ratio", &WalkSummary::bound_ratio)
        .def_readonly("entropy_bound", &WalkSummary::entropy_bound)
        .def("__repr__", [](const WalkSummary& w) {
            return "WalkSummary(quantumness=" + std::to_string(w.quantumness) +
                   ", energy=" + std::to_string(w.energy) + ", gap=" +
                   std::to_string(w.gap) + ")";
        });

    m.def(
        "classical_stationary",
        [](const Graph& g) { return classical_stationary(g).p; }, py::arg("graph"));
    m.def("quantum_long_time_average", &quantum_long_time_average, py::arg("graph"),
          py::arg("state"), py::arg("tol") = -1.0);
    m.def("quantumness_uniform", &quantumness_uniform, py::arg("graph"));
    m.def("energy", &energy, py::arg("graph"), py::arg("state"));
    m.def("energy_uniform_closed_form", &energy_uniform_closed_form, py::arg("graph"));
    m.def(
        "finite_time_average",
        [](const Graph& g, const DensityState& s, double t_max, int samples) {
            return finite_time_average(g, s, t_max, samples).p;
        },
        py::arg("graph"), py::arg("state"), py::arg("t_max"), py::arg("samples"));

    // ----- ensembles ---------------------------------------------------------------
    m.def(
        "renyi_entropy",
        [](const Eigen::VectorXd& p, double q) { return renyi_entropy(as_distribution(p), q); },
        py::arg("p"), py::arg("q"));
    m.def(
        "shannon_entropy",
        [](const Eigen::VectorXd& p) { return shannon_entropy(as_distribution(p)); },
        py::arg("p"));
    m.def("entropy_bound", &entropy_bound, py::arg("graph"));
    m.def("quantumness_ba_analytic", &quantumness_ba_analytic, py::arg("mean_degree") = 6.0);
    m.def("quantumness_poisson", &quantumness_poisson, py::arg("mean_degree"));

    py::class_<PowerLawFit>(m, "PowerLawFit")
        .def_readonly("prefactor", &PowerLawFit::prefactor)
        .def_readonly("exponent", &PowerLawFit::exponent)
        .def_readonly("rms_log_residual", &PowerLawFit::rms_log_residual)
        .def_readonly("points", &PowerLawFit::points);

    py::class_<PoissonFit>(m, "PoissonFit")
        .def_readonly("kappa1", &PoissonFit::kappa1)
        .def_readonly("kappa2", &PoissonFit::kappa2)
        .def_readonly("rms_log_residual", &PoissonFit::rms_log_residual)
        .def_readonly("mean_min", &PoissonFit::mean_min)
        .def_readonly("mean_max", &PoissonFit::mean_max)
        .def("__repr__", [](const PoissonFit& f) {
            return "PoissonFit(kappa1=" + std::to_string(f.kappa1) +
                   ", kappa2=" + std::to_string(f.kappa2) + ")";
        });

    m.def(
        "fit_power_law",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return fit_power_law(x, y);
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "fit_power_law_log",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return fit_power_law_log(x, y);
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "fit_poisson_quantumness",
        [](const std::vector<double>& means) { return fit_poisson_quantumness(means); },
        py::arg("means"));

    // ----- optimizer -----------------------------------------------------------------
    py::class_<TrajectoryPoint>(m, "TrajectoryPoint")
        .def_readonly("step", &TrajectoryPoint::step)
        .def_readonly("epsilon", &TrajectoryPoint::epsilon)
        .def_readonly("entropy", &TrajectoryPoint::entropy);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("final_graph", &Trajectory::final_graph)
        .def_readonly("steps_taken", &Trajectory::steps_taken)
        .def_readonly("accepted", &Trajectory::accepted)
        .def_property_readonly("terminated_by", [](const Trajectory& t) {
            return t.terminated_by == StopReason::target_reached ? "target_reached"
                                                                 : "step_limit";
        });

    m.def(
        "mc_step",
        [](const Graph& g, std::uint64_t seed) {
            Rng rng(seed);
            return mc_step(g, rng);
        },
        py::arg("graph"), py::arg("seed"));
    m.def(
        "optimize_quantumness",
        [](const Graph& g, double target_epsilon, long max_steps, const std::string& policy,
           std::uint64_t seed, long record_stride) {
            McConfig cfg;
            cfg.target_epsilon = target_epsilon;
            cfg.max_steps = max_steps;
            cfg.policy = parse_policy(policy);
            cfg.seed = seed;
            cfg.record_stride = record_stride;
            return optimize_quantumness(g, cfg);
        },
        py::arg("graph"), py::arg("target_epsilon") = 0.6, py::arg("max_steps") = 200000,
        py::arg("policy") = "greedy", py::arg("seed") = 0, py::arg("record_stride") = 100);

    // ----- analysis -------------------------------------------------------------------
    m.def(
        "l1_distance",
        [](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
            return l1_distance(as_distribution(p), as_distribution(q));
        },
        py::arg("p"), py::arg("q"));

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("exponent", &FitResult::exponent)
        .def_readonly("prefactor", &FitResult::prefactor)
        .def_readonly("rms_log_residual", &FitResult::rms_log_residual)
        .def_readonly("points_used", &FitResult::points_used)
        .def_readonly("points_excluded", &FitResult::points_excluded);

    m.def("fit_correction_exponent", &fit_correction_exponent, py::arg("summary"),
          py::arg("degrees"));
}
