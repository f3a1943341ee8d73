// qwalk: generate, ingest and analyze networks with classical and quantum
// walk machinery; file-based workflows with reproducible manifests.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qwalk/analysis.hpp"
#include "qwalk/ensembles.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/optimizer.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qwalk;

namespace {

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

fs::path default_out_dir() {
    if (const char* env = std::getenv("QWALK_OUT_DIR")) return fs::path(env);
    return fs::path(".");
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw DataError("write failed for '" + path.string() + "'");
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

/// Timestamps live only here; every data file is byte-stable across reruns.
void write_manifest(const fs::path& path, const std::string& command, json parameters) {
    json m;
    m["command"] = command;
    m["version"] = QWALK_VERSION;
    m["timestamp_utc"] = iso_timestamp();
    m["parameters"] = std::move(parameters);
    write_file(path, m.dump(2) + "\n");
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Graph load_connected_graph(const fs::path& path, bool strict) {
    const Graph g = load_edge_list(path);
    if (is_connected(g)) return g;
    if (strict)
        throw DataError("graph in '" + path.string() + "' is disconnected (--strict)");
    const Graph gc = giant_component(g);
    std::cerr << "notice: extracted giant component (" << g.size() << " -> " << gc.size()
              << " nodes)\n";
    return gc;
}

DensityState parse_state(const std::string& spec, const Graph& g) {
    if (spec == "uniform") return DensityState::uniform(g.size());
    if (spec.rfind("node:", 0) == 0) {
        const std::string label = spec.substr(5);
        const int idx = g.find_label(label);
        if (idx < 0) throw DataError("unknown node label '" + label + "'");
        return DensityState::node(g.size(), idx);
    }
    if (spec.rfind("file:", 0) == 0) {
        const fs::path path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw DataError("cannot open state file '" + path.string() + "'");
        std::vector<double> vals;
        double x = 0.0;
        while (in >> x) vals.push_back(x);
        const auto n = static_cast<std::size_t>(g.size());
        try {
            if (vals.size() == n) {
                Eigen::VectorXd psi =
                    Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(n));
                return DensityState::pure(std::move(psi));
            }
            if (vals.size() == n * n) {
                Eigen::MatrixXd rho =
                    Eigen::Map<Eigen::MatrixXd>(vals.data(), static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
                return DensityState::mixed(rho.transpose()); // row-major text
            }
        } catch (const std::invalid_argument& e) {
            throw DataError("state file '" + path.string() + "': " + e.what());
        }
        throw DataError("state file '" + path.string() + "' holds " +
                        std::to_string(vals.size()) + " numbers, expected " +
                        std::to_string(n) + " (pure) or " + std::to_string(n * n) +
                        " (density matrix)");
    }
    throw UsageError("unknown state spec '" + spec + "' (use uniform, node:<label>, file:<path>)");
}

std::vector<double> parse_means(const std::string& spec) {
    std::vector<double> means;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        const double lo = std::stod(spec.substr(0, colon));
        const double hi = std::stod(spec.substr(colon + 1));
        if (hi < lo) throw UsageError("means range must be ascending");
        for (double m = lo; m <= hi + 1e-9; m += 1.0) means.push_back(m);
    } else {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) means.push_back(std::stod(tok));
    }
    if (means.empty()) throw UsageError("empty mean-degree grid");
    return means;
}

json fit_to_json(const FitResult& fit) {
    return {{"exponent", fit.exponent},
            {"prefactor", fit.prefactor},
            {"rms_log_residual", fit.rms_log_residual},
            {"points_used", fit.points_used},
            {"points_excluded", fit.points_excluded}};
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
    std::string model;
    int n = 500;
    int m = 3;
    double p = -1.0;
    int k = 6;
    double beta = 0.1;
    double radius = -1.0;
    double mean_degree = -1.0;
    std::uint64_t seed = 0;
    std::string out;
    fs::path out_dir = default_out_dir();
};

int cmd_generate(const GenerateArgs& a) {
    Graph g;
    json params{{"model", a.model}, {"n", a.n}, {"seed", a.seed}};
    if (a.model == "ba") {
        g = generate_ba(a.n, a.m, a.seed);
        params["m"] = a.m;
    } else if (a.model == "er") {
        double p = a.p;
        if (p < 0.0) {
            if (a.mean_degree < 0.0) throw UsageError("er: give --p or --mean-degree");
            p = a.mean_degree / (a.n - 1);
        }
        g = generate_er(a.n, p, a.seed);
        params["p"] = p;
    } else if (a.model == "ws") {
        g = generate_ws(a.n, a.k, a.beta, a.seed);
        params["k"] = a.k;
        params["beta"] = a.beta;
    } else if (a.model == "rg") {
        double r = a.radius;
        if (r < 0.0) {
            if (a.mean_degree < 0.0) throw UsageError("rg: give --radius or --mean-degree");
            r = rg_radius_for_mean_degree(a.n, a.mean_degree);
        }
        g = generate_rg(a.n, r, a.seed);
        params["radius"] = r;
    } else if (a.model == "star") {
        g = make_star(a.n);
    } else if (a.model == "ring") {
        g = make_ring(a.n);
    } else {
        throw UsageError("unknown model '" + a.model + "'");
    }

    const fs::path out = a.out_dir / (a.out.empty() ? a.model + ".edges" : a.out);
    write_file(out, to_edge_list(g));
    write_manifest(out.string() + ".manifest.json", "generate", std::move(params));
    std::cout << out.string() << ": " << g.size() << " nodes, " << g.edge_count()
              << " edges\n";
    return 0;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
    std::string graph_file;
    std::string state = "uniform";
    double tol = -1.0;
    bool strict = false;
    bool spectrum = false;
    std::string format = "csv";
    fs::path out_dir = default_out_dir();
};

json summary_to_json(const WalkSummary& ws, const std::optional<FitResult>& fit) {
    json j;
    j["epsilon"] = ws.quantumness;
    j["energy"] = ws.energy;
    j["gap"] = ws.gap;
    j["energy_over_gap"] = ws.energy / ws.gap;
    j["bound_ratio"] = ws.bound_ratio ? json(*ws.bound_ratio) : json();
    j["entropy_bound"] = ws.entropy_bound ? json(*ws.entropy_bound) : json();
    j["correction_defined"] = ws.p_correction.has_value();
    j["kappa3_fit"] = fit ? fit_to_json(*fit) : json();
    return j;
}

std::string per_node_csv(const Graph& g, const DegreeVector& dv, const WalkSummary& ws) {
    std::string out = "node,degree,p_classical,p_quantum,p_correction,correction_ratio\n";
    for (int i = 0; i < g.size(); ++i) {
        out += g.labels()[static_cast<std::size_t>(i)];
        out += ',' + fmt(dv.d(i)) + ',' + fmt(ws.p_classical[i]) + ',' + fmt(ws.p_quantum[i]);
        if (ws.p_correction) {
            const double pt = (*ws.p_correction)[i];
            out += ',' + fmt(pt) + ',' + fmt(pt / ws.p_classical[i]);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

std::string per_node_json(const Graph& g, const DegreeVector& dv, const WalkSummary& ws) {
    json rows = json::array();
    for (int i = 0; i < g.size(); ++i) {
        json row{{"node", g.labels()[static_cast<std::size_t>(i)]},
                 {"degree", dv.d(i)},
                 {"p_classical", ws.p_classical[i]},
                 {"p_quantum", ws.p_quantum[i]}};
        if (ws.p_correction) {
            row["p_correction"] = (*ws.p_correction)[i];
            row["correction_ratio"] = (*ws.p_correction)[i] / ws.p_classical[i];
        } else {
            row["p_correction"] = nullptr;
            row["correction_ratio"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

int cmd_analyze(const AnalyzeArgs& a) {
    const Graph original = load_edge_list(a.graph_file);
    const Graph g = [&] {
        if (is_connected(original)) return original;
        if (a.strict)
            throw DataError("graph in '" + a.graph_file + "' is disconnected (--strict)");
        const Graph gc = giant_component(original);
        std::cerr << "notice: extracted giant component (" << original.size() << " -> "
                  << gc.size() << " nodes)\n";
        return gc;
    }();

    const DensityState rho0 = parse_state(a.state, g);
    const WalkSummary ws = quantum_long_time_average(g, rho0, a.tol);
    const DegreeVector dv = degrees(g);

    std::optional<FitResult> fit;
    if (ws.quantumness > 1e-6) {
        try {
            fit = fit_correction_exponent(ws, dv);
        } catch (const std::invalid_argument&) {
            // too few usable nodes; summary reports null
        }
    }

    json summary = summary_to_json(ws, fit);
    summary["n"] = g.size();
    summary["graph_file"] = a.graph_file;
    summary["state"] = a.state;
    summary["giant_component_extracted"] = g.size() != original.size();

    write_file(a.out_dir / "summary.json", summary.dump(2) + "\n");
    if (a.format == "json")
        write_file(a.out_dir / "pernode.json", per_node_json(g, dv, ws));
    else
        write_file(a.out_dir / "pernode.csv", per_node_csv(g, dv, ws));

    if (a.spectrum) {
        const Spectrum s = eigendecompose(quantum_hamiltonian(g));
        const double tol = a.tol < 0.0 ? default_group_tolerance(s) : a.tol;
        write_file(a.out_dir / "spectrum.csv", spectrum_to_csv(s));
        write_file(a.out_dir / "partition.json", partition_to_json(group_eigenspaces(s, tol)));
    }

    write_manifest(a.out_dir / "manifest.json", "analyze",
                   {{"graph_file", a.graph_file},
                    {"state", a.state},
                    {"tol", a.tol},
                    {"strict", a.strict},
                    {"format", a.format}});
    std::cout << "epsilon " << fmt(ws.quantumness) << ", E/Delta "
              << fmt(ws.energy / ws.gap) << "\n";
    return 0;
}

// --- evolve -------------------------------------------------------------------

struct EvolveArgs {
    std::string graph_file;
    std::string state = "uniform";
    std::string horizons = "100,1000,10000";
    int samples = 2000;
    double tol = -1.0;
    bool strict = false;
    fs::path out_dir = default_out_dir();
};

int cmd_evolve(const EvolveArgs& a) {
    if (a.samples < 2) throw UsageError("--samples must be >= 2");
    const Graph g = load_connected_graph(a.graph_file, a.strict);
    const DensityState rho0 = parse_state(a.state, g);

    std::vector<double> horizons;
    {
        std::stringstream ss(a.horizons);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) horizons.push_back(std::stod(tok));
    }
    if (horizons.empty()) throw UsageError("empty horizon ladder");
    for (const double t : horizons)
        if (t <= 0.0) throw UsageError("horizons must be positive");

    const WalkSummary ws = quantum_long_time_average(g, rho0, a.tol);
    std::string csv = "horizon,l1_distance\n";
    for (const double t : horizons) {
        const Distribution p = finite_time_average(g, rho0, t, a.samples);
        csv += fmt(t) + ',' + fmt(l1_distance(p, ws.p_quantum)) + '\n';
    }
    write_file(a.out_dir / "convergence.csv", csv);
    write_manifest(a.out_dir / "manifest.json", "evolve",
                   {{"graph_file", a.graph_file},
                    {"state", a.state},
                    {"horizons", a.horizons},
                    {"samples", a.samples},
                    {"tol", a.tol}});
    std::cout << "wrote " << (a.out_dir / "convergence.csv").string() << "\n";
    return 0;
}

// --- optimize -----------------------------------------------------------------

struct OptimizeArgs {
    std::string graph_file;
    double target_eps = 0.6;
    long max_steps = 200000;
    std::string policy = "greedy";
    std::uint64_t seed = 0;
    long record_stride = 100;
    bool strict = false;
    fs::path out_dir = default_out_dir();
};

int cmd_optimize(const OptimizeArgs& a) {
    const Graph g = load_connected_graph(a.graph_file, a.strict);
    McConfig cfg;
    cfg.target_epsilon = a.target_eps;
    cfg.max_steps = a.max_steps;
    cfg.record_stride = a.record_stride;
    cfg.seed = a.seed;
    if (a.policy == "greedy")
        cfg.policy = AcceptancePolicy::greedy;
    else if (a.policy == "always-accept")
        cfg.policy = AcceptancePolicy::always_accept;
    else
        throw UsageError("unknown policy '" + a.policy + "'");

    const Trajectory traj = optimize_quantumness(g, cfg);
    write_file(a.out_dir / "trajectory.csv", trajectory_to_csv(traj));
    write_file(a.out_dir / "final.edges", to_edge_list(traj.final_graph));

    json result;
    result["terminated_by"] =
        traj.terminated_by == StopReason::target_reached ? "target_reached" : "step_limit";
    result["steps_taken"] = traj.steps_taken;
    result["accepted"] = traj.accepted;
    result["final_epsilon"] = traj.samples.back().epsilon;
    write_file(a.out_dir / "result.json", result.dump(2) + "\n");

    write_manifest(a.out_dir / "manifest.json", "optimize",
                   {{"graph_file", a.graph_file},
                    {"target_eps", a.target_eps},
                    {"max_steps", a.max_steps},
                    {"policy", a.policy},
                    {"seed", a.seed},
                    {"record_stride", a.record_stride}});
    std::cout << result["terminated_by"].get<std::string>() << " at epsilon "
              << fmt(traj.samples.back().epsilon) << " after " << traj.steps_taken
              << " steps\n";
    return 0;
}

// --- sweep ----------------------------------------------------------------------

struct SweepArgs {
    std::string model = "er";
    std::string means = "3:20";
    int seeds_per_point = 20;
    int n = 500;
    int jobs = 1;
    std::uint64_t seed = 0;
    fs::path out_dir = default_out_dir();
};

struct SweepPoint {
    double mean = 0.0;
    double analytic = std::numeric_limits<double>::quiet_NaN();
    double emp_mean = 0.0;
    double emp_std = 0.0;
};

int cmd_sweep(const SweepArgs& a) {
    if (a.seeds_per_point < 1) throw UsageError("--seeds-per-point must be >= 1");
    if (a.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (a.model != "er" && a.model != "ba" && a.model != "ws" && a.model != "rg")
        throw UsageError("unknown sweep model '" + a.model + "'");
    const std::vector<double> means = parse_means(a.means);

    std::vector<SweepPoint> points(means.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < means.size(); i = next.fetch_add(1)) {
            SweepPoint pt;
            pt.mean = means[i];
            if (a.model == "er" || a.model == "rg")
                pt.analytic = quantumness_poisson(pt.mean);
            else if (a.model == "ba")
                pt.analytic = quantumness_ba_analytic(pt.mean);

            double acc = 0.0, acc2 = 0.0;
            for (int s = 0; s < a.seeds_per_point; ++s) {
                const std::uint64_t task_seed =
                    Rng::mix(Rng::mix(a.seed, static_cast<std::uint64_t>(i)),
                             static_cast<std::uint64_t>(s));
                Graph g;
                if (a.model == "er") {
                    g = generate_er(a.n, pt.mean / (a.n - 1), task_seed);
                } else if (a.model == "ba") {
                    const int m = std::max(1, static_cast<int>(std::lround(pt.mean / 2.0)));
                    g = generate_ba(a.n, m, task_seed);
                } else if (a.model == "ws") {
                    int k = static_cast<int>(std::lround(pt.mean));
                    if (k % 2) ++k;
                    g = generate_ws(a.n, std::max(2, k), 0.1, task_seed);
                } else {
                    g = generate_rg(a.n, rg_radius_for_mean_degree(a.n, pt.mean), task_seed);
                }
                const double eps = quantumness_uniform(giant_component(g));
                acc += eps;
                acc2 += eps * eps;
            }
            const double mean_eps = acc / a.seeds_per_point;
            pt.emp_mean = mean_eps;
            pt.emp_std = std::sqrt(std::max(0.0, acc2 / a.seeds_per_point - mean_eps * mean_eps));
            points[i] = pt;
        }
    };
    if (a.jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < a.jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::string csv =
        "mean_degree,epsilon_analytic,epsilon_empirical_mean,epsilon_empirical_std,n_seeds\n";
    for (const SweepPoint& pt : points) {
        csv += fmt(pt.mean) + ',';
        csv += std::isnan(pt.analytic) ? std::string() : fmt(pt.analytic);
        csv += ',' + fmt(pt.emp_mean) + ',' + fmt(pt.emp_std) + ',' +
               std::to_string(a.seeds_per_point) + '\n';
    }
    write_file(a.out_dir / "sweep.csv", csv);

    if ((a.model == "er" || a.model == "rg") && means.size() >= 4) {
        const PoissonFit fit = fit_poisson_quantumness(means);
        std::vector<double> emp(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) emp[i] = points[i].emp_mean;
        const PowerLawFit emp_fit = fit_power_law(means, emp);
        json j;
        j["analytic"] = {{"kappa1", fit.kappa1},
                         {"kappa2", fit.kappa2},
                         {"rms_log_residual", fit.rms_log_residual},
                         {"mean_min", fit.mean_min},
                         {"mean_max", fit.mean_max}};
        j["empirical"] = {{"kappa1", emp_fit.prefactor},
                          {"kappa2", -emp_fit.exponent},
                          {"rms_log_residual", emp_fit.rms_log_residual}};
        write_file(a.out_dir / "fit.json", j.dump(2) + "\n");
    }

    write_manifest(a.out_dir / "manifest.json", "sweep",
                   {{"model", a.model},
                    {"means", a.means},
                    {"seeds_per_point", a.seeds_per_point},
                    {"n", a.n},
                    {"seed", a.seed},
                    {"jobs", a.jobs}});
    std::cout << "wrote " << (a.out_dir / "sweep.csv").string() << " (" << points.size()
              << " points)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical vs quantum walk analysis on weighted networks"};
    app.set_version_flag("--version", QWALK_VERSION);
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "generate a network and write an edge list");
    cmd_gen->add_option("model", gen.model, "ba|er|ws|rg|star|ring")->required();
    cmd_gen->add_option("--n", gen.n, "node count");
    cmd_gen->add_option("--m", gen.m, "ba: edges per new node");
    cmd_gen->add_option("--p", gen.p, "er: edge probability");
    cmd_gen->add_option("--k", gen.k, "ws: ring neighbors (even)");
    cmd_gen->add_option("--beta", gen.beta, "ws: rewiring probability");
    cmd_gen->add_option("--radius", gen.radius, "rg: connection radius");
    cmd_gen->add_option("--mean-degree", gen.mean_degree, "er/rg: target mean degree");
    cmd_gen->add_option("--seed", gen.seed, "rng seed");
    cmd_gen->add_option("--out", gen.out, "output file name (default <model>.edges)");
    cmd_gen->add_option("--out-dir", gen.out_dir, "output directory");

    AnalyzeArgs an;
    auto* cmd_an = app.add_subcommand("analyze", "walk summary for a graph file");
    cmd_an->add_option("graph", an.graph_file, "edge list file")->required();
    cmd_an->add_option("--state", an.state, "uniform|node:<label>|file:<path>");
    cmd_an->add_option("--tol", an.tol, "degeneracy grouping tolerance (default auto)");
    cmd_an->add_flag("--strict", an.strict, "error on disconnected input");
    cmd_an->add_flag("--spectrum", an.spectrum, "also export spectrum.csv and partition.json");
    cmd_an->add_option("--format", an.format, "per-node table format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_an->add_option("--out-dir", an.out_dir, "output directory");

    EvolveArgs ev;
    auto* cmd_ev = app.add_subcommand("evolve", "finite-time averages against the projector result");
    cmd_ev->add_option("graph", ev.graph_file, "edge list file")->required();
    cmd_ev->add_option("--state", ev.state, "uniform|node:<label>|file:<path>");
    cmd_ev->add_option("--horizons", ev.horizons, "comma list of time horizons");
    cmd_ev->add_option("--samples", ev.samples, "time samples per horizon (>= 2)");
    cmd_ev->add_option("--tol", ev.tol, "degeneracy grouping tolerance");
    cmd_ev->add_flag("--strict", ev.strict, "error on disconnected input");
    cmd_ev->add_option("--out-dir", ev.out_dir, "output directory");

    OptimizeArgs op;
    auto* cmd_op = app.add_subcommand("optimize", "Monte Carlo weight optimization of quantumness");
    cmd_op->add_option("graph", op.graph_file, "edge list file")->required();
    cmd_op->add_option("--target-eps", op.target_eps, "target quantumness in (0,1)");
    cmd_op->add_option("--max-steps", op.max_steps, "step budget");
    cmd_op->add_option("--policy", op.policy, "greedy|always-accept");
    cmd_op->add_option("--seed", op.seed, "rng seed");
    cmd_op->add_option("--record-stride", op.record_stride, "record every k-th step");
    cmd_op->add_flag("--strict", op.strict, "error on disconnected input");
    cmd_op->add_option("--out-dir", op.out_dir, "output directory");

    SweepArgs sw;
    auto* cmd_sw = app.add_subcommand("sweep", "quantumness across a mean-degree grid");
    cmd_sw->add_option("--model", sw.model, "ba|er|ws|rg");
    cmd_sw->add_option("--means", sw.means, "grid: lo:hi (step 1) or comma list");
    cmd_sw->add_option("--seeds-per-point", sw.seeds_per_point, "realizations per grid point");
    cmd_sw->add_option("--n", sw.n, "node count");
    cmd_sw->add_option("--seed", sw.seed, "base rng seed");
    cmd_sw->add_option("--jobs", sw.jobs, "parallel workers over grid points");
    cmd_sw->add_option("--out-dir", sw.out_dir, "output directory");

    try {
        app.parse(argc, argv);
        if (cmd_gen->parsed()) return cmd_generate(gen);
        if (cmd_an->parsed()) return cmd_analyze(an);
        if (cmd_ev->parsed()) return cmd_evolve(ev);
        if (cmd_op->parsed()) return cmd_optimize(op);
        if (cmd_sw->parsed()) return cmd_sweep(sw);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        std::cerr << "error: E_USAGE: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: E_USAGE: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: E_DATA: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: E_DATA: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "error: E_NUMERICAL: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: E_NUMERICAL: " << e.what() << "\n";
        return 4;
    }
}
