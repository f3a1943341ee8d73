#include "qwalk/optimizer.hpp"

#include <cmath>
#include <cstdio>

#include "qwalk/errors.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kMinWeight = 0x1.0p-60;
constexpr double kMaxWeight = 0x1.0p60;

double pick_factor(Rng& rng) { return rng.uniform() < 0.5 ? 2.0 : 0.5; }

} // namespace

Graph mc_step(const Graph& g, Rng& rng) {
    const std::vector<Edge> edges = g.edges();
    if (edges.empty()) throw std::invalid_argument("mc_step requires at least one edge");
    const Edge& e = edges[rng.below(edges.size())];
    const double factor = pick_factor(rng);
    Eigen::MatrixXd w = g.weights();
    w(e.u, e.v) *= factor;
    w(e.v, e.u) = w(e.u, e.v);
    return Graph(std::move(w), g.labels());
}

Trajectory optimize_quantumness(const Graph& g, const McConfig& cfg) {
    if (cfg.target_epsilon <= 0.0 || cfg.target_epsilon >= 1.0)
        throw std::invalid_argument("optimize_quantumness: target must lie in (0, 1)");
    if (cfg.max_steps < 1 || cfg.record_stride < 1)
        throw std::invalid_argument("optimize_quantumness: max_steps and record_stride must be >= 1");
    if (!is_connected(g))
        throw std::invalid_argument("optimize_quantumness requires a connected graph");
    std::vector<Edge> edges = g.edges();
    if (edges.empty()) throw std::invalid_argument("optimize_quantumness requires edges");

    const int n = g.size();
    Eigen::VectorXd d = g.weights().rowwise().sum();
    Eigen::VectorXd root = d.array().sqrt();
    double sum_d = d.sum();
    double sum_root = root.sum();

    auto epsilon = [&] { return 1.0 - sum_root * sum_root / (n * sum_d); };
    auto entropy = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += d(i) * std::log(d(i));
        return std::log(sum_d) - s / sum_d;
    };

    Trajectory traj;
    Rng rng(cfg.seed);
    traj.samples.push_back({0, epsilon(), entropy()});

    long step = 0;
    bool reached = epsilon() >= cfg.target_epsilon;
    while (!reached && step < cfg.max_steps) {
        ++step;

        // Redraw proposals that would leave the weight clamp.
        std::size_t ei = 0;
        double factor = 1.0, new_w = 0.0;
        bool valid = false;
        for (int attempt = 0; attempt < 64 && !valid; ++attempt) {
            ei = rng.below(edges.size());
            factor = pick_factor(rng);
            new_w = edges[ei].weight * factor;
            valid = new_w >= kMinWeight && new_w <= kMaxWeight;
        }

        if (valid) {
            Edge& e = edges[ei];
            const double dw = e.weight * (factor - 1.0);
            const double du = d(e.u) + dw;
            const double dv = d(e.v) + dw;
            const double new_sum_d = sum_d + 2.0 * dw;
            const double ru = std::sqrt(du);
            const double rv = std::sqrt(dv);
            const double new_sum_root = sum_root - root(e.u) - root(e.v) + ru + rv;
            const double new_eps = 1.0 - new_sum_root * new_sum_root / (n * new_sum_d);

            const bool accept = cfg.policy == AcceptancePolicy::always_accept
                                    ? true
                                    : new_eps > epsilon();
            if (accept) {
                e.weight = new_w;
                d(e.u) = du;
                d(e.v) = dv;
                root(e.u) = ru;
                root(e.v) = rv;
                sum_d = new_sum_d;
                sum_root = new_sum_root;
                ++traj.accepted;
            }
        }

        reached = epsilon() >= cfg.target_epsilon;
        if (step % cfg.record_stride == 0 || reached || step == cfg.max_steps)
            traj.samples.push_back({step, epsilon(), entropy()});
    }

    traj.steps_taken = step;
    traj.terminated_by = reached ? StopReason::target_reached : StopReason::step_limit;

    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : edges) {
        w(e.u, e.v) = e.weight;
        w(e.v, e.u) = e.weight;
    }
    traj.final_graph = Graph(std::move(w), g.labels());
    return traj;
}

std::string trajectory_to_csv(const Trajectory& t) {
    std::string out = "step,epsilon,shannon_entropy\n";
    char row[96];
    for (const auto& s : t.samples) {
        std::snprintf(row, sizeof row, "%ld,%.12g,%.12g\n", s.step, s.epsilon, s.entropy);
        out += row;
    }
    return out;
}

} // namespace qwalk
