#ifndef QWALK_OPTIMIZER_HPP_
#define QWALK_OPTIMIZER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

enum class AcceptancePolicy { greedy, always_accept };

struct McConfig {
    double target_epsilon = 0.6;
    long max_steps = 200000;
    AcceptancePolicy policy = AcceptancePolicy::greedy;
    std::uint64_t seed = 0;
    long record_stride = 100;
};

struct TrajectoryPoint {
    long step = 0;
    double epsilon = 0.0;
    double entropy = 0.0; // Shannon entropy of the normalized degrees
};

enum class StopReason { target_reached, step_limit };

struct Trajectory {
    std::vector<TrajectoryPoint> samples;
    Graph final_graph;
    StopReason terminated_by = StopReason::step_limit;
    long steps_taken = 0;
    long accepted = 0;
};

/// One Monte Carlo move: a uniformly chosen existing edge has its weight
/// doubled or halved with equal probability. Throws on an edgeless graph.
Graph mc_step(const Graph& g, Rng& rng);

/// Iterates mc_step moves to drive the uniform-state quantumness towards
/// cfg.target_epsilon, evaluating eps through the O(n) degree closed form.
/// The greedy policy accepts a move only if eps strictly increases.
/// Weights are confined to [2^-60, 2^60]; moves past the clamp are redrawn.
Trajectory optimize_quantumness(const Graph& g, const McConfig& cfg);

/// CSV export: step, epsilon, shannon_entropy.
std::string trajectory_to_csv(const Trajectory& t);

} // namespace qwalk

#endif // QWALK_OPTIMIZER_HPP_
