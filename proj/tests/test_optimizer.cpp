#include <doctest.h>

#include <cmath>

#include "qwalk/ensembles.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/optimizer.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

TEST_CASE("mc_step changes exactly one weight by a factor of two") {
    const Graph g = from_edge_list("a b 0.5\nb c\nc d 4");
    for (std::uint64_t s = 0; s < 12; ++s) {
        Rng rng(s);
        const Graph stepped = mc_step(g, rng);
        int changed = 0;
        for (const Edge& e : g.edges()) {
            const double ratio = stepped.weight(e.u, e.v) / e.weight;
            if (ratio != 1.0) {
                ++changed;
                CHECK((ratio == 2.0 || ratio == 0.5));
            }
        }
        CHECK(changed == 1);
        CHECK(stepped.edge_count() == g.edge_count());
        CHECK(stepped.weights() == stepped.weights().transpose().eval());
    }
}

TEST_CASE("mc_step on the path graph matches the degree closed form") {
    const Graph p3 = make_path(3);
    bool found = false;
    for (std::uint64_t s = 0; s < 64 && !found; ++s) {
        Rng rng(s);
        const Graph stepped = mc_step(p3, rng);
        if (stepped.weight(0, 1) == 2.0) {
            found = true;
            const double want =
                1.0 - std::pow((std::sqrt(2.0) + std::sqrt(3.0) + 1.0) / 3.0, 2) / 2.0;
            CHECK(quantumness_uniform(stepped) == doctest::Approx(want).epsilon(1e-12));
            // same value through the full spectral route
            const WalkSummary ws =
                quantum_long_time_average(stepped, DensityState::uniform(3));
            CHECK(std::abs(ws.quantumness - want) <= 1e-10);
        }
    }
    CHECK(found);
}

TEST_CASE("mc_step requires an edge") {
    Eigen::MatrixXd empty = Eigen::MatrixXd::Zero(2, 2);
    Rng rng(0);
    CHECK_THROWS_AS(mc_step(Graph(empty), rng), std::invalid_argument);
}

TEST_CASE("greedy optimization leaves a regular ring immediately") {
    McConfig cfg;
    cfg.target_epsilon = 0.01;
    cfg.max_steps = 20000;
    cfg.seed = 3;
    cfg.record_stride = 50;
    const Trajectory t = optimize_quantumness(make_ring(40), cfg);
    CHECK(t.terminated_by == StopReason::target_reached);
    CHECK(t.samples.back().epsilon >= 0.01);
    CHECK(t.samples.front().epsilon == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("greedy trajectories are monotone and respect the entropy bound") {
    const Graph g = giant_component(generate_ba(200, 3, 11));
    McConfig cfg;
    cfg.target_epsilon = 0.35;
    cfg.max_steps = 100000;
    cfg.seed = 5;
    cfg.record_stride = 100;
    const Trajectory t = optimize_quantumness(g, cfg);
    REQUIRE(t.terminated_by == StopReason::target_reached);
    const double n = g.size();
    for (std::size_t i = 1; i < t.samples.size(); ++i) {
        CHECK(t.samples[i].epsilon >= t.samples[i - 1].epsilon);
        CHECK(t.samples[i].step > t.samples[i - 1].step);
    }
    for (const auto& s : t.samples)
        CHECK(s.epsilon <= 1.0 - std::exp(s.entropy) / n + 1e-12);

    SUBCASE("entropy trends downward overall") {
        CHECK(t.samples.back().entropy < t.samples.front().entropy);
        // crude trend check: most adjacent recorded moves do not raise H1
        int down = 0, up = 0;
        for (std::size_t i = 1; i < t.samples.size(); ++i)
            (t.samples[i].entropy <= t.samples[i - 1].entropy ? down : up)++;
        CHECK(down > up);
    }

    SUBCASE("closed-form epsilon matches the spectral value on the final graph") {
        const WalkSummary ws =
            quantum_long_time_average(t.final_graph, DensityState::uniform(g.size()));
        CHECK(std::abs(t.samples.back().epsilon - ws.quantumness) <= 1e-10);
        CHECK(std::abs(quantumness_uniform(t.final_graph) - t.samples.back().epsilon) <=
              1e-10);
    }
}

TEST_CASE("degree closed form tracks the eigensolver along a run") {
    // restart the chain every 1000 steps and compare both epsilon routes
    Graph g = giant_component(generate_ba(120, 3, 6));
    for (int segment = 0; segment < 4; ++segment) {
        McConfig cfg;
        cfg.target_epsilon = 0.9;
        cfg.max_steps = 1000;
        cfg.seed = 100 + static_cast<std::uint64_t>(segment);
        cfg.record_stride = 1000;
        const Trajectory t = optimize_quantumness(g, cfg);
        g = t.final_graph;
        const WalkSummary ws = quantum_long_time_average(g, DensityState::uniform(g.size()));
        CHECK(std::abs(t.samples.back().epsilon - ws.quantumness) <= 1e-10);
    }
}

TEST_CASE("optimization is deterministic in the config") {
    const Graph g = giant_component(generate_ba(80, 2, 2));
    McConfig cfg;
    cfg.target_epsilon = 0.3;
    cfg.max_steps = 30000;
    cfg.seed = 17;
    cfg.record_stride = 25;
    const Trajectory a = optimize_quantumness(g, cfg);
    const Trajectory b = optimize_quantumness(g, cfg);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].step == b.samples[i].step);
        CHECK(a.samples[i].epsilon == b.samples[i].epsilon);
        CHECK(a.samples[i].entropy == b.samples[i].entropy);
    }
    CHECK(a.final_graph.weights() == b.final_graph.weights());
    CHECK(a.accepted == b.accepted);
}

TEST_CASE("step limit is reported honestly") {
    McConfig cfg;
    cfg.target_epsilon = 0.999;
    cfg.max_steps = 500;
    cfg.seed = 1;
    cfg.record_stride = 100;
    const Trajectory t = optimize_quantumness(make_star(20), cfg);
    CHECK(t.terminated_by == StopReason::step_limit);
    CHECK(t.steps_taken == 500);
    CHECK(t.samples.back().step == 500);
}

TEST_CASE("record stride controls the sampling grid") {
    McConfig cfg;
    cfg.target_epsilon = 0.9; // unreachable in this budget
    cfg.max_steps = 1000;
    cfg.seed = 9;
    cfg.record_stride = 250;
    const Trajectory t = optimize_quantumness(make_star(10), cfg);
    REQUIRE(t.samples.size() == 5);
    for (std::size_t i = 0; i < t.samples.size(); ++i)
        CHECK(t.samples[i].step == static_cast<long>(250 * i));
}

TEST_CASE("weights stay inside the clamp under always-accept") {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(3, 3);
    w(0, 1) = w(1, 0) = 0x1.0p-58; // two halvings away from the floor
    w(1, 2) = w(2, 1) = 0x1.0p58;
    McConfig cfg;
    cfg.target_epsilon = 0.99;
    cfg.max_steps = 5000;
    cfg.policy = AcceptancePolicy::always_accept;
    cfg.seed = 4;
    cfg.record_stride = 1000;
    const Trajectory t = optimize_quantumness(Graph(w), cfg);
    for (const Edge& e : t.final_graph.edges()) {
        CHECK(e.weight >= 0x1.0p-60);
        CHECK(e.weight <= 0x1.0p60);
    }
}

TEST_CASE("invalid configurations are rejected") {
    McConfig cfg;
    cfg.target_epsilon = 1.5;
    CHECK_THROWS_AS(optimize_quantumness(make_ring(5), cfg), std::invalid_argument);
    cfg.target_epsilon = 0.5;
    cfg.max_steps = 0;
    CHECK_THROWS_AS(optimize_quantumness(make_ring(5), cfg), std::invalid_argument);
}

TEST_CASE("trajectory CSV export") {
    McConfig cfg;
    cfg.target_epsilon = 0.02;
    cfg.max_steps = 2000;
    cfg.seed = 8;
    cfg.record_stride = 10;
    const Trajectory t = optimize_quantumness(make_star(12), cfg);
    const std::string csv = trajectory_to_csv(t);
    CHECK(csv.find("step,epsilon,shannon_entropy\n") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long>(t.samples.size()) + 1);
}
