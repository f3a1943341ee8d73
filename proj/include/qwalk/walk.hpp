#ifndef QWALK_WALK_HPP_
#define QWALK_WALK_HPP_

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

/// Initial walker state: either a pure state vector or a density matrix.
/// Real-valued states cover every computation here; complex arithmetic is
/// confined to finite_time_average.
class DensityState {
public:
    static DensityState pure(Eigen::VectorXd psi);
    static DensityState mixed(Eigen::MatrixXd rho);
    /// Even superposition |1>/sqrt(N).
    static DensityState uniform(int n);
    /// Walker localized on one node.
    static DensityState node(int n, int i);

    bool is_pure() const { return is_pure_; }
    int dim() const;
    const Eigen::VectorXd& vector() const;
    const Eigen::MatrixXd& matrix() const;

    /// <phi| rho |phi> for a unit vector phi.
    double overlap(const Eigen::VectorXd& phi) const;
    /// tr(op rho).
    double expectation(const Eigen::MatrixXd& op) const;
    /// True if this is numerically the uniform pure state.
    bool is_uniform() const;

private:
    DensityState() = default;
    bool is_pure_ = true;
    Eigen::VectorXd psi_;
    Eigen::MatrixXd rho_;
};

/// Probability distribution over nodes: non-negative, sums to 1.
struct Distribution {
    Eigen::VectorXd p;

    /// Validates and clamps entries in [-1e-12, 0) to zero; anything more
    /// negative, or a sum off from 1 by more than 1e-9, is an error.
    static Distribution from_vector(Eigen::VectorXd v);

    int size() const { return static_cast<int>(p.size()); }
    double operator[](int i) const { return p(i); }
};

/// Everything the long-time average of one walk yields.
struct WalkSummary {
    Distribution p_classical;                 // P_C
    Distribution p_quantum;                   // P_Q
    std::optional<Distribution> p_correction; // P~_Q, absent when eps == 0
    double quantumness = 0.0;                 // eps
    double energy = 0.0;                      // E = tr(H_Q rho)
    double gap = 0.0;                         // Delta
    std::optional<double> bound_ratio;        // E / (Delta * eps), eps > 0
    std::optional<double> entropy_bound;      // Shannon bound, uniform state only
};

/// Steady state of the classical walk: normalized degrees.
Distribution classical_stationary(const Graph& g);

/// Long-time average distribution of the unitary walk via eigenspace
/// projectors, decomposed into classical and quantum parts.
/// @param tol degeneracy grouping tolerance; negative means the default.
WalkSummary quantum_long_time_average(const Graph& g, const DensityState& rho0,
                                      double tol = -1.0);

/// Closed form for the uniform initial state: 1 - <sqrt(d)>^2 / <d>.
double quantumness_uniform(const Graph& g);

/// E = tr(H_Q rho).
double energy(const Graph& g, const DensityState& rho0);

/// Closed form of the uniform-state energy: 1 - (1/N) sum A_ij/sqrt(d_i d_j).
double energy_uniform_closed_form(const Graph& g);

/// Numerical average of the walker's node occupation over `samples` times
/// uniformly spanning [0, T]. Converges to the projector-formula P_Q.
Distribution finite_time_average(const Graph& g, const DensityState& rho0, double t_max,
                                 int samples);

} // namespace qwalk

#endif // QWALK_WALK_HPP_
