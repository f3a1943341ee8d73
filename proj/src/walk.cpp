#include "qwalk/walk.hpp"

#include <cmath>
#include <complex>

#include "qwalk/ensembles.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

// --- DensityState ----------------------------------------------------------

DensityState DensityState::pure(Eigen::VectorXd psi) {
    if (psi.size() < 1) throw std::invalid_argument("pure state must be non-empty");
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("pure state must be normalized to unit length");
    DensityState s;
    s.is_pure_ = true;
    s.psi_ = std::move(psi);
    return s;
}

DensityState DensityState::mixed(Eigen::MatrixXd rho) {
    const auto n = rho.rows();
    if (n < 1 || rho.cols() != n)
        throw std::invalid_argument("density matrix must be square");
    if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("density matrix must be symmetric");
    if (std::abs(rho.trace() - 1.0) > 1e-12)
        throw std::invalid_argument("density matrix must have unit trace");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigensolver failed on density matrix");
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density matrix must be positive semidefinite");
    DensityState s;
    s.is_pure_ = false;
    s.rho_ = std::move(rho);
    return s;
}

DensityState DensityState::uniform(int n) {
    if (n < 1) throw std::invalid_argument("uniform state needs n >= 1");
    return pure(Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

DensityState DensityState::node(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("node state index out of range");
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(n);
    psi(i) = 1.0;
    return pure(std::move(psi));
}

int DensityState::dim() const {
    return is_pure_ ? static_cast<int>(psi_.size()) : static_cast<int>(rho_.rows());
}

const Eigen::VectorXd& DensityState::vector() const {
    if (!is_pure_) throw std::logic_error("state is mixed, no state vector");
    return psi_;
}

const Eigen::MatrixXd& DensityState::matrix() const {
    if (is_pure_) throw std::logic_error("state is pure, no density matrix");
    return rho_;
}

double DensityState::overlap(const Eigen::VectorXd& phi) const {
    if (is_pure_) {
        const double a = phi.dot(psi_);
        return a * a;
    }
    return phi.dot(rho_ * phi);
}

double DensityState::expectation(const Eigen::MatrixXd& op) const {
    if (is_pure_) return psi_.dot(op * psi_);
    return (op * rho_).trace();
}

bool DensityState::is_uniform() const {
    if (!is_pure_) return false;
    const double u = 1.0 / std::sqrt(static_cast<double>(psi_.size()));
    return (psi_.array() - u).abs().maxCoeff() <= 1e-12;
}

// --- Distribution -----------------------------------------------------------

Distribution Distribution::from_vector(Eigen::VectorXd v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) < 0.0) {
            if (v(i) < -1e-12)
                throw NumericalError("distribution entry " + std::to_string(i) +
                                     " is negative: " + std::to_string(v(i)));
            v(i) = 0.0;
        }
    }
    if (std::abs(v.sum() - 1.0) > 1e-9)
        throw NumericalError("distribution does not sum to 1: " + std::to_string(v.sum()));
    return Distribution{std::move(v)};
}

// --- operations ---------------------------------------------------------------

Distribution classical_stationary(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("classical_stationary requires a connected graph");
    const Eigen::VectorXd d = g.weights().rowwise().sum();
    return Distribution::from_vector(d / d.sum());
}

namespace {

void require_walk_input(const Graph& g, const DensityState& rho0) {
    if (g.size() < 2)
        throw std::invalid_argument("walk operations need at least 2 nodes");
    if (rho0.dim() != g.size())
        throw std::invalid_argument("state dimension " + std::to_string(rho0.dim()) +
                                    " does not match graph size " + std::to_string(g.size()));
    if (!is_connected(g))
        throw std::invalid_argument("walk operations require a connected graph");
}

/// diag contribution of Pi rho Pi for the eigenvector block cols(group).
Eigen::VectorXd projected_occupation(const Eigen::MatrixXd& vectors,
                                     const std::vector<int>& members,
                                     const DensityState& rho0) {
    const auto n = vectors.rows();
    const auto k = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXd block(n, k);
    for (Eigen::Index c = 0; c < k; ++c)
        block.col(c) = vectors.col(members[static_cast<std::size_t>(c)]);
    if (rho0.is_pure()) {
        const Eigen::VectorXd proj = block * (block.transpose() * rho0.vector());
        return proj.array().square();
    }
    // diag(B (B^T rho B) B^T) = rowwise sum of (B M) .* B
    const Eigen::MatrixXd m = block.transpose() * rho0.matrix() * block;
    return ((block * m).array() * block.array()).rowwise().sum();
}

} // namespace

WalkSummary quantum_long_time_average(const Graph& g, const DensityState& rho0, double tol) {
    require_walk_input(g, rho0);

    const SymmetricOperator hq = quantum_hamiltonian(g);
    const Spectrum spec = eigendecompose(hq);
    if (tol < 0.0) tol = default_group_tolerance(spec);
    const EigenspacePartition part = group_eigenspaces(spec, tol);
    if (part.groups.front().members.size() != 1)
        throw NumericalError("degenerate ground eigenspace on a connected graph");

    const int n = g.size();
    Eigen::VectorXd ground_term = projected_occupation(spec.eigenvectors,
                                                       part.groups.front().members, rho0);
    Eigen::VectorXd rest = Eigen::VectorXd::Zero(n);
    for (std::size_t j = 1; j < part.groups.size(); ++j)
        rest += projected_occupation(spec.eigenvectors, part.groups[j].members, rho0);

    WalkSummary out;
    out.p_classical = classical_stationary(g);
    out.p_quantum = Distribution::from_vector(ground_term + rest);

    double eps = 1.0 - rho0.overlap(spec.eigenvectors.col(0));
    eps = std::min(1.0, std::max(0.0, eps));
    out.quantumness = eps;

    out.energy = rho0.expectation(hq.matrix);
    if (out.energy < 0.0) {
        if (out.energy < -1e-10) throw NumericalError("negative walk energy");
        out.energy = 0.0;
    }
    out.gap = spectral_gap(part);

    if (eps > 1e-12) {
        out.p_correction = Distribution::from_vector(rest / eps);
        out.bound_ratio = out.energy / (out.gap * eps);
    }
    if (rho0.is_uniform()) out.entropy_bound = entropy_bound(g);
    return out;
}

double quantumness_uniform(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("quantumness_uniform requires a connected graph");
    const DegreeVector dv = degrees(g);
    return 1.0 - dv.mean_root_degree * dv.mean_root_degree / dv.mean_degree;
}

double energy(const Graph& g, const DensityState& rho0) {
    if (rho0.dim() != g.size())
        throw std::invalid_argument("state dimension does not match graph size");
    double e = rho0.expectation(quantum_hamiltonian(g).matrix);
    if (e < 0.0) {
        if (e < -1e-10) throw NumericalError("negative walk energy");
        e = 0.0;
    }
    return e;
}

double energy_uniform_closed_form(const Graph& g) {
    const Eigen::VectorXd d = g.weights().rowwise().sum();
    for (Eigen::Index i = 0; i < d.size(); ++i)
        if (d(i) <= 0.0)
            throw std::invalid_argument("zero-degree node; extract the giant component first");
    const Eigen::VectorXd inv_sqrt = d.array().rsqrt();
    const double coupling =
        (inv_sqrt.asDiagonal() * g.weights() * inv_sqrt.asDiagonal()).sum();
    return 1.0 - coupling / static_cast<double>(g.size());
}

Distribution finite_time_average(const Graph& g, const DensityState& rho0, double t_max,
                                 int samples) {
    require_walk_input(g, rho0);
    if (t_max <= 0.0) throw std::invalid_argument("finite_time_average: T must be positive");
    if (samples < 2) throw std::invalid_argument("finite_time_average: need samples >= 2");

    const Spectrum spec = eigendecompose(quantum_hamiltonian(g));
    const int n = g.size();

    // Decompose the state into pure components; evolve each in the eigenbasis.
    std::vector<std::pair<double, Eigen::VectorXd>> components;
    if (rho0.is_pure()) {
        components.emplace_back(1.0, spec.eigenvectors.transpose() * rho0.vector());
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho0.matrix());
        if (solver.info() != Eigen::Success)
            throw NumericalError("eigensolver failed on density matrix");
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
            const double w = solver.eigenvalues()(k);
            if (w > 1e-14)
                components.emplace_back(w, spec.eigenvectors.transpose() *
                                               solver.eigenvectors().col(k));
        }
    }

    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
    Eigen::VectorXcd phase(n);
    for (int s = 0; s < samples; ++s) {
        const double t = t_max * static_cast<double>(s) / static_cast<double>(samples - 1);
        for (Eigen::Index k = 0; k < n; ++k)
            phase(k) = std::polar(1.0, -spec.eigenvalues(k) * t);
        for (const auto& [w, coeffs] : components) {
            const Eigen::VectorXcd evolved =
                spec.eigenvectors * (phase.array() * coeffs.cast<std::complex<double>>().array())
                                        .matrix();
            acc += w * evolved.cwiseAbs2();
        }
    }
    return Distribution::from_vector(acc / static_cast<double>(samples));
}

} // namespace qwalk
