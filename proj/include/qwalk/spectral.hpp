#ifndef QWALK_SPECTRAL_HPP_
#define QWALK_SPECTRAL_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.hpp"

namespace qwalk {

enum class OperatorKind {
    laplacian,           // L = D - A, symmetric
    quantum_hamiltonian, // H_Q = D^{-1/2} L D^{-1/2}, symmetric
    classical_generator, // H_C = L D^{-1}, similar to H_Q but not symmetric
};

struct SymmetricOperator {
    Eigen::MatrixXd matrix;
    OperatorKind kind = OperatorKind::laplacian;

    bool is_symmetric_kind() const { return kind != OperatorKind::classical_generator; }
};

SymmetricOperator laplacian(const Graph& g);

/// H_Q = I - D^{-1/2} A D^{-1/2}, symmetrized exactly after construction.
/// Requires every node to have positive degree (run giant_component first).
SymmetricOperator quantum_hamiltonian(const Graph& g);

/// H_C = L D^{-1}; infinitesimal stochastic (columns sum to zero).
SymmetricOperator classical_generator(const Graph& g);

/// Full dense eigendecomposition: ascending eigenvalues, orthonormal
/// eigenvector columns, sign fixed so the first nonzero component of each
/// eigenvector is positive.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

/// Requires a symmetric operator kind. Throws NumericalError if the solver
/// fails to converge.
Spectrum eigendecompose(const SymmetricOperator& op);

struct EigenspaceGroup {
    double eigenvalue = 0.0; // representative (mean of members)
    std::vector<int> members;
};

struct EigenspacePartition {
    std::vector<EigenspaceGroup> groups;
    double tolerance = 0.0;
};

/// Greedy gap grouping of an ascending spectrum: a new group starts
/// whenever consecutive eigenvalues differ by more than tol.
EigenspacePartition group_eigenspaces(const Spectrum& s, double tol);

/// Default degeneracy tolerance: 1e-8 * max(1, lambda_max).
double default_group_tolerance(const Spectrum& s);

/// Ground state of H_Q for a connected graph: (phi_0)_i = sqrt(d_i / sum d).
Eigen::VectorXd ground_state(const Graph& g);

/// Smallest nonzero eigenvalue (representative of group 1). Throws if the
/// ground group is degenerate, which signals a disconnected graph.
double spectral_gap(const EigenspacePartition& p);

/// Sorted real parts of a general (possibly non-symmetric) real matrix's
/// eigenvalues. Independent route used to cross-check H_C against H_Q.
Eigen::VectorXd general_eigenvalues(const Eigen::MatrixXd& m);

/// CSV export: one row per eigenpair (index, eigenvalue, components...).
std::string spectrum_to_csv(const Spectrum& s);

/// JSON export: groups with representative eigenvalue and member indices.
std::string partition_to_json(const EigenspacePartition& p);

} // namespace qwalk

#endif // QWALK_SPECTRAL_HPP_
