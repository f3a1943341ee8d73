#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

Eigen::VectorXd positive_degrees(const Graph& g) {
    if (g.size() < 2)
        throw std::invalid_argument("operator construction needs at least 2 nodes");
    Eigen::VectorXd d = g.weights().rowwise().sum();
    for (Eigen::Index i = 0; i < d.size(); ++i)
        if (d(i) <= 0.0)
            throw std::invalid_argument("node " + std::to_string(i) +
                                        " has zero degree; extract the giant component first");
    return d;
}

} // namespace

SymmetricOperator laplacian(const Graph& g) {
    Eigen::VectorXd d = g.weights().rowwise().sum();
    Eigen::MatrixXd l = -g.weights();
    l.diagonal() = d;
    return {std::move(l), OperatorKind::laplacian};
}

SymmetricOperator quantum_hamiltonian(const Graph& g) {
    const Eigen::VectorXd d = positive_degrees(g);
    const Eigen::VectorXd inv_sqrt = d.array().rsqrt();
    Eigen::MatrixXd h = -(inv_sqrt.asDiagonal() * g.weights() * inv_sqrt.asDiagonal());
    h.diagonal().array() += 1.0;
    h = ((h + h.transpose()) / 2.0).eval(); // symmetrize exactly
    return {std::move(h), OperatorKind::quantum_hamiltonian};
}

SymmetricOperator classical_generator(const Graph& g) {
    const Eigen::VectorXd d = positive_degrees(g);
    Eigen::MatrixXd l = laplacian(g).matrix;
    Eigen::MatrixXd hc = l * d.cwiseInverse().asDiagonal();
    return {std::move(hc), OperatorKind::classical_generator};
}

Spectrum eigendecompose(const SymmetricOperator& op) {
    if (!op.is_symmetric_kind())
        throw std::invalid_argument("eigendecompose requires a symmetric operator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver failed to converge");

    Spectrum s{solver.eigenvalues(), solver.eigenvectors()};

    // L and H_Q are positive semidefinite; clamp round-off negatives to 0.
    const double scale = std::max(1.0, std::abs(s.eigenvalues(s.eigenvalues.size() - 1)));
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (s.eigenvalues(i) < 0.0) {
            if (s.eigenvalues(i) < -1e-10 * scale)
                throw NumericalError("negative eigenvalue beyond tolerance: " +
                                     std::to_string(s.eigenvalues(i)));
            s.eigenvalues(i) = 0.0;
        }
    }

    // Sign convention: first component of magnitude > 1e-12 is positive.
    for (Eigen::Index k = 0; k < s.eigenvectors.cols(); ++k) {
        for (Eigen::Index i = 0; i < s.eigenvectors.rows(); ++i) {
            const double x = s.eigenvectors(i, k);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0) s.eigenvectors.col(k) = -s.eigenvectors.col(k);
                break;
            }
        }
    }
    return s;
}

EigenspacePartition group_eigenspaces(const Spectrum& s, double tol) {
    EigenspacePartition part;
    part.tolerance = tol;
    const auto n = s.eigenvalues.size();
    if (n == 0) return part;

    EigenspaceGroup cur;
    cur.members.push_back(0);
    for (Eigen::Index k = 1; k < n; ++k) {
        if (s.eigenvalues(k) - s.eigenvalues(k - 1) > tol) {
            part.groups.push_back(std::move(cur));
            cur = EigenspaceGroup{};
        }
        cur.members.push_back(static_cast<int>(k));
    }
    part.groups.push_back(std::move(cur));

    for (auto& grp : part.groups) {
        double sum = 0.0;
        for (const int k : grp.members) sum += s.eigenvalues(k);
        grp.eigenvalue = sum / static_cast<double>(grp.members.size());
    }
    return part;
}

double default_group_tolerance(const Spectrum& s) {
    const double lmax = s.eigenvalues.size() ? s.eigenvalues(s.eigenvalues.size() - 1) : 0.0;
    return 1e-8 * std::max(1.0, lmax);
}

Eigen::VectorXd ground_state(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("ground_state requires a connected graph");
    const Eigen::VectorXd d = positive_degrees(g);
    return (d / d.sum()).array().sqrt();
}

double spectral_gap(const EigenspacePartition& p) {
    if (p.groups.size() < 2)
        throw std::invalid_argument("spectral_gap: spectrum has a single eigenspace");
    if (p.groups.front().members.size() != 1)
        throw std::invalid_argument(
            "spectral_gap: degenerate ground eigenspace (graph is disconnected)");
    return p.groups[1].eigenvalue;
}

Eigen::VectorXd general_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("general eigensolver failed to converge");
    Eigen::VectorXd re = solver.eigenvalues().real();
    std::sort(re.data(), re.data() + re.size());
    return re;
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::string out = "index,eigenvalue";
    for (Eigen::Index i = 0; i < s.eigenvectors.rows(); ++i)
        out += ",c" + std::to_string(i);
    out += '\n';
    char num[48];
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        out += std::to_string(k);
        std::snprintf(num, sizeof num, ",%.12g", s.eigenvalues(k));
        out += num;
        for (Eigen::Index i = 0; i < s.eigenvectors.rows(); ++i) {
            std::snprintf(num, sizeof num, ",%.12g", s.eigenvectors(i, k));
            out += num;
        }
        out += '\n';
    }
    return out;
}

std::string partition_to_json(const EigenspacePartition& p) {
    nlohmann::json j;
    j["tolerance"] = p.tolerance;
    j["groups"] = nlohmann::json::array();
    for (const auto& g : p.groups)
        j["groups"].push_back({{"eigenvalue", g.eigenvalue}, {"members", g.members}});
    return j.dump(2) + "\n";
}

} // namespace qwalk
