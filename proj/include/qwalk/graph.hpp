#ifndef QWALK_GRAPH_HPP_
#define QWALK_GRAPH_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/rng.hpp"

namespace qwalk {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Weighted undirected network. The weight matrix is symmetric with an
/// exactly zero diagonal and non-negative entries; construction rejects
/// anything else. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// @param weights symmetric n x n matrix, zero diagonal, entries >= 0.
    /// @param labels original node identifiers; empty means "0".."n-1".
    explicit Graph(Eigen::MatrixXd weights, std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(weights_.rows()); }
    const Eigen::MatrixXd& weights() const { return weights_; }
    const std::vector<std::string>& labels() const { return labels_; }
    double weight(int i, int j) const { return weights_(i, j); }

    /// Index of the node carrying @p label, or -1.
    int find_label(std::string_view label) const;

    /// Edges as (u < v, weight) triples in ascending (u, v) order.
    std::vector<Edge> edges() const;
    long edge_count() const;
    double total_weight() const;

private:
    Eigen::MatrixXd weights_;
    std::vector<std::string> labels_;
};

/// Weighted degrees d_i = sum_j A_ij with their first moments.
struct DegreeVector {
    Eigen::VectorXd d;
    double mean_degree = 0.0;      // <d>
    double mean_root_degree = 0.0; // <sqrt(d)>
};

DegreeVector degrees(const Graph& g);

bool is_connected(const Graph& g);

/// Largest connected component, nodes relabeled contiguously with original
/// labels retained. Ties are broken by smallest original node index.
Graph giant_component(const Graph& g);

// --- ingestion / export ------------------------------------------------

/// Parse a line-oriented edge list: `u v` or `u v w` per line, `#` comments.
/// Node ids are arbitrary tokens, kept in order of first appearance.
/// Throws DataError (with line number) on malformed lines, non-positive
/// weights, duplicate edges or self-loops.
Graph from_edge_list(std::string_view text);

Graph load_edge_list(const std::filesystem::path& path);

/// Inverse of from_edge_list. Weights are printed with 17 significant
/// digits so binary64 values round-trip exactly; weight 1 is omitted.
std::string to_edge_list(const Graph& g);

void save_edge_list(const Graph& g, const std::filesystem::path& path);

// --- generators ---------------------------------------------------------
// All generators produce binary weights and are deterministic in the seed.

/// Barabasi-Albert preferential attachment, seeded with a complete graph
/// on m+1 nodes; every later node attaches m edges.
Graph generate_ba(int n, int m, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph generate_er(int n, double p, std::uint64_t seed);

/// Watts-Strogatz ring with k neighbors; each endpoint of each lattice edge
/// is rewired with probability beta to a uniformly random node (no
/// self-loops or duplicate edges). k must be even and < n.
Graph generate_ws(int n, int k, double beta, std::uint64_t seed);

/// Random geometric graph on the unit square (non-periodic).
Graph generate_rg(int n, double radius, std::uint64_t seed);

/// Radius giving expected bulk degree `mean_degree`: sqrt(<d>/(pi n)).
double rg_radius_for_mean_degree(int n, double mean_degree);

Graph make_star(int n);
Graph make_ring(int n);
Graph make_path(int n);
Graph make_complete(int n);

} // namespace qwalk

#endif // QWALK_GRAPH_HPP_
