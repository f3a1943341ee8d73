#include "qwalk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qwalk/errors.hpp"

namespace qwalk {

Graph::Graph(Eigen::MatrixXd weights, std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
    const auto n = weights_.rows();
    if (n < 1 || weights_.cols() != n)
        throw std::invalid_argument("graph: weight matrix must be square and non-empty");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (weights_(i, i) != 0.0)
            throw std::invalid_argument("graph: nonzero diagonal at node " + std::to_string(i));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double w = weights_(i, j);
            if (!std::isfinite(w) || w < 0.0)
                throw std::invalid_argument("graph: invalid weight at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            if (w != weights_(j, i))
                throw std::invalid_argument("graph: asymmetric weights at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
        }
    }
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("graph: label count does not match node count");
    }
}

int Graph::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (weights_(i, j) > 0.0) out.push_back({i, j, weights_(i, j)});
    return out;
}

long Graph::edge_count() const {
    long m = 0;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (weights_(i, j) > 0.0) ++m;
    return m;
}

double Graph::total_weight() const {
    return weights_.sum() / 2.0;
}

DegreeVector degrees(const Graph& g) {
    DegreeVector dv;
    dv.d = g.weights().rowwise().sum();
    const double n = static_cast<double>(g.size());
    dv.mean_degree = dv.d.sum() / n;
    dv.mean_root_degree = dv.d.array().sqrt().sum() / n;
    return dv;
}

namespace {

std::vector<int> component_of(const Graph& g, int start, std::vector<char>& seen) {
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    const auto& w = g.weights();
    const int n = g.size();
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int v = 0; v < n; ++v) {
            if (!seen[static_cast<std::size_t>(v)] && w(u, v) > 0.0) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
        }
    }
    return comp;
}

} // namespace

bool is_connected(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    return static_cast<int>(component_of(g, 0, seen).size()) == g.size();
}

Graph giant_component(const Graph& g) {
    const int n = g.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        auto comp = component_of(g, s, seen);
        if (comp.size() > best.size()) best = std::move(comp);
    }
    std::sort(best.begin(), best.end());
    if (static_cast<int>(best.size()) == n) return g;

    const auto k = static_cast<Eigen::Index>(best.size());
    Eigen::MatrixXd w(k, k);
    std::vector<std::string> labels;
    labels.reserve(best.size());
    for (Eigen::Index i = 0; i < k; ++i) {
        labels.push_back(g.labels()[static_cast<std::size_t>(best[static_cast<std::size_t>(i)])]);
        for (Eigen::Index j = 0; j < k; ++j)
            w(i, j) = g.weights()(best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)]);
    }
    return Graph(std::move(w), std::move(labels));
}

// --- edge list ingestion -------------------------------------------------

namespace {

struct ParsedEdge {
    std::string u, v;
    double w;
};

double parse_weight(std::string_view tok, long line_no) {
    double w = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, w);
    if (ec != std::errc() || ptr != last)
        throw DataError("line " + std::to_string(line_no) + ": malformed weight '" +
                        std::string(tok) + "'");
    return w;
}

} // namespace

Graph from_edge_list(std::string_view text) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<std::tuple<int, int, double>> edges;
    std::set<std::pair<int, int>> seen_edges;

    auto node_index = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(labels.size());
        index.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    long line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::string> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) toks.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3)
            throw DataError("line " + std::to_string(line_no) + ": expected 'u v' or 'u v w'");

        if (toks[0] == toks[1])
            throw DataError("line " + std::to_string(line_no) + ": self-loop on '" + toks[0] + "'");
        const double w = toks.size() == 3 ? parse_weight(toks[2], line_no) : 1.0;
        if (w <= 0.0 || !std::isfinite(w))
            throw DataError("line " + std::to_string(line_no) + ": weight must be positive");

        const int a = node_index(toks[0]);
        const int b = node_index(toks[1]);
        const auto key = std::minmax(a, b);
        if (!seen_edges.insert(key).second)
            throw DataError("line " + std::to_string(line_no) + ": duplicate edge '" + toks[0] +
                            " " + toks[1] + "'");
        edges.emplace_back(a, b, w);
    }

    if (labels.empty()) throw DataError("edge list contains no edges");

    const auto n = static_cast<Eigen::Index>(labels.size());
    Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [a, b, w] : edges) {
        weights(a, b) = w;
        weights(b, a) = w;
    }
    return Graph(std::move(weights), std::move(labels));
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    char num[64];
    for (const Edge& e : g.edges()) {
        out += g.labels()[static_cast<std::size_t>(e.u)];
        out += ' ';
        out += g.labels()[static_cast<std::size_t>(e.v)];
        if (e.weight != 1.0) {
            std::snprintf(num, sizeof num, " %.17g", e.weight);
            out += num;
        }
        out += '\n';
    }
    return out;
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << to_edge_list(g);
}

// --- generators -----------------------------------------------------------

namespace {

Graph from_binary_edges(int n, const std::set<std::pair<int, int>>& edges) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [a, b] : edges) {
        w(a, b) = 1.0;
        w(b, a) = 1.0;
    }
    return Graph(std::move(w));
}

} // namespace

Graph generate_ba(int n, int m, std::uint64_t seed) {
    if (m < 1 || n <= m)
        throw std::invalid_argument("generate_ba: need n > m >= 1");
    Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    std::vector<int> endpoints; // one entry per half-edge, drives attachment
    for (int i = 0; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            edges.emplace(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    std::vector<int> targets;
    for (int v = m + 1; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            const int t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        std::sort(targets.begin(), targets.end());
        for (const int t : targets) {
            edges.emplace(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return from_binary_edges(n, edges);
}

Graph generate_er(int n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_er: need n >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_er: p must lie in [0, 1]");
    Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace(i, j);
    return from_binary_edges(n, edges);
}

Graph generate_ws(int n, int k, double beta, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("generate_ws: need n >= 3");
    if (k < 2 || k % 2 != 0 || k >= n)
        throw std::invalid_argument("generate_ws: k must be even, >= 2 and < n");
    if (beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("generate_ws: beta must lie in [0, 1]");
    Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> ring;
    for (int j = 1; j <= k / 2; ++j) {
        for (int u = 0; u < n; ++u) {
            const int v = (u + j) % n;
            auto e = std::minmax(u, v);
            edges.emplace(e);
            ring.push_back(e);
        }
    }
    for (auto cur : ring) {
        for (int side = 0; side < 2; ++side) {
            if (rng.uniform() >= beta) continue;
            const int anchor = side == 0 ? cur.second : cur.first;
            for (int attempt = 0; attempt < 200; ++attempt) {
                const int w = rng.below_int(n);
                if (w == anchor) continue;
                const auto candidate = std::minmax(anchor, w);
                if (edges.count(candidate)) continue;
                edges.erase(cur);
                edges.insert(candidate);
                cur = candidate;
                break;
            }
        }
    }
    return from_binary_edges(n, edges);
}

Graph generate_rg(int n, double radius, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_rg: need n >= 2");
    if (radius <= 0.0) throw std::invalid_argument("generate_rg: radius must be positive");
    Rng rng(seed);
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = rng.uniform();
        y[static_cast<std::size_t>(i)] = rng.uniform();
    }
    const double r2 = radius * radius;
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            const double dy = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
            if (dx * dx + dy * dy <= r2) edges.emplace(i, j);
        }
    }
    return from_binary_edges(n, edges);
}

double rg_radius_for_mean_degree(int n, double mean_degree) {
    if (n < 2 || mean_degree <= 0.0)
        throw std::invalid_argument("rg_radius_for_mean_degree: invalid parameters");
    return std::sqrt(mean_degree / (M_PI * n));
}

Graph make_star(int n) {
    if (n < 2) throw std::invalid_argument("make_star: need n >= 2");
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        w(0, i) = 1.0;
        w(i, 0) = 1.0;
    }
    return Graph(std::move(w));
}

Graph make_ring(int n) {
    if (n < 3) throw std::invalid_argument("make_ring: need n >= 3");
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        w(i, j) = 1.0;
        w(j, i) = 1.0;
    }
    return Graph(std::move(w));
}

Graph make_path(int n) {
    if (n < 2) throw std::invalid_argument("make_path: need n >= 2");
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        w(i, i + 1) = 1.0;
        w(i + 1, i) = 1.0;
    }
    return Graph(std::move(w));
}

Graph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("make_complete: need n >= 2");
    Eigen::MatrixXd w = Eigen::MatrixXd::Ones(n, n);
    w.diagonal().setZero();
    return Graph(std::move(w));
}

} // namespace qwalk
