#include "core/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace hokm {

namespace {

Hypergraph::Edge sorted_edge(int i, int j) {
    if (i > j) std::swap(i, j);
    return {i, j};
}

Hypergraph::Triangle sorted_triangle(int i, int j, int k) {
    Hypergraph::Triangle t{i, j, k};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, std::vector<Triangle> triangles)
    : n_(n), edges_(std::move(edges)), triangles_(std::move(triangles)) {
    if (n_ < 1) throw Error(ErrorCode::invalid_argument, "node count must be positive");
    for (auto& e : edges_) {
        e = sorted_edge(e[0], e[1]);
        if (e[0] < 0 || e[1] >= n_)
            throw Error(ErrorCode::invalid_argument,
                        "edge index out of range: {" + std::to_string(e[0]) + "," +
                            std::to_string(e[1]) + "}");
        if (e[0] == e[1])
            throw Error(ErrorCode::invalid_argument, "self-pair {" + std::to_string(e[0]) + "}");
    }
    for (auto& t : triangles_) {
        t = sorted_triangle(t[0], t[1], t[2]);
        if (t[0] < 0 || t[2] >= n_)
            throw Error(ErrorCode::invalid_argument, "triangle index out of range");
        if (t[0] == t[1] || t[1] == t[2])
            throw Error(ErrorCode::invalid_argument,
                        "degenerate triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                            "," + std::to_string(t[2]) + "}");
    }
    std::sort(edges_.begin(), edges_.end());
    std::sort(triangles_.begin(), triangles_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error(ErrorCode::invalid_argument, "duplicate edge");
    if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
        throw Error(ErrorCode::invalid_argument, "duplicate triangle");
    build_incidence();
}

void Hypergraph::build_incidence() {
    edge_off_.assign(n_ + 1, 0);
    tri_off_.assign(n_ + 1, 0);
    for (const auto& e : edges_)
        for (int v : e) ++edge_off_[v + 1];
    for (const auto& t : triangles_)
        for (int v : t) ++tri_off_[v + 1];
    for (int i = 0; i < n_; ++i) {
        edge_off_[i + 1] += edge_off_[i];
        tri_off_[i + 1] += tri_off_[i];
    }
    edge_inc_.resize(edge_off_[n_]);
    tri_inc_.resize(tri_off_[n_]);
    std::vector<int> epos(edge_off_.begin(), edge_off_.end() - 1);
    std::vector<int> tpos(tri_off_.begin(), tri_off_.end() - 1);
    for (std::size_t idx = 0; idx < edges_.size(); ++idx)
        for (int v : edges_[idx]) edge_inc_[epos[v]++] = static_cast<int>(idx);
    for (std::size_t idx = 0; idx < triangles_.size(); ++idx)
        for (int v : triangles_[idx]) tri_inc_[tpos[v]++] = static_cast<int>(idx);
}

Hypergraph Hypergraph::all_to_all(int n) {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "all_to_all requires n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    std::vector<Triangle> triangles;
    triangles.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
            for (int k = j + 1; k < n; ++k) triangles.push_back({i, j, k});
        }
    return Hypergraph(n, std::move(edges), std::move(triangles));
}

Hypergraph Hypergraph::random_simplicial_complex(int n, double mean_degree,
                                                 double mean_hyperdegree, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::invalid_argument, "random_simplicial_complex requires n >= 3");
    const double k1 = mean_degree, k2 = mean_hyperdegree;
    const double p2 = 2.0 * k2 / (static_cast<double>(n - 1) * (n - 2));
    if (!(p2 >= 0.0 && p2 <= 1.0))
        throw Error(ErrorCode::invalid_argument,
                    "infeasible mean hyperdegree: triangle probability " + std::to_string(p2));
    // Probability that a given pair is covered by at least one sampled triangle.
    const double q = 1.0 - std::pow(1.0 - p2, n - 2);
    double p1 = 0.0;
    if (1.0 - q > 1e-15) {
        p1 = (k1 - (n - 1) * q) / ((n - 1) * (1.0 - q));
    } else if (std::abs(k1 - (n - 1)) > 1e-9) {
        throw Error(ErrorCode::invalid_argument,
                    "infeasible mean degree: closure already saturates all pairs");
    }
    if (!(p1 >= -1e-12 && p1 <= 1.0 + 1e-12))
        throw Error(ErrorCode::invalid_argument,
                    "infeasible (k1,k2): extra-link probability " + std::to_string(p1));
    p1 = std::clamp(p1, 0.0, 1.0);

    rng::SplitMix64 gen(rng::mix64(seed ^ 0x5C7331A5u));
    std::vector<Triangle> triangles;
    std::set<Edge> edge_set;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (gen.next_double() < p2) {
                    triangles.push_back({i, j, k});
                    edge_set.insert({i, j});
                    edge_set.insert({i, k});
                    edge_set.insert({j, k});
                }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double u = gen.next_double();
            if (u < p1) edge_set.insert({i, j});
        }
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    return Hypergraph(n, std::move(edges), std::move(triangles));
}

void Hypergraph::check_index(int i) const {
    if (i < 0 || i >= n_)
        throw Error(ErrorCode::invalid_argument, "node index " + std::to_string(i) +
                                                     " out of range [0," + std::to_string(n_) + ")");
}

int Hypergraph::degree(int i) const {
    check_index(i);
    return edge_off_[i + 1] - edge_off_[i];
}

int Hypergraph::hyperdegree(int i) const {
    check_index(i);
    return tri_off_[i + 1] - tri_off_[i];
}

int Hypergraph::isolated_count() const {
    int count = 0;
    for (int i = 0; i < n_; ++i)
        if (edge_off_[i + 1] == edge_off_[i] && tri_off_[i + 1] == tri_off_[i]) ++count;
    return count;
}

bool Hypergraph::has_edge(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return false;
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge(i, j));
}

bool Hypergraph::has_triangle(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j || j == k || i == k) return false;
    return std::binary_search(triangles_.begin(), triangles_.end(), sorted_triangle(i, j, k));
}

std::span<const int> Hypergraph::incident_edges(int i) const {
    check_index(i);
    return {edge_inc_.data() + edge_off_[i], static_cast<std::size_t>(edge_off_[i + 1] - edge_off_[i])};
}

std::span<const int> Hypergraph::incident_triangles(int i) const {
    check_index(i);
    return {tri_inc_.data() + tri_off_[i], static_cast<std::size_t>(tri_off_[i + 1] - tri_off_[i])};
}

}  // namespace hokm
