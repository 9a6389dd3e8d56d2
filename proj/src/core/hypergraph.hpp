#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace hokm {

/// Undirected coupling structure: a node set plus an edge set (pairwise
/// adjacency A) and a triangle set (triadic adjacency B). Simplices are stored
/// sparsely as sorted index lists; per-node incidence lists are precomputed so
/// the dynamics kernels iterate in O(degree). Immutable after construction and
/// safe to share read-only across threads.
class Hypergraph {
public:
    using Edge = std::array<int, 2>;      // ascending
    using Triangle = std::array<int, 3>;  // ascending

    /// Validates, normalizes (sorts each simplex and the lists) and rejects
    /// duplicates, self-pairs and degenerate triples.
    Hypergraph(int n, std::vector<Edge> edges, std::vector<Triangle> triangles);

    /// Complete structure: all C(n,2) edges and C(n,3) triangles. n >= 2.
    static Hypergraph all_to_all(int n);

    /// Random 2-simplicial complex with target mean degree and mean
    /// hyperdegree. Each triple is included independently with
    /// p2 = 2*k2/((n-1)(n-2)); the edges of included triangles are promoted
    /// into the edge set; remaining pairs are added with a probability chosen
    /// so the expected degree is exactly k1 (the extra-link probability
    /// accounts for the closure coverage q = 1-(1-p2)^(n-2)). Deterministic
    /// for a given seed.
    static Hypergraph random_simplicial_complex(int n, double mean_degree, double mean_hyperdegree,
                                                std::uint64_t seed);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    int degree(int i) const;       // incident edges
    int hyperdegree(int i) const;  // incident triangles
    int isolated_count() const;    // nodes with no incident simplex

    bool has_edge(int i, int j) const;
    bool has_triangle(int i, int j, int k) const;

    /// Indices into edges()/triangles() incident to node i.
    std::span<const int> incident_edges(int i) const;
    std::span<const int> incident_triangles(int i) const;

private:
    void check_index(int i) const;
    void build_incidence();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    // CSR incidence
    std::vector<int> edge_off_, edge_inc_;
    std::vector<int> tri_off_, tri_inc_;
};

}  // namespace hokm
