#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wdom {

/// Simple undirected graph with dense 0-based vertex ids and sorted
/// adjacency lists. Immutable after construction; safe to share across
/// threads.
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Builds from an edge list. Rejects self-loops, duplicate edges and
    /// out-of-range endpoints with std::invalid_argument.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    std::span<const int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    int min_degree() const;
    int max_degree() const;
    bool is_complete() const { return static_cast<long long>(m_) * 2 == static_cast<long long>(n_) * (n_ - 1); }
    bool is_nontrivial() const { return n_ >= 2; }
    bool has_isolated_vertex() const { return min_degree() == 0; }
    bool is_connected() const;

    std::vector<std::pair<int, int>> edges() const;

    /// Adjacency row as a bitset (words of 64, LSB-first). Used by the
    /// solver hot paths.
    std::span<const std::uint64_t> adjacency_bits(int v) const;
    int bit_words() const { return words_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;  // row-major, words_ per vertex

    void finalize();
};

Graph path_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);
Graph star_graph(int n);       // K_{1,n-1}: center 0, n >= 1
Graph complete_bipartite_graph(int a, int b);  // a,b >= 1; part A = 0..a-1

/// Disjoint union; vertices of g2 are shifted by |V(g1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Row-major pairing between product ids and (x, y) factor coordinates:
/// id = x*h_size + y.
struct ProductIndex {
    int g_size = 0;
    int h_size = 0;
    int id(int x, int y) const { return x * h_size + y; }
    std::pair<int, int> coords(int id) const { return {id / h_size, id % h_size}; }
};

/// Lexicographic product: (u,v)(x,y) is an edge iff ux is an edge of g, or
/// u == x and vy is an edge of h.
Graph lexicographic_product(const Graph& g, const Graph& h, ProductIndex* index = nullptr);

/// 10-vertex gadget: two 5-cycles 0..4 and 5..9 with chords (0,2), (5,7)
/// and bridge (0,5). 13 edges.
Graph figure1_graph();

/// Three tree gadgets:
///   1 -> 9 vertices: center 0, hubs 1 and 5, three leaves per hub.
///   2 -> 10 vertices: hubs 1 and 6 with three leaves each, inner
///        neighbors 0 and 5, edge (0,5).
///   3 -> 19 vertices: a copy of shape 1 (ids 0..8) and a copy of shape 2
///        (ids 9..18) joined by the leaf-to-leaf bridge (2,17).
Graph figure2_graph(int i);

int min_degree(const Graph& g);

/// True iff sub and g have the same vertex count and every edge of sub is
/// an edge of g. Throws on vertex-count mismatch.
bool is_spanning_subgraph(const Graph& sub, const Graph& g);

}  // namespace wdom
