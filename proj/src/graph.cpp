#include "wdom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdom {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    finalize();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge rejected");
    }
    g.finalize();
    return g;
}

void Graph::finalize() {
    m_ = 0;
    for (const auto& nb : adj_) m_ += static_cast<int>(nb.size());
    m_ /= 2;
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[v])
            bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_[static_cast<std::size_t>(v)].data(), adj_[static_cast<std::size_t>(v)].size()};
}

bool Graph::has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

std::span<const std::uint64_t> Graph::adjacency_bits(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

int Graph::min_degree() const {
    int d = n_;
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == n_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i + 1 < n; ++i) ed.emplace_back(i, i + 1);
    return Graph::from_edges(n, ed);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i + 1 < n; ++i) ed.emplace_back(i, i + 1);
    ed.emplace_back(n - 1, 0);
    return Graph::from_edges(n, ed);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ed.emplace_back(i, j);
    return Graph::from_edges(n, ed);
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> ed;
    for (int i = 1; i < n; ++i) ed.emplace_back(0, i);
    return Graph::from_edges(n, ed);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs a,b >= 1");
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) ed.emplace_back(i, a + j);
    return Graph::from_edges(a + b, ed);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int off = g1.vertex_count();
    auto ed = g1.edges();
    for (auto [u, v] : g2.edges()) ed.emplace_back(u + off, v + off);
    return Graph::from_edges(off + g2.vertex_count(), ed);
}

Graph lexicographic_product(const Graph& g, const Graph& h, ProductIndex* index) {
    ProductIndex idx{g.vertex_count(), h.vertex_count()};
    std::vector<std::pair<int, int>> ed;
    for (int x = 0; x < idx.g_size; ++x) {
        for (int x2 : g.neighbors(x)) {
            if (x2 < x) continue;
            for (int y = 0; y < idx.h_size; ++y)
                for (int y2 = 0; y2 < idx.h_size; ++y2) ed.emplace_back(idx.id(x, y), idx.id(x2, y2));
        }
        for (auto [y, y2] : h.edges()) ed.emplace_back(idx.id(x, y), idx.id(x, y2));
    }
    if (index) *index = idx;
    return Graph::from_edges(idx.g_size * idx.h_size, ed);
}

Graph figure1_graph() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                                  {0, 2}, {5, 7}, {0, 5}});
}

Graph figure2_graph(int i) {
    switch (i) {
    case 1:
        return Graph::from_edges(9, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {0, 5}, {5, 6}, {5, 7}, {5, 8}});
    case 2:
        return Graph::from_edges(10, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {0, 5}});
    case 3: {
        std::vector<std::pair<int, int>> ed = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {0, 5}, {5, 6}, {5, 7}, {5, 8}};
        for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {0, 5}})
            ed.emplace_back(u + 9, v + 9);
        ed.emplace_back(2, 17);
        return Graph::from_edges(19, ed);
    }
    default:
        throw std::invalid_argument("figure2_graph index must be 1, 2 or 3");
    }
}

int min_degree(const Graph& g) { return g.min_degree(); }

bool is_spanning_subgraph(const Graph& sub, const Graph& g) {
    if (sub.vertex_count() != g.vertex_count())
        throw std::invalid_argument("spanning-subgraph check needs equal vertex counts");
    for (int v = 0; v < sub.vertex_count(); ++v)
        for (int u : sub.neighbors(v))
            if (!g.has_edge(v, u)) return false;
    return true;
}

}  // namespace wdom
