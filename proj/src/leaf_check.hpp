#pragma once

#include <cstdint>
#include <vector>

#include "wdom/graph.hpp"

namespace wdom::detail {

// Word-parallel security check for a complete w-dominating labeling with
// precomputed neighborhood sums. A move u->v changes only the sums of
// N(u) (down 1) and N(v) (up 1), so it stays w-dominating iff
//   (a) sums[v]-1 >= w[1],
//   (b) sums[u]+1 >= w[f(u)-1], and
//   (c) no x in N(u)\(N(v) u {v}) sits exactly at its requirement.
class LeafSecurityChecker {
public:
    explicit LeafSecurityChecker(const Graph& g) : g_(g), tight_(static_cast<std::size_t>(g.bit_words())) {}

    bool secure(const std::vector<int>& f, const std::vector<int>& sums, const std::vector<int>& w) {
        const int n = g_.vertex_count();
        const int words = g_.bit_words();
        for (int i = 0; i < words; ++i) tight_[i] = 0;
        for (int v = 0; v < n; ++v)
            if (sums[v] == w[f[v]]) tight_[v / 64] |= std::uint64_t{1} << (v % 64);
        for (int v = 0; v < n; ++v) {
            if (f[v] != 0) continue;
            if (sums[v] - 1 < w[1]) return false;  // no move can re-dominate v itself
            bool defended = false;
            auto row_v = g_.adjacency_bits(v);
            for (int u : g_.neighbors(v)) {
                if (f[u] <= 0) continue;
                if (sums[u] + 1 < w[f[u] - 1]) continue;
                bool ok = true;
                auto row_u = g_.adjacency_bits(u);
                for (int i = 0; i < words; ++i) {
                    std::uint64_t bad = row_u[i] & tight_[i] & ~row_v[i];
                    if (i == v / 64) bad &= ~(std::uint64_t{1} << (v % 64));
                    if (bad) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    defended = true;
                    break;
                }
            }
            if (!defended) return false;
        }
        return true;
    }

private:
    const Graph& g_;
    std::vector<std::uint64_t> tight_;
};

}  // namespace wdom::detail
