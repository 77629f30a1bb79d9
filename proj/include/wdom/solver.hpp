#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wdom/graph.hpp"
#include "wdom/labeling.hpp"
#include "wdom/weights.hpp"

namespace wdom {

struct SolverConfig {
    bool secure = false;
    std::optional<std::uint64_t> node_budget;  // explored assignments
    int workers = 1;
    // Witness tie-break is fixed: lexicographically smallest value sequence
    // among optimal labelings (restricted to canonical per-copy patterns on
    // the product path).
};

enum class SolveStatus {
    Optimal,         // value and witness present
    Infeasible,      // no labeling of weight <= searched cap satisfies the check
    BudgetExceeded,  // node budget hit; lower_bound is the best proven bound
};

struct SolveStats {
    std::uint64_t nodes = 0;
    int levels = 0;  // weight levels fully searched or entered
    double ms = 0.0;
};

struct DominationResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<int> value;
    std::optional<Labeling> witness;
    int lower_bound = 0;  // proven lower bound on the parameter
    SolveStats stats;

    bool optimal() const { return status == SolveStatus::Optimal; }
};

/// Sound lower bound on gamma_w: covering ratios plus forced labels on
/// isolated vertices. Never exceeds the true optimum.
int lower_bound(const Graph& g, const WeightVector& w);

/// Exact gamma_w(G) / gamma_w^s(G) by iterative deepening on total weight
/// with feasibility pruning. Deterministic value and witness for fixed
/// inputs and config, regardless of worker count.
DominationResult solve(const Graph& g, const WeightVector& w, const SolverConfig& cfg = {});

/// Same search restricted to labelings of weight <= k_max; status
/// Infeasible with lower_bound = k_max+1 means exhaustion without success.
DominationResult solve_iterative(const Graph& g, const WeightVector& w, const SolverConfig& cfg, int k_max);

/// Full automorphism group by brute-force permutation enumeration; only
/// the identity when the graph has more than max_n vertices.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g, int max_n = 8);

struct ProductSolveOptions {
    std::optional<int> per_copy_cap;               // max weight inside one copy of H
    std::optional<std::vector<int>> fixed_copy_weights;  // exact weight per copy
};

/// Exact solve of the lexicographic product G o H. Enumerates per-copy
/// label patterns up to Aut(H) (independent per-copy automorphisms of H
/// are automorphisms of the product, so restricting each copy to orbit
/// representatives is value-preserving). Falls back to the generic solver
/// when the pattern space is too large. Witnesses live on the product
/// graph in row-major ids and are re-verified before returning.
DominationResult solve_product(const Graph& g, const Graph& h, const WeightVector& w,
                               const SolverConfig& cfg = {}, const ProductSolveOptions& opts = {});

}  // namespace wdom
