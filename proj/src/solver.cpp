#include "wdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "leaf_check.hpp"

namespace wdom {

namespace {

// Smallest positive label with zero requirement, if any; the only labels an
// isolated vertex can take.
std::optional<int> cheapest_free_label(const WeightVector& w) {
    for (int i = 1; i <= w.top_label(); ++i)
        if (w[i] == 0) return i;
    return std::nullopt;
}

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

// Depth-first search over labelings of one exact total weight, vertices in
// index order, labels ascending. Incremental neighborhood sums; a branch
// dies when some decided vertex can no longer meet its requirement within
// the remaining budget, or when the summed outstanding deficits exceed what
// the remaining weight can cover.
class LevelSearch {
public:
    LevelSearch(const Graph& g, const WeightVector& w, bool secure)
        : g_(g), secure_(secure), n_(g.vertex_count()), l_(w.top_label()),
          w_(w.entries().begin(), w.entries().end()), max_deg_(g.max_degree()),
          f_(n_, 0), sums_(n_, 0), undecided_(n_), checker_(g) {
        for (int v = 0; v < n_; ++v) undecided_[v] = g.degree(v);
    }

    // Searches level k below the given prefix (prefix entries are applied
    // first). Returns nodes explored; found witness (if any) is the
    // lexicographically first in this subtree.
    struct Outcome {
        std::uint64_t nodes = 0;
        bool budget_hit = false;
        std::optional<std::vector<int>> witness;
    };

    Outcome run(int k, const std::vector<int>& prefix, std::uint64_t node_cap,
                const std::atomic<bool>* stop_budget_checks = nullptr) {
        out_ = Outcome{};
        node_cap_ = node_cap;
        stop_budget_checks_ = stop_budget_checks;
        int rem = k;
        int applied = 0;
        bool ok = true;
        for (int t = 0; t < static_cast<int>(prefix.size()) && ok; ++t) {
            int a = prefix[t];
            rem -= a;
            ok = assign(t, a, rem);
            ++applied;
        }
        if (ok) dfs(applied, rem);
        for (int t = applied - 1; t >= 0; --t) unassign(t, prefix[t]);
        return out_;
    }

    // Enumerates feasible prefixes of the given depth at level k.
    std::vector<std::vector<int>> prefixes(int k, int depth, std::uint64_t node_cap, Outcome* out) {
        out_ = Outcome{};
        node_cap_ = node_cap;
        stop_budget_checks_ = nullptr;
        collect_depth_ = depth;
        collected_.clear();
        dfs(0, k);
        collect_depth_ = -1;
        *out = out_;
        return std::move(collected_);
    }

private:
    const Graph& g_;
    bool secure_;
    int n_, l_;
    std::vector<int> w_;
    int max_deg_;
    std::vector<int> f_, sums_, undecided_;
    long long pending_ = 0;  // sum of positive deficits over decided vertices
    detail::LeafSecurityChecker checker_;

    Outcome out_;
    std::uint64_t node_cap_ = 0;
    const std::atomic<bool>* stop_budget_checks_ = nullptr;
    int collect_depth_ = -1;
    std::vector<std::vector<int>> collected_;

    bool assign(int t, int a, int rem_after) {
        bool ok = true;
        f_[t] = a;
        for (int u : g_.neighbors(t)) {
            if (u < t) {
                int old_def = std::max(0, w_[f_[u]] - sums_[u]);
                sums_[u] += a;
                --undecided_[u];
                int raw = w_[f_[u]] - sums_[u];
                pending_ += std::max(0, raw) - old_def;
                if (raw > 0 &&
                    static_cast<long long>(raw) > std::min<long long>(static_cast<long long>(l_) * undecided_[u], rem_after))
                    ok = false;
            } else {
                sums_[u] += a;
                --undecided_[u];
            }
        }
        int raw = w_[a] - sums_[t];
        if (raw > 0) {
            pending_ += raw;
            if (static_cast<long long>(raw) > std::min<long long>(static_cast<long long>(l_) * undecided_[t], rem_after))
                ok = false;
        }
        return ok;
    }

    void unassign(int t, int a) {
        int raw = w_[a] - sums_[t];
        if (raw > 0) pending_ -= raw;
        for (int u : g_.neighbors(t)) {
            if (u < t) {
                int new_def = std::max(0, w_[f_[u]] - sums_[u]);
                sums_[u] -= a;
                ++undecided_[u];
                pending_ += std::max(0, w_[f_[u]] - sums_[u]) - new_def;
            } else {
                sums_[u] -= a;
                ++undecided_[u];
            }
        }
        f_[t] = 0;
    }

    void dfs(int t, int rem) {
        if (out_.witness || out_.budget_hit) return;
        if (t == collect_depth_) {
            collected_.emplace_back(f_.begin(), f_.begin() + t);
            return;
        }
        if (t == n_) {
            if (!secure_ || checker_.secure(f_, sums_, w_))
                out_.witness = f_;
            return;
        }
        int lo = std::max(0, rem - l_ * (n_ - 1 - t));
        int hi = std::min(l_, rem);
        for (int a = lo; a <= hi; ++a) {
            ++out_.nodes;
            if (node_cap_ && out_.nodes > node_cap_ &&
                !(stop_budget_checks_ && stop_budget_checks_->load(std::memory_order_relaxed))) {
                out_.budget_hit = true;
                return;
            }
            int rem2 = rem - a;
            bool ok = assign(t, a, rem2);
            if (ok && pending_ <= static_cast<long long>(rem2) * max_deg_) dfs(t + 1, rem2);
            unassign(t, a);
            if (out_.witness || out_.budget_hit) return;
        }
    }
};

struct LevelResult {
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::optional<std::vector<int>> witness;
};

LevelResult search_level(const Graph& g, const WeightVector& w, bool secure, int k, int workers,
                         std::uint64_t remaining_budget) {
    LevelResult res;
    if (workers <= 1) {
        LevelSearch ls(g, w, secure);
        auto out = ls.run(k, {}, remaining_budget, nullptr);
        return {out.nodes, out.budget_hit, std::move(out.witness)};
    }

    // Split the search below a fixed prefix depth; prefix order (and hence
    // the reduced witness) is independent of scheduling.
    int depth = 0;
    long long combos = 1;
    while (depth < g.vertex_count() && combos < static_cast<long long>(workers) * 8) {
        combos *= w.top_label() + 1;
        ++depth;
    }
    LevelSearch collector(g, w, secure);
    LevelSearch::Outcome collect_out;
    auto prefixes = collector.prefixes(k, depth, remaining_budget, &collect_out);
    res.nodes += collect_out.nodes;
    if (collect_out.budget_hit) {
        res.budget_hit = true;
        return res;
    }

    std::atomic<bool> someone_found{false};
    std::vector<LevelSearch::Outcome> outcomes(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    std::uint64_t per_worker_cap = remaining_budget;  // coarse: budget is a valve, not a meter
    for (int wk = 0; wk < workers; ++wk) {
        threads.emplace_back([&, wk] {
            LevelSearch ls(g, w, secure);
            LevelSearch::Outcome acc;
            for (std::size_t i = wk; i < prefixes.size(); i += static_cast<std::size_t>(workers)) {
                auto out = ls.run(k, prefixes[i], per_worker_cap > acc.nodes ? per_worker_cap - acc.nodes : 1,
                                  &someone_found);
                acc.nodes += out.nodes;
                acc.budget_hit = acc.budget_hit || out.budget_hit;
                if (out.witness) {
                    acc.witness = std::move(out.witness);
                    someone_found.store(true, std::memory_order_relaxed);
                    break;  // later prefixes in this worker are lexicographically larger
                }
                if (acc.budget_hit && !someone_found.load(std::memory_order_relaxed)) break;
            }
            outcomes[static_cast<std::size_t>(wk)] = std::move(acc);
        });
    }
    for (auto& th : threads) th.join();

    for (auto& out : outcomes) {
        res.nodes += out.nodes;
        if (out.witness && (!res.witness || *out.witness < *res.witness)) res.witness = std::move(out.witness);
    }
    if (!res.witness)
        for (auto& out : outcomes) res.budget_hit = res.budget_hit || out.budget_hit;
    return res;
}

}  // namespace

int lower_bound(const Graph& g, const WeightVector& w) {
    const int n = g.vertex_count();
    const int l = w.top_label();
    int isolated = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) ++isolated;
    auto free_label = cheapest_free_label(w);
    if (isolated > 0 && !free_label) return l * n + 1;  // provably infeasible
    int lb = isolated * (free_label ? *free_label : 0);
    int rest = n - isolated;
    if (rest > 0) {
        int max_deg = g.max_degree();
        int wmin = w.min_entry();
        int ratio = wmin >= 1 ? ceil_div(static_cast<long long>(wmin) * rest, max_deg)
                              : ceil_div(static_cast<long long>(w[0]) * rest, max_deg + w[0]);
        lb += std::max(1, ratio);
    }
    return lb;
}

DominationResult solve_iterative(const Graph& g, const WeightVector& w, const SolverConfig& cfg, int k_max) {
    auto t0 = std::chrono::steady_clock::now();
    DominationResult res;
    const int n = g.vertex_count();
    const int l = w.top_label();
    k_max = std::min(k_max, l * n);

    bool isolated_infeasible = false;
    if (g.has_isolated_vertex() && !cheapest_free_label(w)) isolated_infeasible = true;

    int lb = lower_bound(g, w);
    res.lower_bound = std::min(lb, k_max + 1);
    if (!isolated_infeasible) {
        for (int k = std::max(lb, 0); k <= k_max; ++k) {
            std::uint64_t budget_left = cfg.node_budget ? (*cfg.node_budget > res.stats.nodes
                                                               ? *cfg.node_budget - res.stats.nodes
                                                               : 0)
                                                        : 0;
            if (cfg.node_budget && budget_left == 0) {
                res.status = SolveStatus::BudgetExceeded;
                res.lower_bound = k;
                res.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return res;
            }
            ++res.stats.levels;
            auto lvl = search_level(g, w, cfg.secure, k, std::max(1, cfg.workers), budget_left);
            res.stats.nodes += lvl.nodes;
            if (lvl.witness) {
                Labeling witness(w, std::move(*lvl.witness));
                if (!is_w_dominating(g, witness) || (cfg.secure && !is_secure_w_dominating(g, witness).secure))
                    throw std::logic_error("solver produced a witness that fails re-verification");
                res.status = SolveStatus::Optimal;
                res.value = k;
                res.lower_bound = k;
                res.witness = std::move(witness);
                res.stats.ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return res;
            }
            if (lvl.budget_hit) {
                res.status = SolveStatus::BudgetExceeded;
                res.lower_bound = k;
                res.stats.ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return res;
            }
        }
    }
    res.status = SolveStatus::Infeasible;
    res.lower_bound = k_max + 1;
    res.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

DominationResult solve(const Graph& g, const WeightVector& w, const SolverConfig& cfg) {
    return solve_iterative(g, w, cfg, w.top_label() * g.vertex_count());
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    if (n > max_n) {
        out.push_back(perm);
        return out;
    }
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v : g.neighbors(u)) {
                if (u > v) continue;
                if (!g.has_edge(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace wdom
