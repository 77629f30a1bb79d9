#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "leaf_check.hpp"
#include "wdom/solver.hpp"

namespace wdom {

namespace {

// One copy-of-H labeling: labels per H-vertex, plus the data the search
// needs — total weight, in-copy neighborhood sums, and the worst
// requirement deficit any vertex of the copy has before external weight.
struct Pattern {
    std::vector<int> labels;
    int weight = 0;
    std::vector<int> internal;
    int max_deficit_base = 0;
};

std::vector<Pattern> canonical_patterns(const Graph& h, const WeightVector& w) {
    const int hn = h.vertex_count();
    const int l = w.top_label();
    auto aut = graph_automorphisms(h);
    std::vector<Pattern> out;
    std::vector<int> p(static_cast<std::size_t>(hn), 0);
    std::vector<int> q(static_cast<std::size_t>(hn), 0);
    while (true) {
        bool canonical = true;
        for (const auto& sigma : aut) {
            for (int y = 0; y < hn; ++y) q[y] = p[sigma[y]];
            if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end())) {
                canonical = false;
                break;
            }
        }
        if (canonical) {
            Pattern pat;
            pat.labels = p;
            for (int v : p) pat.weight += v;
            pat.internal.assign(static_cast<std::size_t>(hn), 0);
            for (int y = 0; y < hn; ++y)
                for (int y2 : h.neighbors(y)) pat.internal[y] += p[y2];
            pat.max_deficit_base = w[p[0]] - pat.internal[0];
            for (int y = 1; y < hn; ++y)
                pat.max_deficit_base = std::max(pat.max_deficit_base, w[p[y]] - pat.internal[y]);
            out.push_back(std::move(pat));
        }
        int i = hn - 1;
        while (i >= 0 && p[i] == l) p[i--] = 0;
        if (i < 0) break;
        ++p[i];
    }
    return out;  // enumeration order is lexicographic already
}

class ProductSearch {
public:
    ProductSearch(const Graph& g, const Graph& h, const Graph& product, const WeightVector& w, bool secure,
                  const ProductSolveOptions& opts)
        : g_(g), h_(h), product_(product), secure_(secure), gn_(g.vertex_count()), hn_(h.vertex_count()),
          w_(w.entries().begin(), w.entries().end()), patterns_(canonical_patterns(h, w)), checker_(product) {
        max_copy_weight_ = w.top_label() * hn_;
        if (opts.per_copy_cap) max_copy_weight_ = std::min(max_copy_weight_, *opts.per_copy_cap);
        if (opts.fixed_copy_weights) {
            if (static_cast<int>(opts.fixed_copy_weights->size()) != gn_)
                throw std::invalid_argument("fixed copy weights need one entry per vertex of G");
            fixed_ = *opts.fixed_copy_weights;
        }

        // next_le_[c][i]: first pattern index >= i with weight <= c.
        const int pc = static_cast<int>(patterns_.size());
        next_le_.assign(static_cast<std::size_t>(max_copy_weight_) + 1,
                        std::vector<int>(static_cast<std::size_t>(pc) + 1, pc));
        for (int c = 0; c <= max_copy_weight_; ++c)
            for (int i = pc - 1; i >= 0; --i)
                next_le_[c][i] = patterns_[static_cast<std::size_t>(i)].weight <= c ? i : next_le_[c][i + 1];

        copy_cap_.assign(static_cast<std::size_t>(gn_), max_copy_weight_);
        if (!fixed_.empty())
            for (int x = 0; x < gn_; ++x) copy_cap_[x] = std::min(fixed_[x], max_copy_weight_);
        suffix_cap_.assign(static_cast<std::size_t>(gn_) + 1, 0);
        for (int x = gn_ - 1; x >= 0; --x) suffix_cap_[x] = suffix_cap_[x + 1] + copy_cap_[x];

        chosen_.assign(static_cast<std::size_t>(gn_), -1);
        external_.assign(static_cast<std::size_t>(gn_), 0);
        pot_nbr_.assign(static_cast<std::size_t>(gn_), 0);
        nbr_mask_.assign(static_cast<std::size_t>(gn_), 0);
        undecided_mask_ = gn_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gn_) - 1;
        for (int x = 0; x < gn_; ++x) {
            for (int x2 : g.neighbors(x)) {
                pot_nbr_[x] += copy_cap_[x2];
                nbr_mask_[x] |= std::uint64_t{1} << x2;
            }
        }
        f_.assign(static_cast<std::size_t>(gn_) * hn_, 0);
        sums_.assign(static_cast<std::size_t>(gn_) * hn_, 0);
    }

    struct Outcome {
        std::uint64_t nodes = 0;
        bool budget_hit = false;
        std::optional<std::vector<int>> witness;
    };

    Outcome run(int k, std::uint64_t node_cap) {
        out_ = Outcome{};
        node_cap_ = node_cap;
        dfs(0, k);
        return out_;
    }

private:
    const Graph& g_;
    const Graph& h_;
    const Graph& product_;
    bool secure_;
    int gn_, hn_;
    std::vector<int> w_;
    std::vector<Pattern> patterns_;
    detail::LeafSecurityChecker checker_;
    int max_copy_weight_ = 0;
    std::vector<int> fixed_;
    std::vector<std::vector<int>> next_le_;
    std::vector<int> copy_cap_;
    std::vector<long long> suffix_cap_;

    std::vector<int> chosen_, external_, pot_nbr_;
    std::vector<std::uint64_t> nbr_mask_;
    std::uint64_t undecided_mask_ = 0;
    std::vector<int> f_, sums_;

    Outcome out_;
    std::uint64_t node_cap_ = 0;

    int deficit(int x) const { return patterns_[static_cast<std::size_t>(chosen_[x])].max_deficit_base - external_[x]; }

    bool assign(int x, int pidx, int rem_after) {
        chosen_[x] = pidx;
        undecided_mask_ &= ~(std::uint64_t{1} << x);
        const int c = patterns_[static_cast<std::size_t>(pidx)].weight;
        bool ok = true;
        for (int x2 : g_.neighbors(x)) {
            external_[x2] += c;
            pot_nbr_[x2] -= copy_cap_[x];
            if (chosen_[x2] >= 0) {
                int d = deficit(x2);
                if (d > 0 && d > std::min<long long>(pot_nbr_[x2], rem_after)) ok = false;
            }
        }
        int d = deficit(x);
        if (d > 0 && d > std::min<long long>(pot_nbr_[x], rem_after)) ok = false;
        return ok;
    }

    void unassign(int x, int pidx) {
        const int c = patterns_[static_cast<std::size_t>(pidx)].weight;
        for (int x2 : g_.neighbors(x)) {
            external_[x2] -= c;
            pot_nbr_[x2] += copy_cap_[x];
        }
        chosen_[x] = -1;
        undecided_mask_ |= std::uint64_t{1} << x;
    }

    // Needy copies with pairwise-disjoint undecided neighborhoods have
    // additive external demands; every future unit serves one copy of the
    // packing.
    bool packing_feasible(int frontier, int rem) const {
        if (gn_ > 64) return true;
        long long demand = 0;
        std::uint64_t used = 0;
        for (int x = 0; x < frontier; ++x) {
            int d = deficit(x);
            if (d <= 0) continue;
            std::uint64_t avail = nbr_mask_[x] & undecided_mask_;
            if (avail & used) continue;
            used |= avail;
            demand += d;
            if (demand > rem) return false;
        }
        return true;
    }

    void leaf() {
        for (int x = 0; x < gn_; ++x) {
            const Pattern& p = patterns_[static_cast<std::size_t>(chosen_[x])];
            for (int y = 0; y < hn_; ++y) {
                f_[static_cast<std::size_t>(x) * hn_ + y] = p.labels[y];
                sums_[static_cast<std::size_t>(x) * hn_ + y] = external_[x] + p.internal[y];
            }
        }
        if (!secure_ || checker_.secure(f_, sums_, w_)) out_.witness = f_;
    }

    void dfs(int x, int rem) {
        if (out_.witness || out_.budget_hit) return;
        if (x == gn_) {
            leaf();
            return;
        }
        int c_low = std::max<long long>(0, rem - suffix_cap_[x + 1]);
        int c_high = std::min(copy_cap_[x], rem);
        if (!fixed_.empty()) c_low = std::max(c_low, fixed_[x]);
        if (c_low > c_high) return;
        const int pc = static_cast<int>(patterns_.size());
        for (int j = next_le_[c_high][0]; j < pc; j = next_le_[c_high][j + 1]) {
            const int c = patterns_[static_cast<std::size_t>(j)].weight;
            if (c < c_low) continue;
            ++out_.nodes;
            if (node_cap_ && out_.nodes > node_cap_) {
                out_.budget_hit = true;
                return;
            }
            int rem2 = rem - c;
            bool ok = assign(x, j, rem2);
            if (ok && packing_feasible(x + 1, rem2)) dfs(x + 1, rem2);
            unassign(x, j);
            if (out_.witness || out_.budget_hit) return;
        }
    }
};

}  // namespace

DominationResult solve_product(const Graph& g, const Graph& h, const WeightVector& w, const SolverConfig& cfg,
                               const ProductSolveOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ProductIndex idx;
    Graph product = lexicographic_product(g, h, &idx);

    // Pattern space must stay enumerable; otherwise the generic path is the
    // better tool anyway.
    double space = 1;
    for (int i = 0; i < h.vertex_count(); ++i) space *= w.top_label() + 1;
    if (h.vertex_count() > 12 || space > 3e5 || g.vertex_count() > 64) {
        if (opts.per_copy_cap || opts.fixed_copy_weights)
            throw std::invalid_argument("per-copy constraints need the pattern-based product search");
        return solve(product, w, cfg);
    }

    ProductSearch search(g, h, product, w, cfg.secure, opts);

    DominationResult res;
    const int n = product.vertex_count();
    int k_max = w.top_label() * n;
    int lb = lower_bound(product, w);
    int k_min = std::max(lb, 0);
    if (opts.fixed_copy_weights) {
        int total = 0;
        for (int c : *opts.fixed_copy_weights) total += c;
        k_min = k_max = total;
        lb = 0;
    }
    res.lower_bound = std::min(lb, k_max + 1);

    for (int k = k_min; k <= k_max; ++k) {
        std::uint64_t budget_left =
            cfg.node_budget ? (*cfg.node_budget > res.stats.nodes ? *cfg.node_budget - res.stats.nodes : 0) : 0;
        if (cfg.node_budget && budget_left == 0) {
            res.status = SolveStatus::BudgetExceeded;
            res.lower_bound = k;
            break;
        }
        ++res.stats.levels;
        auto out = search.run(k, budget_left);
        res.stats.nodes += out.nodes;
        if (out.witness) {
            Labeling witness(w, std::move(*out.witness));
            if (!is_w_dominating(product, witness) ||
                (cfg.secure && !is_secure_w_dominating(product, witness).secure))
                throw std::logic_error("product solver produced a witness that fails re-verification");
            res.status = SolveStatus::Optimal;
            res.value = k;
            res.lower_bound = k;
            res.witness = std::move(witness);
            break;
        }
        if (out.budget_hit) {
            res.status = SolveStatus::BudgetExceeded;
            res.lower_bound = k;
            break;
        }
        if (k == k_max) {
            res.status = SolveStatus::Infeasible;
            res.lower_bound = k_max + 1;
        }
    }
    if (k_min > k_max) {
        res.status = SolveStatus::Infeasible;
        res.lower_bound = k_max + 1;
    }
    res.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace wdom
