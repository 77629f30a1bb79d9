#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wdom/graph.hpp"
#include "wdom/weights.hpp"

namespace wdom {

/// Vertex labeling f: V -> {0,...,l}, carrying the WeightVector it is
/// interpreted against. Values are validated on construction.
class Labeling {
public:
    Labeling(WeightVector w, std::vector<int> values);

    int operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
    int size() const { return static_cast<int>(values_.size()); }
    const WeightVector& weights() const { return w_; }
    const std::vector<int>& values() const { return values_; }

    /// Total weight sum_v f(v).
    int weight() const;

    /// Comma-separated values in vertex order, e.g. "1,0,1".
    std::string serialize() const;
    static Labeling parse(const WeightVector& w, const std::string& text);

    bool operator==(const Labeling& o) const { return w_ == o.w_ && values_ == o.values_; }

private:
    WeightVector w_;
    std::vector<int> values_;
};

/// sum of f over the open neighborhood of v.
int neighborhood_sum(const Graph& g, const Labeling& f, int v);

/// True iff every vertex labeled i has neighborhood sum >= w_i.
bool is_w_dominating(const Graph& g, const Labeling& f);

/// One-unit transfer from u to an adjacent zero vertex v: the result maps
/// v to 1 and u to f(u)-1. Preconditions (uv edge, f(v)=0, f(u)>0) are
/// enforced with std::invalid_argument.
Labeling move_labeling(const Graph& g, const Labeling& f, int u, int v);

/// Positive neighbors u of the zero vertex v whose move keeps f
/// w-dominating. Requires f w-dominating and f(v)=0.
std::vector<int> defender_set(const Graph& g, const Labeling& f, int v);

/// Witness for a secure check: one defender per zero vertex, or the first
/// vertex that has none.
struct SecurityCertificate {
    bool secure = false;
    std::vector<std::pair<int, int>> defenders;  // (zero vertex, its defender)
    std::optional<int> failed_vertex;
};

/// f is secure w-dominating iff it is w-dominating and every zero vertex
/// has a nonempty defender set.
SecurityCertificate is_secure_w_dominating(const Graph& g, const Labeling& f);

}  // namespace wdom
