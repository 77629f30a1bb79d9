#include "wdom/labeling.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wdom {

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw std::invalid_argument("weight vector needs at least two entries");
    if (entries_[0] < 1) throw std::invalid_argument("weight vector needs w_0 >= 1");
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("weight vector entries must be nonnegative");
}

WeightVector WeightVector::parse(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed weight vector: " + text);
        entries.push_back(v);
    }
    return WeightVector(std::move(entries));
}

bool WeightVector::monotone() const {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1]) return false;
    return true;
}

int WeightVector::min_entry() const {
    int m = entries_[0];
    for (int e : entries_) m = std::min(m, e);
    return m;
}

std::string WeightVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

Labeling::Labeling(WeightVector w, std::vector<int> values) : w_(std::move(w)), values_(std::move(values)) {
    for (int v : values_)
        if (v < 0 || v > w_.top_label())
            throw std::invalid_argument("labeling value outside {0,...,l}");
}

int Labeling::weight() const { return std::accumulate(values_.begin(), values_.end(), 0); }

std::string Labeling::serialize() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

Labeling Labeling::parse(const WeightVector& w, const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(std::stoi(tok));
    return Labeling(w, std::move(values));
}

int neighborhood_sum(const Graph& g, const Labeling& f, int v) {
    int s = 0;
    for (int u : g.neighbors(v)) s += f[u];
    return s;
}

bool is_w_dominating(const Graph& g, const Labeling& f) {
    if (f.size() != g.vertex_count()) throw std::invalid_argument("labeling size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (neighborhood_sum(g, f, v) < f.weights()[f[v]]) return false;
    return true;
}

Labeling move_labeling(const Graph& g, const Labeling& f, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("move needs adjacent vertices");
    if (f[v] != 0) throw std::invalid_argument("move target must be labeled 0");
    if (f[u] <= 0) throw std::invalid_argument("move source must be positive");
    std::vector<int> values = f.values();
    values[static_cast<std::size_t>(u)] -= 1;
    values[static_cast<std::size_t>(v)] = 1;
    return Labeling(f.weights(), std::move(values));
}

std::vector<int> defender_set(const Graph& g, const Labeling& f, int v) {
    if (f[v] != 0) throw std::invalid_argument("defender set is defined for zero vertices");
    std::vector<int> out;
    for (int u : g.neighbors(v))
        if (f[u] > 0 && is_w_dominating(g, move_labeling(g, f, u, v))) out.push_back(u);
    return out;
}

SecurityCertificate is_secure_w_dominating(const Graph& g, const Labeling& f) {
    SecurityCertificate cert;
    if (!is_w_dominating(g, f)) {
        cert.secure = false;
        return cert;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] != 0) continue;
        auto ds = defender_set(g, f, v);
        if (ds.empty()) {
            cert.secure = false;
            cert.defenders.clear();
            cert.failed_vertex = v;
            return cert;
        }
        cert.defenders.emplace_back(v, ds.front());
    }
    cert.secure = true;
    return cert;
}

}  // namespace wdom
