#pragma once

#include <span>
#include <string>
#include <vector>

namespace wdom {

/// Requirement vector w = (w_0, ..., w_l) with w_0 >= 1 and l >= 1. Labels
/// range over {0, ..., l}; a vertex labeled i needs open-neighborhood label
/// sum at least w_i.
class WeightVector {
public:
    explicit WeightVector(std::vector<int> entries);
    WeightVector(std::initializer_list<int> entries) : WeightVector(std::vector<int>(entries)) {}

    /// Parses "2,1,0".
    static WeightVector parse(const std::string& text);

    int top_label() const { return static_cast<int>(entries_.size()) - 1; }
    int operator[](int label) const { return entries_[static_cast<std::size_t>(label)]; }
    std::span<const int> entries() const { return entries_; }

    /// w_i >= w_{i+1} for all i; hypothesis of several order relations.
    bool monotone() const;
    int min_entry() const;

    std::string to_string() const;  // "2,1,0"

    bool operator==(const WeightVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<int> entries_;
};

}  // namespace wdom
