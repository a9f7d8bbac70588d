#pragma once

#include <cstdint>
#include <vector>

#include "betaforge/vertex.hpp"

namespace betaforge {

inline constexpr int64_t kDefaultVertexBudget = 1'000'000;

// Finite truncation of the countably branching tree with uniform branching b
// and height cap H, canonical labels: the children of J are J ∪ {max J + i}
// for i = 1..b (the root uses {i}). Stored implicitly; vertex ids are BFS
// positions and everything else is index arithmetic, so even large
// truncations cost no memory beyond the level offsets.
class TruncatedTree {
public:
    TruncatedTree(int height_cap, int branching, int64_t vertex_budget = kDefaultVertexBudget);

    int height_cap() const { return height_cap_; }
    int branching() const { return branching_; }
    int64_t size() const { return offsets_.back(); }

    // The truncation viewed as a pruned structure: level 0, block size 1.
    int level() const { return 0; }
    int height() const { return height_cap_; }

    int64_t root() const { return 0; }
    int height_of(int64_t id) const;
    int64_t parent(int64_t id) const;            // -1 for the root
    int64_t child(int64_t id, int i) const;      // i in [0, b)
    int child_count(int64_t id) const;
    std::vector<int64_t> children(int64_t id) const;

    int32_t last_label(int64_t id) const;        // 0 for the root
    Vertex payload(int64_t id) const;

    bool contains(const Vertex& v) const;
    int64_t index_of(const Vertex& v) const;     // -1 if absent

private:
    int height_cap_;
    int branching_;
    std::vector<int64_t> offsets_;  // offsets_[h] = id of first vertex at height h
};

// Canonical constructor name from the module contract.
TruncatedTree enumerate_truncation(int height_cap, int branching,
                                   int64_t vertex_budget = kDefaultVertexBudget);

}  // namespace betaforge
