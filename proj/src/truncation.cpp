#include "betaforge/truncation.hpp"

#include <algorithm>

#include "betaforge/errors.hpp"

namespace betaforge {

TruncatedTree::TruncatedTree(int height_cap, int branching, int64_t vertex_budget)
    : height_cap_(height_cap), branching_(branching) {
    if (height_cap < 0) throw ValidationError("truncation height must be >= 0");
    if (branching < 1) throw ValidationError("truncation branching must be >= 1");
    offsets_.assign(1, 0);
    int64_t level_count = 1;
    int64_t total = 0;
    for (int h = 0; h <= height_cap; ++h) {
        total += level_count;
        if (total > vertex_budget) {
            throw ResourceError("truncation (H=" + std::to_string(height_cap) +
                                ", b=" + std::to_string(branching) + ") exceeds vertex budget " +
                                std::to_string(vertex_budget));
        }
        offsets_.push_back(total);
        if (level_count > vertex_budget) break;  // unreachable; guards overflow
        level_count *= branching;
    }
}

int TruncatedTree::height_of(int64_t id) const {
    int h = 0;
    while (offsets_[static_cast<size_t>(h) + 1] <= id) ++h;
    return h;
}

int64_t TruncatedTree::parent(int64_t id) const {
    if (id == 0) return -1;
    int h = height_of(id);
    return offsets_[static_cast<size_t>(h) - 1] + (id - offsets_[static_cast<size_t>(h)]) / branching_;
}

int64_t TruncatedTree::child(int64_t id, int i) const {
    int h = height_of(id);
    return offsets_[static_cast<size_t>(h) + 1] +
           (id - offsets_[static_cast<size_t>(h)]) * branching_ + i;
}

int TruncatedTree::child_count(int64_t id) const {
    return height_of(id) < height_cap_ ? branching_ : 0;
}

std::vector<int64_t> TruncatedTree::children(int64_t id) const {
    std::vector<int64_t> out;
    int n = child_count(id);
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(child(id, i));
    return out;
}

int32_t TruncatedTree::last_label(int64_t id) const {
    if (id == 0) return 0;
    int h = height_of(id);
    int64_t rank = (id - offsets_[static_cast<size_t>(h)]) % branching_;
    return last_label(parent(id)) + 1 + static_cast<int32_t>(rank);
}

Vertex TruncatedTree::payload(int64_t id) const {
    std::vector<int32_t> labels;
    int64_t cur = id;
    while (cur != 0) {
        labels.push_back(last_label(cur));
        cur = parent(cur);
    }
    std::reverse(labels.begin(), labels.end());
    return Vertex::unchecked(std::move(labels));
}

bool TruncatedTree::contains(const Vertex& v) const { return index_of(v) >= 0; }

int64_t TruncatedTree::index_of(const Vertex& v) const {
    if (v.height() > height_cap_) return -1;
    int64_t id = 0;
    int32_t prev = 0;
    for (int32_t x : v.labels()) {
        int32_t step = x - prev - 1;  // 0-based child rank
        if (step < 0 || step >= branching_) return -1;
        id = child(id, step);
        prev = x;
    }
    return id;
}

TruncatedTree enumerate_truncation(int height_cap, int branching, int64_t vertex_budget) {
    return TruncatedTree(height_cap, branching, vertex_budget);
}

}  // namespace betaforge
