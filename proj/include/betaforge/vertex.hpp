#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace betaforge {

// A vertex of the countably branching tree: a strictly increasing tuple of
// positive 32-bit integers. The empty tuple is the root.
class Vertex {
public:
    Vertex() = default;

    // Validates strict increase and positivity; throws ValidationError.
    static Vertex make(std::vector<int32_t> labels);

    // Skips validation; for internal construction from already-valid data.
    static Vertex unchecked(std::vector<int32_t> labels);

    const std::vector<int32_t>& labels() const { return labels_; }
    int height() const { return static_cast<int>(labels_.size()); }
    bool is_root() const { return labels_.empty(); }

    // 0 for the root, so that "next admissible label" arithmetic is uniform.
    int32_t max_label() const { return labels_.empty() ? 0 : labels_.back(); }
    int32_t min_label() const { return labels_.empty() ? 0 : labels_.front(); }
    int32_t label(int i) const { return labels_[static_cast<size_t>(i)]; }

    Vertex prefix(int len) const;
    Vertex extended(const std::vector<int32_t>& block) const;  // appends, validates

    // "[1,3,7]"; the root prints as "[]".
    std::string str() const;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
        return a.labels_ <=> b.labels_;
    }

private:
    std::vector<int32_t> labels_;
};

// make_vertex per the module contract; alias of Vertex::make.
inline Vertex make_vertex(std::vector<int32_t> labels) { return Vertex::make(std::move(labels)); }

// True iff `a` is a proper prefix of `d`.
bool is_ancestor(const Vertex& a, const Vertex& d);

// Greatest common ancestor: the longest common prefix. gca(v, v) == v.
Vertex gca(const Vertex& a, const Vertex& b);

// Shortest-path metric: |a| + |b| - 2|gca(a, b)|.
int tree_distance(const Vertex& a, const Vertex& b);

// Parses the textual form "[1,3,7]" / "[]"; throws ValidationError.
Vertex parse_vertex(const std::string& text);

struct VertexHash {
    size_t operator()(const Vertex& v) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (int32_t x : v.labels()) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(x)) + 0x9e3779b9ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace betaforge
