#include "betaforge/vertex.hpp"

#include <algorithm>
#include <sstream>

#include "betaforge/errors.hpp"

namespace betaforge {

Vertex Vertex::make(std::vector<int32_t> labels) {
    int32_t prev = 0;
    for (int32_t x : labels) {
        if (x <= 0) {
            throw ValidationError("vertex labels must be positive, got " + std::to_string(x));
        }
        if (x <= prev) {
            throw ValidationError("vertex labels must be strictly increasing, got " +
                                  std::to_string(prev) + " then " + std::to_string(x));
        }
        prev = x;
    }
    Vertex v;
    v.labels_ = std::move(labels);
    return v;
}

Vertex Vertex::unchecked(std::vector<int32_t> labels) {
    Vertex v;
    v.labels_ = std::move(labels);
    return v;
}

Vertex Vertex::prefix(int len) const {
    return Vertex::unchecked({labels_.begin(), labels_.begin() + len});
}

Vertex Vertex::extended(const std::vector<int32_t>& block) const {
    std::vector<int32_t> out = labels_;
    out.insert(out.end(), block.begin(), block.end());
    return Vertex::make(std::move(out));
}

std::string Vertex::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (i) os << ',';
        os << labels_[i];
    }
    os << ']';
    return os.str();
}

bool is_ancestor(const Vertex& a, const Vertex& d) {
    if (a.height() >= d.height()) return false;
    return std::equal(a.labels().begin(), a.labels().end(), d.labels().begin());
}

Vertex gca(const Vertex& a, const Vertex& b) {
    const auto& x = a.labels();
    const auto& y = b.labels();
    size_t n = std::min(x.size(), y.size());
    size_t k = 0;
    while (k < n && x[k] == y[k]) ++k;
    return Vertex::unchecked({x.begin(), x.begin() + k});
}

int tree_distance(const Vertex& a, const Vertex& b) {
    return a.height() + b.height() - 2 * gca(a, b).height();
}

Vertex parse_vertex(const std::string& text) {
    size_t lo = text.find('[');
    size_t hi = text.rfind(']');
    if (lo == std::string::npos || hi == std::string::npos || hi < lo) {
        throw ValidationError("vertex must look like [1,2,3], got: " + text);
    }
    std::string body = text.substr(lo + 1, hi - lo - 1);
    std::vector<int32_t> labels;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        try {
            labels.push_back(static_cast<int32_t>(std::stol(item.substr(b, e - b + 1))));
        } catch (const std::exception&) {
            throw ValidationError("bad vertex label: " + item);
        }
    }
    return Vertex::make(std::move(labels));
}

}  // namespace betaforge
