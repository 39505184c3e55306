#include "treecentral/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace treecentral {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string describe_degree(VertexId v, std::size_t deg) {
    return "vertex " + std::to_string(v) + " has degree " + std::to_string(deg);
}

}  // namespace

Tree::Tree() : adjacency_(1) {}

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) {
        throw TreeError("a tree needs at least one vertex");
    }
    if (edges.size() != n - 1) {
        throw TreeError("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    }
    std::vector<std::vector<VertexId>> adjacency(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw TreeError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw TreeError("self-loop at vertex " + std::to_string(u));
        }
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw TreeError("duplicate edge at vertex " + std::to_string(v));
        }
    }
    // n-1 edges plus connectivity implies acyclic.
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : adjacency[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != n) {
        throw TreeError("graph is not connected");
    }
    return Tree(std::move(adjacency));
}

std::size_t Tree::checked(VertexId v) const {
    if (!contains(v)) {
        throw TreeError("vertex " + std::to_string(v) + " out of range");
    }
    return static_cast<std::size_t>(v);
}

bool Tree::adjacent(VertexId u, VertexId v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(size() - 1);
    for (std::size_t u = 0; u < size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (static_cast<VertexId>(u) < v) {
                out.push_back({static_cast<VertexId>(u), v});
            }
        }
    }
    return out;
}

Tree Tree::relabeled(std::span<const VertexId> perm) const {
    if (perm.size() != size()) {
        throw TreeError("permutation size mismatch");
    }
    std::vector<Edge> mapped;
    for (const auto& e : edges()) {
        mapped.push_back({perm[e.u], perm[e.v]});
    }
    return from_edges(size(), mapped);
}

RootedView::RootedView(Tree tree, VertexId root)
    : tree_(std::move(tree)), root_(root) {
    if (!tree_.contains(root)) {
        throw TreeError("root " + std::to_string(root) + " out of range");
    }
    const std::size_t n = tree_.size();
    parent_.assign(n, -1);
    children_.assign(n, {});
    level_.assign(n, 0);
    order_.reserve(n);
    order_.push_back(root);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        VertexId x = order_[i];
        for (VertexId y : tree_.neighbors(x)) {
            if (y == parent_[x]) continue;
            parent_[y] = x;
            level_[y] = level_[x] + 1;
            children_[x].push_back(y);
            order_.push_back(y);
        }
    }
    height_ = level_[order_.back()];
}

std::optional<VertexId> RootedView::parent(VertexId v) const {
    VertexId p = parent_.at(v);
    if (p < 0) return std::nullopt;
    return p;
}

BinaryCheck validate_binary(const Tree& t) {
    for (std::size_t v = 0; v < t.size(); ++v) {
        auto deg = t.degree(static_cast<VertexId>(v));
        if (deg != 1 && deg != 3) {
            return {false, static_cast<VertexId>(v), deg,
                    describe_degree(static_cast<VertexId>(v), deg) + " (expected 1 or 3)"};
        }
    }
    return {};
}

BinaryCheck validate_rooted_binary(const RootedView& view) {
    const Tree& t = view.tree();
    if (t.size() == 1) return {};
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto v = static_cast<VertexId>(i);
        auto deg = t.degree(v);
        if (v == view.root()) {
            if (deg != 2) {
                return {false, v, deg, "root " + describe_degree(v, deg) + " (expected 2)"};
            }
        } else if (deg != 1 && deg != 3) {
            return {false, v, deg, describe_degree(v, deg) + " (expected 1 or 3)"};
        }
    }
    return {};
}

std::vector<std::size_t> distances_from(const Tree& t, VertexId src) {
    if (!t.contains(src)) {
        throw TreeError("source vertex " + std::to_string(src) + " out of range");
    }
    std::vector<std::size_t> dist(t.size(), kUnreached);
    std::vector<VertexId> queue{src};
    dist[src] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId x = queue[i];
        for (VertexId y : t.neighbors(x)) {
            if (dist[y] == kUnreached) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<std::size_t> eccentricities(const Tree& t) {
    // In a tree the farthest vertex from any v is an end of some diameter path.
    auto from0 = distances_from(t, 0);
    auto a = static_cast<VertexId>(std::max_element(from0.begin(), from0.end()) - from0.begin());
    auto from_a = distances_from(t, a);
    auto b = static_cast<VertexId>(std::max_element(from_a.begin(), from_a.end()) - from_a.begin());
    auto from_b = distances_from(t, b);
    std::vector<std::size_t> ecc(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) {
        ecc[v] = std::max(from_a[v], from_b[v]);
    }
    return ecc;
}

std::size_t diameter(const Tree& t) {
    auto ecc = eccentricities(t);
    return *std::max_element(ecc.begin(), ecc.end());
}

std::size_t radius(const Tree& t) {
    auto ecc = eccentricities(t);
    return *std::min_element(ecc.begin(), ecc.end());
}

std::vector<VertexId> path_between(const Tree& t, VertexId from, VertexId to) {
    RootedView rooted(t, to);
    std::vector<VertexId> path{from};
    while (path.back() != to) {
        path.push_back(*rooted.parent(path.back()));
    }
    return path;
}

std::size_t set_distance(const Tree& t, std::span<const VertexId> xs, std::span<const VertexId> ys) {
    if (xs.empty() || ys.empty()) {
        throw TreeError("set distance needs two nonempty vertex sets");
    }
    // Multi-source BFS from xs.
    std::vector<std::size_t> dist(t.size(), kUnreached);
    std::vector<VertexId> queue;
    for (VertexId x : xs) {
        if (!t.contains(x)) throw TreeError("vertex " + std::to_string(x) + " out of range");
        if (dist[x] != 0) {
            dist[x] = 0;
            queue.push_back(x);
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId x = queue[i];
        for (VertexId y : t.neighbors(x)) {
            if (dist[y] == kUnreached) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    std::size_t best = kUnreached;
    for (VertexId y : ys) {
        if (!t.contains(y)) throw TreeError("vertex " + std::to_string(y) + " out of range");
        best = std::min(best, dist[y]);
    }
    return best;
}

VertexSet center_by_leaf_stripping(const Tree& t) {
    const std::size_t n = t.size();
    if (n <= 2) {
        VertexSet all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<VertexId> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = t.degree(static_cast<VertexId>(v));
        if (deg[v] == 1) layer.push_back(static_cast<VertexId>(v));
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexId> next;
        for (VertexId leaf : layer) {
            deg[leaf] = 0;
            for (VertexId y : t.neighbors(leaf)) {
                if (deg[y] > 0 && --deg[y] == 1) next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Tree& t, VertexId root) {
    RootedView view(t, root);
    std::vector<std::string> code(t.size());
    auto order = view.bfs_order();
    std::vector<std::string> parts;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        parts.clear();
        for (VertexId c : view.children(v)) {
            parts.push_back(std::move(code[c]));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p;
        s += ')';
        code[v] = std::move(s);
    }
    return std::move(code[root]);
}

CanonicalCode canonical_code(const Tree& t) {
    auto centre = center_by_leaf_stripping(t);
    std::string best = rooted_code(t, centre.front());
    if (centre.size() == 2) {
        best = std::min(best, rooted_code(t, centre.back()));
    }
    return {std::move(best)};
}

Tree tree_from_code(const std::string& code) {
    std::vector<Edge> edges;
    std::vector<VertexId> stack;
    VertexId next = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        char ch = code[i];
        if (ch == '(') {
            if (!stack.empty()) {
                edges.push_back({stack.back(), next});
            } else if (next != 0) {
                throw TreeError("code has more than one root at offset " + std::to_string(i));
            }
            stack.push_back(next++);
        } else if (ch == ')') {
            if (stack.empty()) throw TreeError("unbalanced code at offset " + std::to_string(i));
            stack.pop_back();
        } else {
            throw TreeError("unexpected character in code at offset " + std::to_string(i));
        }
    }
    if (!stack.empty() || next == 0) {
        throw TreeError("unbalanced code");
    }
    return Tree::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace treecentral
