#include "treecentral/enumeration.hpp"

#include <algorithm>
#include <map>

namespace treecentral {

RootedShapeCatalog::RootedShapeCatalog(int max_size) : shapes_(static_cast<std::size_t>(std::max(max_size, 1)) + 1) {
    shapes_[1].push_back({});
    for (int s = 3; s <= max_size; s += 2) {
        auto& out = shapes_[s];
        for (int a = 1; a <= (s - 1) / 2; a += 2) {
            const int b = s - 1 - a;
            for (std::size_t i = 0; i < shapes_[a].size(); ++i) {
                for (std::size_t j = (a == b ? i : 0); j < shapes_[b].size(); ++j) {
                    out.push_back({a, i, b, j});
                }
            }
        }
    }
}

std::size_t RootedShapeCatalog::count(int size) const {
    if (size < 1 || static_cast<std::size_t>(size) >= shapes_.size() || size % 2 == 0) return 0;
    return shapes_[size].size();
}

void RootedShapeCatalog::append_edges(int size, std::size_t index, VertexId self, VertexId& next,
                                      std::vector<Edge>& edges) const {
    if (size == 1) return;
    const Shape& sh = shapes_[size][index];
    const VertexId left = next++;
    edges.push_back({self, left});
    append_edges(sh.left_size, sh.left, left, next, edges);
    const VertexId right = next++;
    edges.push_back({self, right});
    append_edges(sh.right_size, sh.right, right, next, edges);
}

RootedView RootedShapeCatalog::build(int size, std::size_t index) const {
    if (index >= count(size)) throw EnumerationError("shape index out of range");
    std::vector<Edge> edges;
    VertexId next = 1;
    append_edges(size, index, 0, next, edges);
    return RootedView(Tree::from_edges(static_cast<std::size_t>(size), edges), 0);
}

RootedBinaryStream::RootedBinaryStream(int n, std::shared_ptr<const RootedShapeCatalog> catalog)
    : n_(n), catalog_(std::move(catalog)) {}

std::optional<RootedView> RootedBinaryStream::next() {
    if (index_ >= catalog_->count(n_)) return std::nullopt;
    return catalog_->build(n_, index_++);
}

FreeBinaryStream::FreeBinaryStream(int n, std::shared_ptr<const RootedShapeCatalog> catalog)
    : n_(n), catalog_(std::move(catalog)) {}

void FreeBinaryStream::reset() {
    index_ = 0;
    seen_.clear();
}

std::optional<Tree> FreeBinaryStream::next() {
    const int rooted_size = n_ - 1;
    while (index_ < catalog_->count(rooted_size)) {
        RootedView base = catalog_->build(rooted_size, index_++);
        auto edges = base.tree().edges();
        edges.push_back({base.root(), static_cast<VertexId>(rooted_size)});
        Tree t = Tree::from_edges(static_cast<std::size_t>(n_), edges);
        if (seen_.insert(canonical_code(t)).second) return t;
    }
    return std::nullopt;
}

RootedBinaryStream enumerate_rooted_binary(int n, int cap) {
    if (n < 1 || n % 2 == 0) {
        throw EnumerationError("rooted binary trees need an odd vertex count, got " + std::to_string(n));
    }
    if (n > cap) {
        throw EnumerationError("n=" + std::to_string(n) + " exceeds the rooted enumeration cap " +
                               std::to_string(cap));
    }
    return RootedBinaryStream(n, std::make_shared<const RootedShapeCatalog>(n));
}

FreeBinaryStream enumerate_free_binary(int n, int cap) {
    if (n < 4 || n % 2 != 0) {
        throw EnumerationError("binary trees are enumerated for even n >= 4, got " + std::to_string(n));
    }
    if (n > cap) {
        throw EnumerationError("n=" + std::to_string(n) + " exceeds the free enumeration cap " +
                               std::to_string(cap));
    }
    return FreeBinaryStream(n, std::make_shared<const RootedShapeCatalog>(n - 1));
}

std::vector<Tree> all_free_binary(int n, int cap) {
    auto stream = enumerate_free_binary(n, cap);
    std::vector<Tree> out;
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<Tree> free_binary_by_leaf_expansion(int n) {
    if (n < 2 || n % 2 != 0) {
        throw EnumerationError("leaf expansion needs even n >= 2, got " + std::to_string(n));
    }
    std::map<CanonicalCode, Tree> level;
    Edge first{0, 1};
    Tree k2 = Tree::from_edges(2, std::span<const Edge>(&first, 1));
    level.emplace(canonical_code(k2), k2);
    for (int size = 2; size < n; size += 2) {
        std::map<CanonicalCode, Tree> grown;
        for (const auto& [code, t] : level) {
            const auto base = t.edges();
            for (std::size_t v = 0; v < t.size(); ++v) {
                if (t.degree(static_cast<VertexId>(v)) != 1) continue;
                auto edges = base;
                edges.push_back({static_cast<VertexId>(v), size});
                edges.push_back({static_cast<VertexId>(v), size + 1});
                Tree bigger = Tree::from_edges(static_cast<std::size_t>(size + 2), edges);
                auto c = canonical_code(bigger);
                grown.try_emplace(std::move(c), std::move(bigger));
            }
        }
        level = std::move(grown);
    }
    std::vector<Tree> out;
    for (auto& [code, t] : level) out.push_back(std::move(t));
    return out;
}

}  // namespace treecentral
