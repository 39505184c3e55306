#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treecentral {

/// Dense 0-based vertex id.
using VertexId = int;

/// A set of vertices, kept sorted ascending.
using VertexSet = std::vector<VertexId>;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when vertex ids or edge lists do not describe a tree.
class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple tree over vertices 0..n-1 with sorted adjacency lists.
///
/// Construction validates the tree invariants (n-1 distinct edges, no loops,
/// connected). Instances are immutable afterwards.
class Tree {
public:
    /// Single isolated vertex.
    Tree();

    /// Throws TreeError if the edges do not form a tree on n vertices.
    static Tree from_edges(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t size() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(checked(v)); }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(checked(v)).size(); }
    [[nodiscard]] bool contains(VertexId v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
    }
    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const;

    /// All edges with u < v, ascending.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Tree with vertex ids permuted: new id of old vertex v is perm[v].
    [[nodiscard]] Tree relabeled(std::span<const VertexId> perm) const;

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    explicit Tree(std::vector<std::vector<VertexId>> adjacency) : adjacency_(std::move(adjacency)) {}
    std::size_t checked(VertexId v) const;

    std::vector<std::vector<VertexId>> adjacency_;
};

/// A tree together with a designated root and the derived parent/child/level structure.
class RootedView {
public:
    RootedView(Tree tree, VertexId root);

    [[nodiscard]] const Tree& tree() const noexcept { return tree_; }
    [[nodiscard]] VertexId root() const noexcept { return root_; }
    [[nodiscard]] std::size_t size() const noexcept { return tree_.size(); }
    [[nodiscard]] std::optional<VertexId> parent(VertexId v) const;
    [[nodiscard]] std::span<const VertexId> children(VertexId v) const { return children_.at(v); }
    [[nodiscard]] std::size_t level(VertexId v) const { return level_.at(v); }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }

    /// Vertices in BFS order from the root; parents always precede children.
    [[nodiscard]] std::span<const VertexId> bfs_order() const noexcept { return order_; }

private:
    Tree tree_;
    VertexId root_;
    std::vector<VertexId> parent_;  // -1 at the root
    std::vector<std::vector<VertexId>> children_;
    std::vector<std::size_t> level_;
    std::vector<VertexId> order_;
    std::size_t height_ = 0;
};

/// Outcome of a degree validation. Converts to true when valid; otherwise
/// names the first offending vertex and its degree.
struct BinaryCheck {
    bool ok = true;
    std::optional<VertexId> vertex;
    std::size_t degree = 0;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Every vertex has degree 1 or 3. The single vertex tree is rejected.
[[nodiscard]] BinaryCheck validate_binary(const Tree& t);

/// Root has degree 2 (or n == 1); every other vertex has degree 1 or 3.
[[nodiscard]] BinaryCheck validate_rooted_binary(const RootedView& v);

[[nodiscard]] std::vector<std::size_t> distances_from(const Tree& t, VertexId src);
[[nodiscard]] std::vector<std::size_t> eccentricities(const Tree& t);
[[nodiscard]] std::size_t diameter(const Tree& t);
[[nodiscard]] std::size_t radius(const Tree& t);

/// Vertices on the unique path from `from` to `to`, both ends included.
[[nodiscard]] std::vector<VertexId> path_between(const Tree& t, VertexId from, VertexId to);

/// min d(x, y) over x in xs, y in ys. Throws TreeError on an empty set.
[[nodiscard]] std::size_t set_distance(const Tree& t, std::span<const VertexId> xs,
                                       std::span<const VertexId> ys);

/// Center computed by repeatedly deleting all leaves until one or two vertices remain.
[[nodiscard]] VertexSet center_by_leaf_stripping(const Tree& t);

/// Isomorphism-invariant encoding of a free tree as a balanced parenthesis
/// string. Ordered lexicographically so reports can sort by it.
struct CanonicalCode {
    std::string code;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Sorted-children parenthesis encoding of t rooted at `root`.
[[nodiscard]] std::string rooted_code(const Tree& t, VertexId root);

/// Rooted code at the center; for a bicentral tree the smaller of the two.
[[nodiscard]] CanonicalCode canonical_code(const Tree& t);

/// Rebuilds a tree from a rooted code ("()" is a single vertex). Vertices are
/// numbered in preorder with the root as 0.
[[nodiscard]] Tree tree_from_code(const std::string& code);

}  // namespace treecentral

template <>
struct std::hash<treecentral::CanonicalCode> {
    std::size_t operator()(const treecentral::CanonicalCode& c) const noexcept {
        return std::hash<std::string>{}(c.code);
    }
};
