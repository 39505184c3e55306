#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "treecentral/tree.hpp"

namespace treecentral {

inline constexpr int kRootedBinaryCap = 25;
inline constexpr int kFreeBinaryCap = 26;

class EnumerationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Isomorphism classes of rooted binary trees, built bottom-up by size. Each
/// shape on s > 1 vertices is an unordered pair of smaller shapes.
class RootedShapeCatalog {
public:
    /// Shapes for every odd size up to max_size.
    explicit RootedShapeCatalog(int max_size);

    [[nodiscard]] std::size_t count(int size) const;
    /// Shape `index` of the given size as a rooted tree with root 0.
    [[nodiscard]] RootedView build(int size, std::size_t index) const;

private:
    struct Shape {
        int left_size = 0;
        std::size_t left = 0;
        int right_size = 0;
        std::size_t right = 0;
    };
    void append_edges(int size, std::size_t index, VertexId self, VertexId& next, std::vector<Edge>& edges) const;

    std::vector<std::vector<Shape>> shapes_;  // indexed by size
};

/// Single-consumer stream over all rooted binary trees on odd n vertices.
/// Deterministic order; restartable with reset().
class RootedBinaryStream {
public:
    std::optional<RootedView> next();
    void reset() noexcept { index_ = 0; }
    [[nodiscard]] int n() const noexcept { return n_; }

private:
    friend RootedBinaryStream enumerate_rooted_binary(int, int);
    RootedBinaryStream(int n, std::shared_ptr<const RootedShapeCatalog> catalog);

    int n_;
    std::shared_ptr<const RootedShapeCatalog> catalog_;
    std::size_t index_ = 0;
};

/// Single-consumer stream over all non-isomorphic binary trees on even n
/// vertices. Each is a rooted binary tree on n - 1 vertices with a leaf hung
/// on its root, kept when its canonical code is new.
class FreeBinaryStream {
public:
    std::optional<Tree> next();
    void reset();
    [[nodiscard]] int n() const noexcept { return n_; }

private:
    friend FreeBinaryStream enumerate_free_binary(int, int);
    FreeBinaryStream(int n, std::shared_ptr<const RootedShapeCatalog> catalog);

    int n_;
    std::shared_ptr<const RootedShapeCatalog> catalog_;
    std::size_t index_ = 0;
    std::unordered_set<CanonicalCode> seen_;
};

/// Odd 1 <= n <= cap. Throws EnumerationError otherwise.
[[nodiscard]] RootedBinaryStream enumerate_rooted_binary(int n, int cap = kRootedBinaryCap);

/// Even 4 <= n <= cap. Throws EnumerationError otherwise.
[[nodiscard]] FreeBinaryStream enumerate_free_binary(int n, int cap = kFreeBinaryCap);

/// Drains a fresh stream into a vector.
[[nodiscard]] std::vector<Tree> all_free_binary(int n, int cap = kFreeBinaryCap);

/// Independent generator: start from a single edge and repeatedly hang two
/// leaves on a leaf, deduplicating by canonical code at every size. Used to
/// cross-check enumerate_free_binary. Even 2 <= n.
[[nodiscard]] std::vector<Tree> free_binary_by_leaf_expansion(int n);

}  // namespace treecentral
