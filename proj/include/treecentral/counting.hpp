#pragma once

#include <stdexcept>
#include <vector>

#include "treecentral/bigcount.hpp"
#include "treecentral/tree.hpp"

namespace treecentral {

class CountingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of subtrees of the rooted tree that contain each vertex v and lie
/// inside the subtree below v: g(v) = prod over children c of (1 + g(c)).
[[nodiscard]] std::vector<BigCount> downward_counts(const RootedView& rooted);

/// Subtrees containing the root.
[[nodiscard]] BigCount rooted_subtree_count(const RootedView& rooted);

/// Downward counts plus, for every non-root v, up[v] = subtrees containing
/// parent(v) that avoid v (the root count of the parent's side of edge
/// {v, parent(v)}). up[root] is 0.
struct RerootedCounts {
    std::vector<BigCount> down;
    std::vector<BigCount> up;
};

/// Upward contributions use prefix/suffix products over each child list, so
/// no division is needed.
[[nodiscard]] RerootedCounts rerooted_counts(const RootedView& rooted);

/// f[v] = number of subtrees containing v, for every vertex, plus the argmax set.
struct SubtreeProfile {
    std::vector<BigCount> f;
    VertexSet core;
};

/// All f-values by rerooting: f[v] = down[v] * (1 + up[v]).
[[nodiscard]] SubtreeProfile subtree_profile(const Tree& t);

/// Subtrees containing both u and v.
[[nodiscard]] BigCount pair_subtree_count(const Tree& t, VertexId u, VertexId v);

/// 3 * 2^((n-1)/2) - 2, the root count of the two-per-level tree. Odd n >= 1.
[[nodiscard]] BigCount two_per_level_closed_form(int n);

/// A_h with A_0 = 1 and A_h = (A_{h-1} + 1)^2: root count of the complete rgood tree of height h.
[[nodiscard]] BigCount complete_rgood_recurrence(int h);

/// Root count of the rgood tree on n vertices lies in (lower, upper] where
/// lower = A_{h-1}, upper = A_h and h is the tree's height.
struct RootCountBounds {
    int height = 0;
    BigCount lower;
    BigCount upper;
};

/// Odd n >= 3.
[[nodiscard]] RootCountBounds rgood_root_count_bounds(int n);

/// R_l: subtrees of the rgood tree on l vertices containing its root.
[[nodiscard]] BigCount rgood_root_count(int l);

/// Least odd l >= 3 with R_l > 3 * 2^((n-l-1)/2) - 2. Even n >= 12.
[[nodiscard]] int r_threshold(int n);

}  // namespace treecentral
