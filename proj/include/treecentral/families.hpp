#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treecentral/tree.hpp"

namespace treecentral {

enum class Family { rgood, two_per_level, caterpillar, crg };

[[nodiscard]] std::string family_name(Family f);

/// Thrown when a generator is asked for a size or parameter it cannot build.
class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters of the crg tree: an rgood tree on l vertices glued by its root
/// to an end of a longest path of a binary caterpillar on n - l + 1 vertices.
struct CrgSpec {
    int n = 0;  // even, >= 4
    int l = 0;  // odd, 3 <= l < n

    /// Throws FamilyError naming the violated constraint.
    void validate() const;

    /// Label of the rgood root on the spine: (n - l + 3) / 2.
    [[nodiscard]] int root_label() const noexcept { return (n - l + 3) / 2; }
};

/// A generated tree plus the spine numbering 1..v and the heavier-branch
/// child v' of the rgood root where one exists.
struct LabeledFamilyTree {
    Tree tree;
    Family family = Family::caterpillar;
    int n = 0;
    int l = 0;                       // crg only
    std::vector<VertexId> spine;     // spine[k - 1] is the vertex labelled k
    std::optional<VertexId> v_prime; // crg only

    /// Vertex carrying spine label k (1-based).
    [[nodiscard]] VertexId label(int k) const { return spine.at(static_cast<std::size_t>(k - 1)); }
    /// Last spine label; the rgood root for crg trees.
    [[nodiscard]] VertexId v() const { return spine.back(); }
};

/// Rooted binary tree with leaf heights differing by at most one. Levels are
/// filled in BFS id order; the parents of the deepest leaves are the last
/// vertices of the level above. Root is vertex 0. Requires odd n >= 1.
[[nodiscard]] RootedView make_rgood(int n);

/// Child of the root on a branch with the most vertices; the first child on ties.
/// Requires a root with two children.
[[nodiscard]] VertexId heavier_child(const RootedView& rooted);

/// Rooted binary tree with two vertices on every level below the root.
/// Root is vertex 0. Requires odd n >= 1.
[[nodiscard]] RootedView make_two_per_level(int n);

/// Binary caterpillar on even n >= 4: spine labelled 1..n/2+1, a pendant on
/// every internal spine vertex.
[[nodiscard]] LabeledFamilyTree make_caterpillar(int n);

/// Spine vertices get ids 0..v-1 (label k is id k-1), then the caterpillar
/// pendants, then the non-root rgood vertices in BFS order.
[[nodiscard]] LabeledFamilyTree make_crg(const CrgSpec& spec);

/// All crg trees on n vertices, l = 3, 5, ..., n - 1. Isomorphic duplicates kept.
[[nodiscard]] std::vector<LabeledFamilyTree> crg_family(int n);

}  // namespace treecentral
