#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "treecentral/bigcount.hpp"
#include "treecentral/tree.hpp"

namespace treecentral {

/// Vertices of minimum eccentricity, ascending.
[[nodiscard]] VertexSet center(const Tree& t);

/// Wt(v): the most edges in any branch at v. The branch through neighbour u
/// has exactly as many edges as the component of T - v containing u has vertices.
[[nodiscard]] std::vector<std::size_t> vertex_weights(const Tree& t);

/// Vertices of minimum weight, ascending.
[[nodiscard]] VertexSet centroid(const Tree& t);

/// Vertices maximizing the number of subtrees containing them, ascending.
[[nodiscard]] VertexSet subtree_core(const Tree& t);

struct CentralParts {
    VertexSet center;
    VertexSet centroid;
    VertexSet subtree_core;
    std::size_t d_c_cd = 0;   // d(center, centroid)
    std::size_t d_c_sc = 0;   // d(center, subtree core)
    std::size_t d_cd_sc = 0;  // d(centroid, subtree core)
};

[[nodiscard]] CentralParts central_parts(const Tree& t);

/// Sizes and root counts of the two components of T - e.
struct EdgeSideReport {
    Edge edge;
    std::size_t size_u = 0;   // |V(T_e(u))|
    std::size_t size_v = 0;   // |V(T_e(v))|
    BigCount count_u;         // f_{T_e(u)}(u)
    BigCount count_v;         // f_{T_e(v)}(v)
};

/// Throws TreeError when {u, v} is not an edge of t.
[[nodiscard]] EdgeSideReport edge_side_report(const Tree& t, Edge e);

/// Side reports for every edge of t in ascending edge order, computed in one pass.
[[nodiscard]] std::vector<EdgeSideReport> all_edge_side_reports(const Tree& t);

}  // namespace treecentral
