#include "treecentral/central_parts.hpp"

#include <algorithm>

#include "treecentral/counting.hpp"

namespace treecentral {

namespace {

template <typename T, typename Better>
VertexSet arg_best(const std::vector<T>& values, Better better) {
    VertexSet out;
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (out.empty() || better(values[v], values[out.front()])) {
            out.assign(1, static_cast<VertexId>(v));
        } else if (!better(values[out.front()], values[v])) {
            out.push_back(static_cast<VertexId>(v));
        }
    }
    return out;
}

std::vector<std::size_t> subtree_sizes(const RootedView& rooted) {
    std::vector<std::size_t> size(rooted.size(), 1);
    auto order = rooted.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (auto p = rooted.parent(*it)) size[*p] += size[*it];
    }
    return size;
}

}  // namespace

VertexSet center(const Tree& t) {
    return arg_best(eccentricities(t), std::less<>{});
}

std::vector<std::size_t> vertex_weights(const Tree& t) {
    const std::size_t n = t.size();
    RootedView rooted(t, 0);
    const auto size = subtree_sizes(rooted);
    std::vector<std::size_t> weight(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<VertexId>(i);
        std::size_t w = n - size[v];  // component through the parent
        for (VertexId c : rooted.children(v)) w = std::max(w, size[c]);
        weight[v] = w;
    }
    return weight;
}

VertexSet centroid(const Tree& t) {
    return arg_best(vertex_weights(t), std::less<>{});
}

VertexSet subtree_core(const Tree& t) { return subtree_profile(t).core; }

CentralParts central_parts(const Tree& t) {
    CentralParts parts;
    parts.center = center(t);
    parts.centroid = centroid(t);
    parts.subtree_core = subtree_core(t);
    parts.d_c_cd = set_distance(t, parts.center, parts.centroid);
    parts.d_c_sc = set_distance(t, parts.center, parts.subtree_core);
    parts.d_cd_sc = set_distance(t, parts.centroid, parts.subtree_core);
    return parts;
}

EdgeSideReport edge_side_report(const Tree& t, Edge e) {
    if (!t.contains(e.u) || !t.contains(e.v) || !t.adjacent(e.u, e.v)) {
        throw TreeError("(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not an edge");
    }
    // Rooted at u, the subtree below v is T_e(v); rooted at v, the subtree below u is T_e(u).
    RootedView at_u(t, e.u);
    RootedView at_v(t, e.v);
    EdgeSideReport out;
    out.edge = e;
    out.size_v = subtree_sizes(at_u)[e.v];
    out.size_u = t.size() - out.size_v;
    out.count_v = downward_counts(at_u)[e.v];
    out.count_u = downward_counts(at_v)[e.u];
    return out;
}

std::vector<EdgeSideReport> all_edge_side_reports(const Tree& t) {
    RootedView rooted(t, 0);
    const auto size = subtree_sizes(rooted);
    const auto counts = rerooted_counts(rooted);
    std::vector<EdgeSideReport> out;
    for (const auto& e : t.edges()) {
        // Rooted at 0, one endpoint is the parent of the other.
        const bool u_is_parent = rooted.parent(e.v) == e.u;
        const VertexId child = u_is_parent ? e.v : e.u;
        EdgeSideReport r;
        r.edge = e;
        const std::size_t child_size = size[child];
        const std::size_t parent_size = t.size() - child_size;
        const BigCount& child_count = counts.down[child];
        const BigCount& parent_count = counts.up[child];
        r.size_u = u_is_parent ? parent_size : child_size;
        r.size_v = u_is_parent ? child_size : parent_size;
        r.count_u = u_is_parent ? parent_count : child_count;
        r.count_v = u_is_parent ? child_count : parent_count;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace treecentral
