#include "treecentral/families.hpp"

#include <algorithm>

namespace treecentral {

namespace {

void require_odd_positive(int n, const char* what) {
    if (n <= 0 || n % 2 == 0) {
        throw FamilyError(std::string(what) + " needs an odd positive vertex count, got " + std::to_string(n));
    }
}

// Edges of an rgood tree on n vertices in BFS ids, root 0.
std::vector<Edge> rgood_edges(int n) {
    std::vector<Edge> edges;
    if (n == 1) return edges;
    int h = 0;
    while (n > (1 << (h + 1)) - 1) ++h;
    const int full = (1 << h) - 1;  // vertices on levels 0..h-1
    for (int v = 0; v < (1 << (h - 1)) - 1; ++v) {
        edges.push_back({v, 2 * v + 1});
        edges.push_back({v, 2 * v + 2});
    }
    // Level h-1 ends at id full-1; its last `parents` vertices get two leaves each.
    const int parents = (n - full) / 2;
    int next = full;
    for (int v = full - parents; v < full; ++v) {
        edges.push_back({v, next++});
        edges.push_back({v, next++});
    }
    return edges;
}

std::vector<Edge> caterpillar_edges(int n, std::vector<VertexId>& spine) {
    const int spine_len = n / 2 + 1;
    std::vector<Edge> edges;
    spine.clear();
    for (int k = 0; k < spine_len; ++k) spine.push_back(k);
    for (int k = 0; k + 1 < spine_len; ++k) edges.push_back({k, k + 1});
    int next = spine_len;
    for (int k = 1; k + 1 < spine_len; ++k) edges.push_back({k, next++});
    return edges;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::rgood: return "rgood";
        case Family::two_per_level: return "two-per-level";
        case Family::caterpillar: return "caterpillar";
        case Family::crg: return "crg";
    }
    return "unknown";
}

void CrgSpec::validate() const {
    if (n < 4 || n % 2 != 0) {
        throw FamilyError("crg needs an even n >= 4, got n=" + std::to_string(n));
    }
    if (l < 3 || l % 2 == 0 || l >= n) {
        throw FamilyError("crg needs an odd l with 3 <= l < n, got l=" + std::to_string(l) +
                          " for n=" + std::to_string(n));
    }
}

RootedView make_rgood(int n) {
    require_odd_positive(n, "rgood");
    auto edges = rgood_edges(n);
    return RootedView(Tree::from_edges(static_cast<std::size_t>(n), edges), 0);
}

VertexId heavier_child(const RootedView& rooted) {
    auto kids = rooted.children(rooted.root());
    if (kids.size() != 2) {
        throw FamilyError("heavier child needs a root with two children");
    }
    std::vector<std::size_t> size(rooted.size(), 1);
    auto order = rooted.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (auto p = rooted.parent(*it)) size[*p] += size[*it];
    }
    return size[kids[1]] > size[kids[0]] ? kids[1] : kids[0];
}

RootedView make_two_per_level(int n) {
    require_odd_positive(n, "two-per-level");
    std::vector<Edge> edges;
    // Spine 0 -> 2 -> 4 ...; each spine vertex also carries the next odd id as a leaf.
    for (int v = 0; v + 2 < n; v += 2) {
        edges.push_back({v, v + 1});
        edges.push_back({v, v + 2});
    }
    return RootedView(Tree::from_edges(static_cast<std::size_t>(n), edges), 0);
}

LabeledFamilyTree make_caterpillar(int n) {
    if (n < 4 || n % 2 != 0) {
        throw FamilyError("caterpillar needs an even n >= 4, got " + std::to_string(n));
    }
    LabeledFamilyTree out;
    auto edges = caterpillar_edges(n, out.spine);
    out.tree = Tree::from_edges(static_cast<std::size_t>(n), edges);
    out.family = Family::caterpillar;
    out.n = n;
    return out;
}

LabeledFamilyTree make_crg(const CrgSpec& spec) {
    spec.validate();
    LabeledFamilyTree out;
    out.family = Family::crg;
    out.n = spec.n;
    out.l = spec.l;

    const int cat_size = spec.n - spec.l + 1;
    auto edges = caterpillar_edges(cat_size, out.spine);
    const VertexId glue = out.spine.back();

    RootedView rg = make_rgood(spec.l);
    // rgood vertex 0 is the glued root; vertex k >= 1 maps to cat_size + k - 1.
    auto map = [&](VertexId x) { return x == 0 ? glue : cat_size + x - 1; };
    for (const auto& e : rg.tree().edges()) {
        edges.push_back({map(e.u), map(e.v)});
    }
    out.tree = Tree::from_edges(static_cast<std::size_t>(spec.n), edges);
    out.v_prime = map(heavier_child(rg));
    return out;
}

std::vector<LabeledFamilyTree> crg_family(int n) {
    if (n < 4 || n % 2 != 0) {
        throw FamilyError("crg family needs an even n >= 4, got " + std::to_string(n));
    }
    std::vector<LabeledFamilyTree> out;
    for (int l = 3; l < n; l += 2) {
        out.push_back(make_crg({n, l}));
    }
    return out;
}

}  // namespace treecentral
