// Brute-force reference implementations for tests. Nothing here calls into
// the algorithms it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "treecentral/tree.hpp"

namespace oracle {

using treecentral::Edge;
using treecentral::Tree;
using treecentral::VertexId;

/// f[v] for every v by enumerating connected vertex subsets. Each subset is
/// grown from its smallest vertex (the seed); `frontier` holds candidates not
/// yet decided and `banned` holds vertices already branched on, so every
/// connected subset is produced exactly once. Needs n <= 64.
inline std::vector<std::uint64_t> subtree_counts(const Tree& t) {
    const std::size_t n = t.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (VertexId u : t.neighbors(static_cast<VertexId>(v))) adj[v] |= std::uint64_t{1} << u;
    }
    std::vector<std::uint64_t> f(n, 0);
    auto record = [&](std::uint64_t set) {
        for (std::size_t v = 0; v < n; ++v) {
            if (set >> v & 1) ++f[v];
        }
    };
    auto grow = [&](auto&& self, std::uint64_t set, std::uint64_t frontier, std::uint64_t banned) -> void {
        record(set);
        while (frontier) {
            const int w = std::countr_zero(frontier);
            const std::uint64_t bit = std::uint64_t{1} << w;
            frontier &= ~bit;
            const std::uint64_t next_set = set | bit;
            const std::uint64_t next_frontier = (frontier | adj[w]) & ~next_set & ~banned;
            self(self, next_set, next_frontier, banned);
            banned |= bit;
        }
    };
    for (std::size_t seed = 0; seed < n; ++seed) {
        const std::uint64_t below = (std::uint64_t{1} << seed) - 1;  // smaller vertices never join
        const std::uint64_t bit = std::uint64_t{1} << seed;
        grow(grow, bit, adj[seed] & ~below, below);
    }
    return f;
}

/// All-pairs distances by BFS from every vertex.
inline std::vector<std::vector<std::size_t>> all_pairs(const Tree& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<VertexId> queue{static_cast<VertexId>(s)};
        d[s][s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            VertexId x = queue[i];
            for (VertexId y : t.neighbors(x)) {
                if (d[s][y] == SIZE_MAX) {
                    d[s][y] = d[s][x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return d;
}

inline std::vector<std::size_t> eccentricities(const Tree& t) {
    auto d = all_pairs(t);
    std::vector<std::size_t> e(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) e[v] = *std::max_element(d[v].begin(), d[v].end());
    return e;
}

/// Wt(v) by materializing every branch at v (v plus one component of T - v)
/// and counting the edges with both ends inside it.
inline std::vector<std::size_t> weights(const Tree& t) {
    const std::size_t n = t.size();
    std::vector<std::size_t> w(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (VertexId start : t.neighbors(static_cast<VertexId>(v))) {
            std::vector<char> in(n, 0);
            in[v] = 1;
            in[start] = 1;
            std::vector<VertexId> stack{start};
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                for (VertexId y : t.neighbors(x)) {
                    if (!in[y]) {
                        in[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            std::size_t edges = 0;
            for (const auto& e : t.edges()) edges += in[e.u] && in[e.v];
            w[v] = std::max(w[v], edges);
        }
    }
    return w;
}

template <typename T, typename Better>
std::vector<VertexId> arg_best(const std::vector<T>& xs, Better better) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (out.empty() || better(xs[i], xs[out[0]])) out.assign(1, static_cast<VertexId>(i));
        else if (!better(xs[out[0]], xs[i])) out.push_back(static_cast<VertexId>(i));
    }
    return out;
}

/// Union-find connectivity over the edge list.
inline bool connected_by_union_find(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const auto& e : edges) {
        auto a = find(static_cast<std::size_t>(e.u));
        auto b = find(static_cast<std::size_t>(e.v));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

/// Uniform labelled tree from a random Pruefer sequence.
inline Tree random_tree(std::size_t n, std::mt19937& rng) {
    if (n == 1) return Tree();
    if (n == 2) {
        Edge e{0, 1};
        return Tree::from_edges(2, std::vector<Edge>{e});
    }
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::vector<int> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::vector<Edge> edges;
    for (int c : code) {
        for (std::size_t leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.push_back({static_cast<VertexId>(leaf), c});
                --degree[leaf];
                --degree[c];
                break;
            }
        }
    }
    std::vector<VertexId> last;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) last.push_back(static_cast<VertexId>(v));
    }
    edges.push_back({last[0], last[1]});
    return Tree::from_edges(n, edges);
}

/// Random rooted binary tree on odd n (root 0) by splitting random leaves.
inline std::vector<Edge> random_rooted_binary_edges(int n, std::mt19937& rng) {
    std::vector<Edge> edges;
    std::vector<VertexId> leaves{0};
    VertexId next = 1;
    while (next < n) {
        std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
        const std::size_t i = pick(rng);
        const VertexId leaf = leaves[i];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
        edges.push_back({leaf, next});
        edges.push_back({leaf, next + 1});
        leaves.push_back(next);
        leaves.push_back(next + 1);
        next += 2;
    }
    return edges;
}

/// Random binary tree on even n by splitting random leaves of a single edge.
inline Tree random_binary_tree(int n, std::mt19937& rng) {
    std::vector<Edge> edges{{0, 1}};
    std::vector<VertexId> leaves{0, 1};
    VertexId next = 2;
    while (next < n) {
        std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
        const std::size_t i = pick(rng);
        const VertexId leaf = leaves[i];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
        edges.push_back({leaf, next});
        edges.push_back({leaf, next + 1});
        leaves.push_back(next);
        leaves.push_back(next + 1);
        next += 2;
    }
    return Tree::from_edges(static_cast<std::size_t>(n), edges);
}

/// Random permutation of 0..n-1.
inline std::vector<VertexId> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<VertexId> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
