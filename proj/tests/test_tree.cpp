#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "treecentral/tree.hpp"

using namespace treecentral;

namespace {

Tree path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Tree::from_edges(static_cast<std::size_t>(n), edges);
}

Tree star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Tree::from_edges(static_cast<std::size_t>(leaves + 1), edges);
}

}  // namespace

TEST_CASE("from_edges rejects non-trees") {
    std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Tree::from_edges(4, cycle), TreeError);
    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Tree::from_edges(2, loop), TreeError);
    std::vector<Edge> out_of_range{{0, 5}};
    CHECK_THROWS_AS(Tree::from_edges(2, out_of_range), TreeError);
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Tree::from_edges(3, dup), TreeError);
    CHECK_THROWS_AS(Tree::from_edges(0, std::vector<Edge>{}), TreeError);
}

TEST_CASE("accessors") {
    Tree t = star(3);
    CHECK(t.size() == 4);
    CHECK(t.degree(0) == 3);
    CHECK(t.adjacent(0, 2));
    CHECK_FALSE(t.adjacent(1, 2));
    CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS((void)t.neighbors(9), TreeError);
}

TEST_CASE("binary validation reports the offending vertex") {
    CHECK(validate_binary(star(3)));
    auto bad = validate_binary(path(4));
    CHECK_FALSE(bad);
    REQUIRE(bad.vertex.has_value());
    CHECK(bad.degree == 2);
    CHECK_FALSE(bad.reason.empty());

    auto four = validate_binary(star(4));
    CHECK_FALSE(four);
    CHECK(four.vertex == 0);
    CHECK(four.degree == 4);
}

TEST_CASE("rooted binary validation") {
    // root 0 with two leaf children
    RootedView cherry(path(3), 1);
    CHECK(validate_rooted_binary(cherry));
    RootedView off_center(path(3), 0);
    CHECK_FALSE(validate_rooted_binary(off_center));
    // root of degree 2, inner vertex of degree 3
    std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {1, 4}};
    RootedView five(Tree::from_edges(5, e), 0);
    CHECK(validate_rooted_binary(five));
    CHECK(five.height() == 2);
    CHECK(five.level(3) == 2);
    CHECK(five.parent(3) == 1);
    CHECK_FALSE(five.parent(0).has_value());
    CHECK(five.children(0).size() == 2);
}

TEST_CASE("distances on a path") {
    Tree p = path(7);
    CHECK(diameter(p) == 6);
    CHECK(radius(p) == 3);
    CHECK(center_by_leaf_stripping(p) == VertexSet{3});
    CHECK(center_by_leaf_stripping(path(6)) == VertexSet{2, 3});
    CHECK(path_between(p, 5, 2) == std::vector<VertexId>{5, 4, 3, 2});
    std::vector<VertexId> a{0, 1}, b{5, 6};
    CHECK(set_distance(p, a, b) == 4);
    std::vector<VertexId> overlap{1, 5};
    CHECK(set_distance(p, a, overlap) == 0);
    std::vector<VertexId> none;
    CHECK_THROWS_AS((void)set_distance(p, none, a), TreeError);
}

TEST_CASE("single vertex") {
    Tree t;
    CHECK(t.size() == 1);
    CHECK(eccentricities(t) == std::vector<std::size_t>{0});
    CHECK(center_by_leaf_stripping(t) == VertexSet{0});
}

TEST_CASE("random trees: eccentricity, metric axioms, centers") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        Tree t = oracle::random_tree(n, rng);
        REQUIRE(oracle::connected_by_union_find(n, t.edges()));
        auto d = oracle::all_pairs(t);
        auto ecc = eccentricities(t);
        CHECK(ecc == oracle::eccentricities(t));
        for (std::size_t s = 0; s < n; s += 17) CHECK(distances_from(t, static_cast<VertexId>(s)) == d[s]);

        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int k = 0; k < 30; ++k) {
            auto x = pick(rng), y = pick(rng), z = pick(rng);
            CHECK(d[x][y] == d[y][x]);
            CHECK(d[x][z] <= d[x][y] + d[y][z]);
            CHECK((d[x][y] == 0) == (x == y));
            CHECK(path_between(t, static_cast<VertexId>(x), static_cast<VertexId>(y)).size() == d[x][y] + 1);
        }
        auto by_ecc = oracle::arg_best(ecc, std::less<>{});
        CHECK(center_by_leaf_stripping(t) == by_ecc);
        CHECK(by_ecc.size() <= 2);
        if (by_ecc.size() == 2) CHECK(t.adjacent(by_ecc[0], by_ecc[1]));
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 60;
        Tree t = oracle::random_tree(n, rng);
        auto perm = oracle::random_permutation(n, rng);
        Tree r = t.relabeled(perm);
        CHECK(canonical_code(t) == canonical_code(r));
        CHECK(eccentricities(r)[static_cast<std::size_t>(perm[0])] == eccentricities(t)[0]);
        Tree back = tree_from_code(canonical_code(t).code);
        CHECK(back.size() == n);
        CHECK(canonical_code(back) == canonical_code(t));
    }
}

TEST_CASE("canonical code separates non-isomorphic trees") {
    std::set<std::string> codes;
    codes.insert(canonical_code(path(6)).code);
    codes.insert(canonical_code(star(5)).code);
    std::vector<Edge> spider{{0, 1}, {1, 2}, {0, 3}, {0, 4}, {4, 5}};
    codes.insert(canonical_code(Tree::from_edges(6, spider)).code);
    CHECK(codes.size() == 3);
    CHECK_THROWS_AS((void)tree_from_code("(()"), TreeError);
    CHECK_THROWS_AS((void)tree_from_code("()()"), TreeError);
    CHECK_THROWS_AS((void)tree_from_code("(x)"), TreeError);
}
