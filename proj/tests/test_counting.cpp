#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "treecentral/counting.hpp"
#include "treecentral/enumeration.hpp"
#include "treecentral/families.hpp"

using namespace treecentral;

namespace {

std::vector<BigCount> as_big(const std::vector<std::uint64_t>& xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("oracle sanity on tiny trees") {
    // path on 3: f = (3, 4, 3); star K_{1,3}: f = (8, 5, 5, 5)
    std::vector<Edge> p{{0, 1}, {1, 2}};
    CHECK(oracle::subtree_counts(Tree::from_edges(3, p)) == std::vector<std::uint64_t>{3, 4, 3});
    std::vector<Edge> s{{0, 1}, {0, 2}, {0, 3}};
    CHECK(oracle::subtree_counts(Tree::from_edges(4, s)) == std::vector<std::uint64_t>{8, 5, 5, 5});
}

TEST_CASE("profile matches brute force on random trees") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        Tree t = oracle::random_tree(n, rng);
        CHECK(subtree_profile(t).f == as_big(oracle::subtree_counts(t)));
    }
}

TEST_CASE("profile matches brute force on every binary tree up to 14 vertices") {
    for (int n = 4; n <= 14; n += 2) {
        for (const Tree& t : all_free_binary(n)) {
            CHECK(subtree_profile(t).f == as_big(oracle::subtree_counts(t)));
        }
    }
}

TEST_CASE("rerooting equals one rooted evaluation per vertex") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        Tree t = oracle::random_tree(n, rng);
        auto f = subtree_profile(t).f;
        for (std::size_t v = 0; v < n; ++v) {
            CHECK(f[v] == rooted_subtree_count(RootedView(t, static_cast<VertexId>(v))));
        }
    }
}

TEST_CASE("strict concavity along every path of length two") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng() % 80;
        Tree t = oracle::random_tree(n, rng);
        auto f = subtree_profile(t).f;
        for (std::size_t v = 0; v < n; ++v) {
            auto nb = t.neighbors(static_cast<VertexId>(v));
            for (std::size_t i = 0; i < nb.size(); ++i) {
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    CHECK(f[v] + f[v] > f[nb[i]] + f[nb[j]]);
                }
            }
        }
    }
}

TEST_CASE("core has one vertex or two adjacent ones") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Tree t = oracle::random_tree(1 + rng() % 100, rng);
        auto core = subtree_profile(t).core;
        REQUIRE((core.size() == 1 || core.size() == 2));
        if (core.size() == 2) CHECK(t.adjacent(core[0], core[1]));
    }
}

TEST_CASE("pair counts") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        Tree t = oracle::random_tree(n, rng);
        // brute force via subsets containing both endpoints
        std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
        const int u = pick(rng), v = pick(rng);
        std::uint64_t brute = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            if (!(mask >> u & 1) || !(mask >> v & 1)) continue;
            std::vector<Edge> inside;
            std::vector<int> id(n, -1);
            int k = 0;
            for (std::size_t x = 0; x < n; ++x) if (mask >> x & 1) id[x] = k++;
            for (const auto& e : t.edges()) {
                if (id[e.u] >= 0 && id[e.v] >= 0) inside.push_back({id[e.u], id[e.v]});
            }
            brute += oracle::connected_by_union_find(static_cast<std::size_t>(k), inside);
        }
        CHECK(pair_subtree_count(t, u, v) == BigCount(brute));
    }
    Tree t;
    CHECK(pair_subtree_count(t, 0, 0) == BigCount(1));
    CHECK_THROWS_AS((void)pair_subtree_count(t, 0, 3), CountingError);
}

TEST_CASE("two-per-level closed form") {
    for (int n = 1; n <= 101; n += 2) {
        CHECK(two_per_level_closed_form(n) == rooted_subtree_count(make_two_per_level(n)));
    }
    CHECK(two_per_level_closed_form(7) == BigCount(22));
    CHECK_THROWS_AS((void)two_per_level_closed_form(8), CountingError);
}

TEST_CASE("complete rgood recurrence") {
    CHECK(complete_rgood_recurrence(0) == BigCount(1));
    CHECK(complete_rgood_recurrence(1) == BigCount(4));
    CHECK(complete_rgood_recurrence(2) == BigCount(25));
    CHECK(complete_rgood_recurrence(3) == BigCount(676));
    for (int h = 0; h <= 7; ++h) {
        CHECK(complete_rgood_recurrence(h) == rooted_subtree_count(make_rgood((1 << (h + 1)) - 1)));
    }
}

TEST_CASE("rgood root count lies between complete trees") {
    for (int n = 3; n <= 255; n += 2) {
        auto b = rgood_root_count_bounds(n);
        auto r = rgood_root_count(n);
        CHECK(b.lower < r);
        CHECK(r <= b.upper);
    }
}

TEST_CASE("extremal rooted counts over all rooted binary trees") {
    for (int n = 1; n <= 15; n += 2) {
        CAPTURE(n);
        const BigCount lo = rooted_subtree_count(make_two_per_level(n));
        const BigCount hi = rooted_subtree_count(make_rgood(n));
        const std::string lo_code = rooted_code(make_two_per_level(n).tree(), 0);
        auto stream = enumerate_rooted_binary(n);
        std::size_t minimizers = 0;
        while (auto r = stream.next()) {
            const BigCount c = rooted_subtree_count(*r);
            CHECK(lo <= c);
            CHECK(c <= hi);
            if (c == lo) {
                ++minimizers;
                CHECK(rooted_code(r->tree(), r->root()) == lo_code);
            }
        }
        CHECK(minimizers == 1);
    }
}

TEST_CASE("r threshold") {
    CHECK(r_threshold(12) == 7);
    CHECK(r_threshold(16) == 9);
    CHECK(r_threshold(20) == 11);
    CHECK_THROWS_AS((void)r_threshold(10), CountingError);
    CHECK_THROWS_AS((void)r_threshold(13), CountingError);
}

TEST_CASE("large profiles stay exact") {
    auto big = make_rgood(2047);
    auto prof = subtree_profile(big.tree());
    CHECK(prof.core == VertexSet{0});
    CHECK(prof.f[0] == complete_rgood_recurrence(10));
    CHECK(prof.f[0].bit_length() > 500);
}
