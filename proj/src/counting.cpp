#include "treecentral/counting.hpp"

#include <algorithm>

#include "treecentral/families.hpp"

namespace treecentral {

std::vector<BigCount> downward_counts(const RootedView& rooted) {
    std::vector<BigCount> g(rooted.size(), BigCount(1));
    auto order = rooted.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        if (auto p = rooted.parent(v)) {
            g[*p] *= g[v] + 1;
        }
    }
    return g;
}

BigCount rooted_subtree_count(const RootedView& rooted) {
    return downward_counts(rooted)[rooted.root()];
}

RerootedCounts rerooted_counts(const RootedView& rooted) {
    auto down = downward_counts(rooted);
    std::vector<BigCount> up(rooted.size(), BigCount(0));
    std::vector<BigCount> prefix;
    std::vector<BigCount> suffix;
    for (VertexId v : rooted.bfs_order()) {
        auto kids = rooted.children(v);
        const std::size_t k = kids.size();
        if (k == 0) continue;
        prefix.assign(k + 1, BigCount(1));
        suffix.assign(k + 1, BigCount(1));
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * (down[kids[i]] + 1);
        for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * (down[kids[i]] + 1);
        const BigCount above = up[v] + 1;
        for (std::size_t i = 0; i < k; ++i) {
            up[kids[i]] = above * prefix[i] * suffix[i + 1];
        }
    }
    return {std::move(down), std::move(up)};
}

SubtreeProfile subtree_profile(const Tree& t) {
    const auto [down, up] = rerooted_counts(RootedView(t, 0));
    SubtreeProfile profile;
    profile.f.resize(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) {
        profile.f[v] = down[v] * (up[v] + 1);
    }
    const auto best = *std::max_element(profile.f.begin(), profile.f.end());
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (profile.f[v] == best) profile.core.push_back(static_cast<VertexId>(v));
    }
    return profile;
}

BigCount pair_subtree_count(const Tree& t, VertexId u, VertexId v) {
    if (!t.contains(u) || !t.contains(v)) {
        throw CountingError("pair count vertex out of range");
    }
    RootedView rooted(t, u);
    const auto down = downward_counts(rooted);
    // Walk v -> u. At each path vertex multiply the branches hanging off the path.
    BigCount total(1);
    VertexId below = -1;
    VertexId x = v;
    while (true) {
        for (VertexId c : rooted.children(x)) {
            if (c != below) total *= down[c] + 1;
        }
        if (x == u) break;
        below = x;
        x = *rooted.parent(x);
    }
    return total;
}

BigCount two_per_level_closed_form(int n) {
    if (n <= 0 || n % 2 == 0) {
        throw CountingError("two-per-level closed form needs odd n >= 1, got " + std::to_string(n));
    }
    return BigCount::power_of_two(static_cast<unsigned long>((n - 1) / 2)) * 3 - 2;
}

BigCount complete_rgood_recurrence(int h) {
    if (h < 0) throw CountingError("height must be nonnegative");
    BigCount a(1);
    for (int i = 0; i < h; ++i) {
        BigCount y = a + 1;
        a = y * y;
    }
    return a;
}

RootCountBounds rgood_root_count_bounds(int n) {
    if (n < 3 || n % 2 == 0) {
        throw CountingError("rgood bounds need odd n >= 3, got " + std::to_string(n));
    }
    int h = 1;
    while (n > (1 << (h + 1)) - 1) ++h;
    return {h, complete_rgood_recurrence(h - 1), complete_rgood_recurrence(h)};
}

BigCount rgood_root_count(int l) { return rooted_subtree_count(make_rgood(l)); }

int r_threshold(int n) {
    if (n < 12 || n % 2 != 0) {
        throw CountingError("r_threshold needs even n >= 12, got " + std::to_string(n));
    }
    for (int l = 3; l < n; l += 2) {
        // 3 * 2^((n-l-1)/2) - 2; n - l - 1 is even.
        BigCount rhs = BigCount::power_of_two(static_cast<unsigned long>((n - l - 1) / 2)) * 3 - 2;
        if (rgood_root_count(l) > rhs) return l;
    }
    // Unreachable for n >= 12: R_{n-1} exceeds 3*2^0 - 2 = 1.
    throw CountingError("no threshold found for n=" + std::to_string(n));
}

}  // namespace treecentral
