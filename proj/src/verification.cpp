#include "treecentral/verification.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "treecentral/counting.hpp"
#include "treecentral/families.hpp"

namespace treecentral {

namespace {

std::size_t slot(Quantity q) { return static_cast<std::size_t>(q); }

std::string tag(int n, int l) { return "crg " + std::to_string(n) + " " + std::to_string(l); }

void require_even_at_least(int n, int lo, const char* what) {
    if (n < lo || n % 2 != 0) {
        throw VerificationError(std::string(what) + " needs an even n >= " + std::to_string(lo) + ", got " +
                                std::to_string(n));
    }
}

int ceil_quarter(int n) { return (n + 3) / 4; }

// Position of each path vertex along the path, -1 off the path.
std::vector<int> path_positions(const Tree& t, const std::vector<VertexId>& path) {
    std::vector<int> pos(t.size(), -1);
    for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
    return pos;
}

void note(CheckResult& check, bool ok, const std::string& what) {
    if (!ok) {
        check.passed = false;
        check.counterexamples.push_back(what);
    }
}

}  // namespace

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::c_cd: return "c_cd";
        case Quantity::c_sc: return "c_sc";
        case Quantity::cd_sc: return "cd_sc";
    }
    return "unknown";
}

std::size_t quantity_value(const CentralParts& parts, Quantity q) {
    switch (q) {
        case Quantity::c_cd: return parts.d_c_cd;
        case Quantity::c_sc: return parts.d_c_sc;
        case Quantity::cd_sc: return parts.d_cd_sc;
    }
    return 0;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ExhaustiveScan scan_binary_trees(int n, int shards, int cap) {
    if (shards < 1) throw VerificationError("shard count must be positive");
    // Validates n and cap before any thread starts.
    (void)enumerate_free_binary(n, cap);

    std::vector<ExhaustiveScan> partial(static_cast<std::size_t>(shards));
    auto work = [&](int shard) {
        ExhaustiveScan& mine = partial[static_cast<std::size_t>(shard)];
        auto stream = enumerate_free_binary(n, cap);
        std::size_t index = 0;
        while (auto t = stream.next()) {
            if (static_cast<int>(index++ % static_cast<std::size_t>(shards)) != shard) continue;
            ++mine.trees;
            const auto parts = central_parts(*t);
            const auto code = canonical_code(*t);
            for (Quantity q : kAllQuantities) {
                const std::size_t value = quantity_value(parts, q);
                auto& best = mine.max_value[slot(q)];
                auto& codes = mine.argmax[slot(q)];
                if (codes.empty() || value > best) {
                    best = value;
                    codes.assign(1, code);
                } else if (value == best) {
                    codes.push_back(code);
                }
            }
        }
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int s = 0; s < shards; ++s) pool.emplace_back(work, s);
    }

    ExhaustiveScan merged;
    merged.n = n;
    for (const auto& p : partial) merged.trees += p.trees;
    for (Quantity q : kAllQuantities) {
        const std::size_t k = slot(q);
        bool any = false;
        for (const auto& p : partial) {
            if (p.argmax[k].empty()) continue;
            if (!any || p.max_value[k] > merged.max_value[k]) {
                merged.max_value[k] = p.max_value[k];
                any = true;
            }
        }
        for (const auto& p : partial) {
            if (!p.argmax[k].empty() && p.max_value[k] == merged.max_value[k]) {
                merged.argmax[k].insert(merged.argmax[k].end(), p.argmax[k].begin(), p.argmax[k].end());
            }
        }
        std::sort(merged.argmax[k].begin(), merged.argmax[k].end());
    }
    return merged;
}

CcdBound c_cd_bound_detail(int n) {
    require_even_at_least(n, 12, "c_cd bound");
    CcdBound out;
    out.n = n;
    const int q_floor = n / 4;
    const int q_ceil = ceil_quarter(n);
    out.witness_l = 2 * q_ceil + 1;
    int h = 1;
    while (q_ceil > (1 << h) - 1) ++h;
    out.h_formula = h;
    out.h_structural = static_cast<int>(make_rgood(out.witness_l).height());
    auto value = [&](int hh) {
        const int v = q_floor - (q_floor + 1 + hh) / 2;
        return static_cast<std::size_t>(std::max(v, 0));
    };
    out.value = value(out.h_formula);
    out.value_structural = value(out.h_structural);
    return out;
}

std::size_t c_cd_bound(int n) { return c_cd_bound_detail(n).value; }

std::vector<CrgRow> crg_distance_table(int n) {
    require_even_at_least(n, 12, "crg distance table");
    std::vector<CrgRow> rows;
    for (const auto& crg : crg_family(n)) {
        const auto parts = central_parts(crg.tree);
        rows.push_back({crg.l, parts.d_c_cd, parts.d_c_sc, parts.d_cd_sc});
    }
    return rows;
}

CdScBoundCheck verify_cd_sc_bound(int n, int shards, int cap) {
    require_even_at_least(n, 12, "cd_sc bound");
    CdScBoundCheck out;
    out.n = n;
    out.threshold_l = r_threshold(n);
    out.crg_value = central_parts(make_crg({n, out.threshold_l}).tree).d_cd_sc;
    out.bound = out.crg_value >= 1 ? out.crg_value : 1;
    const auto scan = scan_binary_trees(n, shards, cap);
    out.exhaustive_max = scan.max_value[slot(Quantity::cd_sc)];
    out.passed = out.exhaustive_max <= out.bound;
    return out;
}

VerificationReport verify_conjecture(const VerifyOptions& options) {
    require_even_at_least(options.n_min, 12, "verify");
    if (options.n_max < options.n_min || options.n_max % 2 != 0) {
        throw VerificationError("n_max must be even and >= n_min");
    }
    if (options.n_max > options.cap) {
        throw VerificationError("n_max=" + std::to_string(options.n_max) + " exceeds the enumeration cap " +
                                std::to_string(options.cap));
    }
    VerificationReport report;
    for (int n = options.n_min; n <= options.n_max; n += 2) {
        const auto scan = scan_binary_trees(n, options.shards, options.cap);
        const auto family = crg_family(n);
        std::vector<CentralParts> crg_parts;
        for (const auto& crg : family) crg_parts.push_back(central_parts(crg.tree));

        for (Quantity q : options.quantities) {
            const std::size_t k = slot(q);
            ExtremalRecord rec;
            rec.n = n;
            rec.quantity = q;
            rec.max_value = scan.max_value[k];
            rec.argmax_codes = scan.argmax[k];
            rec.trees_scanned = scan.trees;
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (quantity_value(crg_parts[i], q) == rec.max_value) rec.crg_witness_ls.push_back(family[i].l);
            }

            CheckResult conj;
            conj.name = "conjecture " + quantity_name(q) + " n=" + std::to_string(n);
            conj.passed = !rec.crg_witness_ls.empty();
            conj.detail = "max " + std::to_string(rec.max_value) + " over " + std::to_string(scan.trees) +
                          " trees, " + std::to_string(rec.crg_witness_ls.size()) + " crg witnesses";
            if (!conj.passed) {
                for (const auto& c : rec.argmax_codes) conj.counterexamples.push_back(c.code);
            }

            if (q == Quantity::c_cd) {
                const auto bound = c_cd_bound_detail(n);
                rec.bound_value = bound.value;
                CheckResult closed;
                closed.name = "c_cd closed form n=" + std::to_string(n);
                const bool witness = std::find(rec.crg_witness_ls.begin(), rec.crg_witness_ls.end(),
                                               bound.witness_l) != rec.crg_witness_ls.end();
                closed.passed = rec.max_value == bound.value && witness;
                closed.detail = "exhaustive max " + std::to_string(rec.max_value) + ", formula " +
                                std::to_string(bound.value) + " (h=" + std::to_string(bound.h_formula) +
                                "), rgood-height reading " + std::to_string(bound.value_structural) +
                                " (h=" + std::to_string(bound.h_structural) + "), witness l=" +
                                std::to_string(bound.witness_l) + (witness ? " attains" : " does not attain");
                if (!closed.passed) closed.counterexamples.push_back(tag(n, bound.witness_l));
                report.records.push_back(rec);
                report.checks.push_back(conj);
                report.checks.push_back(closed);
                continue;
            }

            const int threshold = r_threshold(n);
            const std::size_t at_threshold = quantity_value(crg_parts[static_cast<std::size_t>((threshold - 3) / 2)], q);
            CheckResult bounded;
            if (q == Quantity::c_sc) {
                rec.bound_value = at_threshold;
                bounded.name = "c_sc threshold tree n=" + std::to_string(n);
                bounded.passed = rec.max_value == at_threshold;
                bounded.detail = "exhaustive max " + std::to_string(rec.max_value) + ", T_rg^{n,l} at l=" +
                                 std::to_string(threshold) + " gives " + std::to_string(at_threshold);
            } else {
                const std::size_t bound = at_threshold >= 1 ? at_threshold : 1;
                rec.bound_value = bound;
                bounded.name = "cd_sc bound n=" + std::to_string(n);
                bounded.passed = rec.max_value <= bound;
                bounded.detail = "exhaustive max " + std::to_string(rec.max_value) + " <= bound " +
                                 std::to_string(bound) + " (l=" + std::to_string(threshold) + " value " +
                                 std::to_string(at_threshold) + ")";
            }
            if (!bounded.passed) bounded.counterexamples.push_back(tag(n, threshold));
            report.records.push_back(rec);
            report.checks.push_back(conj);
            report.checks.push_back(bounded);
        }
    }
    return report;
}

VerificationReport verify_crg_structure(int n_max) {
    require_even_at_least(n_max, 4, "crg structure");
    CheckResult betweenness{"centroid between center and subtree core", true, "", {}};
    CheckResult nearest{"center nearest to label 1", true, "", {}};
    CheckResult on_path{"all parts on the path from label 1 to v'", true, "", {}};
    CheckResult not_vprime{"center is never {v'}", true, "", {}};
    CheckResult centroid_loc{"centroid within {v, v'} when l >= n/2 + 1", true, "", {}};
    CheckResult centroid_single{"single centroid vertex when n = 4k and l >= 2k + 1", true, "", {}};
    CheckResult threshold_core{"subtree core is {v} at the threshold l and l + 2", true, "", {}};
    std::size_t trees = 0;

    for (int n = 4; n <= n_max; n += 2) {
        const int threshold = n >= 12 ? r_threshold(n) : 0;
        for (const auto& crg : crg_family(n)) {
            ++trees;
            const Tree& t = crg.tree;
            const auto parts = central_parts(t);
            const VertexId v = crg.v();
            const VertexId vp = *crg.v_prime;
            const std::string where = tag(n, crg.l);

            const auto path = path_between(t, crg.label(1), vp);
            const auto pos = path_positions(t, path);
            auto all_on = [&](const VertexSet& s) {
                return std::all_of(s.begin(), s.end(), [&](VertexId x) { return pos[x] >= 0; });
            };
            const bool on = all_on(parts.center) && all_on(parts.centroid) && all_on(parts.subtree_core);
            note(on_path, on, where);
            if (on) {
                auto lo = [&](const VertexSet& s) { return pos[s.front()] < pos[s.back()] ? pos[s.front()] : pos[s.back()]; };
                auto hi = [&](const VertexSet& s) { return pos[s.front()] > pos[s.back()] ? pos[s.front()] : pos[s.back()]; };
                // Every centroid vertex lies within the span of center and core along the path.
                const int span_lo = std::min(lo(parts.center), lo(parts.subtree_core));
                const int span_hi = std::max(hi(parts.center), hi(parts.subtree_core));
                const bool ordered = span_lo <= lo(parts.centroid) && hi(parts.centroid) <= span_hi;
                note(betweenness, ordered, where);
            } else {
                note(betweenness, false, where);
            }

            const VertexSet one{crg.label(1)};
            const auto dc = set_distance(t, one, parts.center);
            note(nearest, dc <= set_distance(t, one, parts.centroid) && dc <= set_distance(t, one, parts.subtree_core),
                 where);
            note(not_vprime, parts.center != VertexSet{vp}, where);

            if (2 * crg.l >= n + 2) {
                VertexSet pair{std::min(v, vp), std::max(v, vp)};
                const bool inside = std::includes(pair.begin(), pair.end(), parts.centroid.begin(), parts.centroid.end());
                const bool complete = ((crg.l + 1) & crg.l) == 0;
                note(centroid_loc, inside && (!complete || parts.centroid == VertexSet{v}), where);
                if (n % 4 == 0) note(centroid_single, parts.centroid.size() == 1, where);
            }
            if (threshold != 0 && (crg.l == threshold || crg.l == threshold + 2)) {
                note(threshold_core, parts.subtree_core == VertexSet{v}, where);
            }
        }
    }
    VerificationReport report;
    for (auto* c : {&betweenness, &nearest, &on_path, &not_vprime, &centroid_loc, &centroid_single, &threshold_core}) {
        c->detail = std::to_string(trees) + " crg trees with n <= " + std::to_string(n_max);
        report.checks.push_back(std::move(*c));
    }
    return report;
}

}  // namespace treecentral
