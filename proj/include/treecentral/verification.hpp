#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treecentral/central_parts.hpp"
#include "treecentral/enumeration.hpp"
#include "treecentral/tree.hpp"

namespace treecentral {

/// Which pairwise distance between central parts.
enum class Quantity { c_cd, c_sc, cd_sc };

inline constexpr Quantity kAllQuantities[] = {Quantity::c_cd, Quantity::c_sc, Quantity::cd_sc};

[[nodiscard]] std::string quantity_name(Quantity q);
[[nodiscard]] std::size_t quantity_value(const CentralParts& parts, Quantity q);

class VerificationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExtremalRecord {
    int n = 0;
    Quantity quantity = Quantity::c_cd;
    std::size_t max_value = 0;
    std::vector<CanonicalCode> argmax_codes;  // sorted
    std::vector<int> crg_witness_ls;          // every l with T_rg^{n,l} attaining the max
    std::optional<std::size_t> bound_value;
    std::size_t trees_scanned = 0;

    /// Smallest witnessing l, if any.
    [[nodiscard]] std::optional<int> crg_witness() const {
        if (crg_witness_ls.empty()) return std::nullopt;
        return crg_witness_ls.front();
    }
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    std::vector<std::string> counterexamples;  // canonical codes, or "crg n l" tags
};

struct VerificationReport {
    std::vector<ExtremalRecord> records;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const;
};

struct VerifyOptions {
    int n_min = 12;
    int n_max = 12;
    std::vector<Quantity> quantities{Quantity::c_cd, Quantity::c_sc, Quantity::cd_sc};
    int shards = 1;
    int cap = kFreeBinaryCap;
};

/// Per-quantity maxima over every binary tree on n vertices. Shards run on
/// separate threads, each taking stream items with index = shard (mod shards);
/// the merge is independent of the shard count.
struct ExhaustiveScan {
    int n = 0;
    std::size_t trees = 0;
    std::size_t max_value[3] = {0, 0, 0};
    std::vector<CanonicalCode> argmax[3];
};

[[nodiscard]] ExhaustiveScan scan_binary_trees(int n, int shards, int cap = kFreeBinaryCap);

/// Exhaustive maxima for every even n in [n_min, n_max], all argmax trees,
/// and crg witnesses. Adds the closed-form c_cd check and the cd_sc bound check
/// when those quantities are requested.
[[nodiscard]] VerificationReport verify_conjecture(const VerifyOptions& options);

/// Both readings of the c_cd closed form. The formula uses the smallest h with
/// ceil(n/4) <= 2^h - 1; the structural reading uses the height of the rgood
/// part of the witness T_rg^{n, 2 ceil(n/4) + 1}.
struct CcdBound {
    int n = 0;
    int witness_l = 0;
    int h_formula = 0;
    int h_structural = 0;
    std::size_t value = 0;             // with h_formula
    std::size_t value_structural = 0;  // with h_structural
};

[[nodiscard]] CcdBound c_cd_bound_detail(int n);

/// floor(n/4) - floor((floor(n/4) + 1 + h) / 2). Even n >= 12.
[[nodiscard]] std::size_t c_cd_bound(int n);

struct CrgRow {
    int l = 0;
    std::size_t d_c_cd = 0;
    std::size_t d_c_sc = 0;
    std::size_t d_cd_sc = 0;
};

/// Distances for every T_rg^{n,l}, ascending l. Even n >= 12.
[[nodiscard]] std::vector<CrgRow> crg_distance_table(int n);

/// Structural claims on every crg tree with 4 <= n <= n_max.
[[nodiscard]] VerificationReport verify_crg_structure(int n_max);

struct CdScBoundCheck {
    int n = 0;
    int threshold_l = 0;
    std::size_t crg_value = 0;  // d(C_d, S_c) in T_rg^{n, threshold_l}
    std::size_t bound = 0;      // crg_value if >= 1, else 1
    std::size_t exhaustive_max = 0;
    bool passed = false;
};

[[nodiscard]] CdScBoundCheck verify_cd_sc_bound(int n, int shards = 1, int cap = kFreeBinaryCap);

}  // namespace treecentral
