#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "treecentral/central_parts.hpp"
#include "treecentral/counting.hpp"
#include "treecentral/families.hpp"
#include "treecentral/verification.hpp"

namespace treecentral {

inline constexpr int kReportSchemaVersion = 1;

/// {"center":[..],"centroid":[..],"subtree_core":[..],"d_c_cd":..,"d_c_sc":..,"d_cd_sc":..}
[[nodiscard]] nlohmann::ordered_json parts_json(const CentralParts& parts);

/// {"n":..,"f":["decimal",..],"core":[..]}. Counts are strings since they outgrow 64 bits.
[[nodiscard]] nlohmann::ordered_json profile_json(const SubtreeProfile& profile);

/// Label map sidecar for generated family trees.
[[nodiscard]] nlohmann::ordered_json label_map_json(const LabeledFamilyTree& t);

/// Versioned verification report. `kind` names the producing command.
[[nodiscard]] nlohmann::ordered_json report_json(const VerificationReport& report, const std::string& kind);

/// "l,d_c_cd,d_c_sc,d_cd_sc" header, one row per crg tree.
[[nodiscard]] std::string table_csv(const std::vector<CrgRow>& rows);

/// Graphviz export. Center, centroid and subtree core are filled in distinct
/// colours; spine labels are shown when a labelled tree is given.
[[nodiscard]] std::string to_dot(const Tree& t, const CentralParts& parts,
                                 const LabeledFamilyTree* labels = nullptr);

}  // namespace treecentral
