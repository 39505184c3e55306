#include "treecentral/formats.hpp"

#include <algorithm>
#include <sstream>

namespace treecentral {

using nlohmann::ordered_json;

ordered_json parts_json(const CentralParts& parts) {
    ordered_json j;
    j["center"] = parts.center;
    j["centroid"] = parts.centroid;
    j["subtree_core"] = parts.subtree_core;
    j["d_c_cd"] = parts.d_c_cd;
    j["d_c_sc"] = parts.d_c_sc;
    j["d_cd_sc"] = parts.d_cd_sc;
    return j;
}

ordered_json profile_json(const SubtreeProfile& profile) {
    ordered_json j;
    j["n"] = profile.f.size();
    auto f = ordered_json::array();
    for (const auto& c : profile.f) f.push_back(c.to_string());
    j["f"] = std::move(f);
    j["core"] = profile.core;
    return j;
}

ordered_json label_map_json(const LabeledFamilyTree& t) {
    ordered_json j;
    j["family"] = family_name(t.family);
    j["n"] = t.n;
    if (t.family == Family::crg) j["l"] = t.l;
    ordered_json labels;
    for (std::size_t k = 0; k < t.spine.size(); ++k) labels[std::to_string(k + 1)] = t.spine[k];
    labels["v"] = t.v();
    if (t.v_prime) labels["v'"] = *t.v_prime;
    j["labels"] = std::move(labels);
    return j;
}

ordered_json report_json(const VerificationReport& report, const std::string& kind) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = kind;
    auto records = ordered_json::array();
    for (const auto& r : report.records) {
        ordered_json rec;
        rec["n"] = r.n;
        rec["quantity"] = quantity_name(r.quantity);
        rec["max_value"] = r.max_value;
        rec["trees_scanned"] = r.trees_scanned;
        auto codes = ordered_json::array();
        for (const auto& c : r.argmax_codes) codes.push_back(c.code);
        rec["argmax_codes"] = std::move(codes);
        rec["crg_witness_ls"] = r.crg_witness_ls;
        if (auto w = r.crg_witness()) {
            rec["crg_witness"] = {{"n", r.n}, {"l", *w}};
        } else {
            rec["crg_witness"] = nullptr;
        }
        rec["bound_value"] = r.bound_value ? ordered_json(*r.bound_value) : ordered_json(nullptr);
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    auto checks = ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"detail", c.detail},
                          {"counterexamples", c.counterexamples}});
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = report.all_passed();
    return j;
}

std::string table_csv(const std::vector<CrgRow>& rows) {
    std::ostringstream out;
    out << "l,d_c_cd,d_c_sc,d_cd_sc\n";
    for (const auto& r : rows) {
        out << r.l << ',' << r.d_c_cd << ',' << r.d_c_sc << ',' << r.d_cd_sc << '\n';
    }
    return out.str();
}

std::string to_dot(const Tree& t, const CentralParts& parts, const LabeledFamilyTree* labels) {
    auto in = [](const VertexSet& s, VertexId v) { return std::find(s.begin(), s.end(), v) != s.end(); };
    std::ostringstream out;
    out << "graph tree {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto v = static_cast<VertexId>(i);
        std::string label = std::to_string(v);
        if (labels) {
            for (std::size_t k = 0; k < labels->spine.size(); ++k) {
                if (labels->spine[k] == v) label += "\\n#" + std::to_string(k + 1);
            }
            if (labels->v_prime == v) label += "\\nv'";
        }
        // Colour precedence: core, centroid, center; membership in several shows as a bold outline.
        const int roles = in(parts.center, v) + in(parts.centroid, v) + in(parts.subtree_core, v);
        std::string colour = "white";
        if (in(parts.subtree_core, v)) colour = "palegreen";
        else if (in(parts.centroid, v)) colour = "lightskyblue";
        else if (in(parts.center, v)) colour = "salmon";
        out << "  " << v << " [label=\"" << label << "\", fillcolor=" << colour;
        if (roles > 1) out << ", penwidth=3";
        out << "];\n";
    }
    for (const auto& e : t.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace treecentral
