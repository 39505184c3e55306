#include "cli.hpp"

#include <chrono>
#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "treecentral/central_parts.hpp"
#include "treecentral/counting.hpp"
#include "treecentral/edge_list.hpp"
#include "treecentral/enumeration.hpp"
#include "treecentral/families.hpp"
#include "treecentral/formats.hpp"
#include "treecentral/k_constant.hpp"
#include "treecentral/verification.hpp"

namespace treecentral::cli {

namespace {

/// Failure that maps to a specific exit code.
struct CommandError {
    int code;
    std::string message;
};

Tree read_input(const std::string& path) {
    try {
        if (path == "-") return read_edge_list(std::cin);
        return read_edge_list_file(path);
    } catch (const ParseError& e) {
        throw CommandError{kExitUsage, "parse error: " + std::string(e.what())};
    } catch (const TreeError& e) {
        throw CommandError{kExitUsage, "not a tree: " + std::string(e.what())};
    }
}

int free_cap(bool force) {
    if (force) return INT_MAX;
    if (const char* env = std::getenv("TREECENTRAL_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CommandError{kExitUsage, "TREECENTRAL_CAP must be an integer, got '" + std::string(env) + "'"};
        }
    }
    return kFreeBinaryCap;
}

int rooted_cap(bool force) {
    if (force) return INT_MAX;
    if (std::getenv("TREECENTRAL_CAP")) return free_cap(false);
    return kRootedBinaryCap;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw CommandError{kExitUsage, "cannot write " + path};
    file << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

struct GenArgs {
    std::string family;
    int n = 0;
    int l = 0;
    std::string out;
    std::string labels;
    bool dot = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    Tree tree;
    std::optional<LabeledFamilyTree> labelled;
    try {
        if (a.family == "rgood") {
            tree = make_rgood(a.n).tree();
        } else if (a.family == "two-per-level") {
            tree = make_two_per_level(a.n).tree();
        } else if (a.family == "caterpillar") {
            labelled = make_caterpillar(a.n);
        } else if (a.family == "crg") {
            if (a.l == 0) throw CommandError{kExitUsage, "crg needs both n and l"};
            labelled = make_crg({a.n, a.l});
        } else {
            throw CommandError{kExitUsage, "unknown family '" + a.family +
                                               "' (expected rgood, two-per-level, caterpillar or crg)"};
        }
    } catch (const FamilyError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    if (labelled) tree = labelled->tree;
    std::ostringstream text;
    if (a.dot) {
        text << to_dot(tree, central_parts(tree), labelled ? &*labelled : nullptr);
    } else {
        write_edge_list(text, tree);
    }
    write_text(a.out, text.str(), out);
    if (!a.labels.empty()) {
        if (!labelled) throw CommandError{kExitUsage, "label maps exist for caterpillar and crg trees only"};
        write_text(a.labels, dump(label_map_json(*labelled)), out);
    }
    return kExitOk;
}

int cmd_parts(const std::string& input, bool dot, std::ostream& out, std::ostream& err) {
    const Tree t = read_input(input);
    if (auto check = validate_binary(t); !check) {
        err << "not a binary tree: " << check.reason << '\n';
        return kExitFailure;
    }
    const auto parts = central_parts(t);
    out << (dot ? to_dot(t, parts) : dump(parts_json(parts)));
    return kExitOk;
}

int cmd_count(const std::string& input, const std::string& family, int n, int l, std::ostream& out) {
    std::optional<RootedView> rooted;
    Tree t;
    try {
        if (family.empty()) {
            t = read_input(input.empty() ? "-" : input);
        } else if (family == "rgood") {
            rooted = make_rgood(n);
        } else if (family == "two-per-level") {
            rooted = make_two_per_level(n);
        } else if (family == "caterpillar") {
            t = make_caterpillar(n).tree;
        } else if (family == "crg") {
            t = make_crg({n, l}).tree;
        } else {
            throw CommandError{kExitUsage, "unknown family '" + family + "'"};
        }
    } catch (const FamilyError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    if (rooted) t = rooted->tree();
    auto j = profile_json(subtree_profile(t));
    if (rooted) {
        j["root"] = rooted->root();
        j["root_count"] = rooted_subtree_count(*rooted).to_string();
    }
    out << dump(j);
    return kExitOk;
}

int cmd_enum(int n, int n_max, bool rooted, const std::string& dump_dir, bool force, std::ostream& out) {
    if (n_max == 0) n_max = n;
    try {
        for (int m : {n, n_max}) {
            if (rooted) (void)enumerate_rooted_binary(m, rooted_cap(force));
            else (void)enumerate_free_binary(m, free_cap(force));
        }
    } catch (const EnumerationError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    out << "n,count\n";
    try {
        for (int m = n; m <= n_max; m += 2) {
            std::size_t count = 0;
            auto write = [&](const Tree& t) {
                if (dump_dir.empty()) return;
                std::filesystem::create_directories(dump_dir);
                std::ostringstream name;
                name << (rooted ? "rooted_n" : "n") << m << "_" << count << ".edges";
                std::ofstream file(std::filesystem::path(dump_dir) / name.str());
                file << "# " << canonical_code(t).code << '\n';
                write_edge_list(file, t);
            };
            if (rooted) {
                auto stream = enumerate_rooted_binary(m, rooted_cap(force));
                while (auto r = stream.next()) {
                    write(r->tree());
                    ++count;
                }
            } else {
                auto stream = enumerate_free_binary(m, free_cap(force));
                while (auto t = stream.next()) {
                    write(*t);
                    ++count;
                }
            }
            out << m << ',' << count << '\n';
        }
    } catch (const EnumerationError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    return kExitOk;
}

struct VerifyArgs {
    int n_min = 12;
    int n_max = 12;
    std::string quantity = "all";
    int shards = 1;
    std::string out;
    std::string dot_dir;
    int structure_n_max = 0;
    bool timing = false;
    bool force = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions options;
    options.n_min = a.n_min;
    options.n_max = a.n_max;
    options.shards = a.shards;
    options.cap = free_cap(a.force);
    if (a.quantity == "c-cd") options.quantities = {Quantity::c_cd};
    else if (a.quantity == "c-sc") options.quantities = {Quantity::c_sc};
    else if (a.quantity == "cd-sc") options.quantities = {Quantity::cd_sc};
    else if (a.quantity != "all") throw CommandError{kExitUsage, "unknown quantity '" + a.quantity + "'"};

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    try {
        report = verify_conjecture(options);
        if (a.structure_n_max > 0) {
            auto structure = verify_crg_structure(a.structure_n_max);
            for (auto& c : structure.checks) report.checks.push_back(std::move(c));
        }
    } catch (const VerificationError& e) {
        throw CommandError{kExitUsage, e.what()};
    } catch (const EnumerationError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    auto j = report_json(report, "verify");
    j["runtime"] = {{"shards", a.shards}};
    if (a.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        j["runtime"]["elapsed_ms"] = ms.count();
    }
    write_text(a.out, dump(j), out);

    if (!a.dot_dir.empty()) {
        std::filesystem::create_directories(a.dot_dir);
        for (const auto& rec : report.records) {
            for (std::size_t i = 0; i < rec.argmax_codes.size(); ++i) {
                const Tree t = tree_from_code(rec.argmax_codes[i].code);
                std::ofstream file(std::filesystem::path(a.dot_dir) /
                                   ("n" + std::to_string(rec.n) + "_" + quantity_name(rec.quantity) + "_" +
                                    std::to_string(i) + ".dot"));
                file << to_dot(t, central_parts(t));
            }
        }
    }
    return report.all_passed() ? kExitOk : kExitFailure;
}

int cmd_table(int n, const std::string& path, std::ostream& out) {
    try {
        write_text(path, table_csv(crg_distance_table(n)), out);
    } catch (const VerificationError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    return kExitOk;
}

int cmd_k(int digits, std::ostream& out) {
    try {
        out << estimate_k(digits).value << '\n';
    } catch (const PrecisionError& e) {
        throw CommandError{kExitUsage, e.what()};
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Center, centroid and subtree core of binary trees", "treecentral"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a family tree as an edge list");
    gen_cmd->add_option("family", gen.family, "rgood | two-per-level | caterpillar | crg")->required();
    gen_cmd->add_option("n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("l", gen.l, "rgood part size (crg only)");
    gen_cmd->add_option("-o,--out", gen.out, "Edge list destination (default stdout)");
    gen_cmd->add_option("--labels", gen.labels, "Write the JSON label map to this path");
    gen_cmd->add_flag("--dot", gen.dot, "Emit DOT instead of an edge list");

    std::string parts_input = "-";
    bool parts_dot = false;
    auto* parts_cmd = app.add_subcommand("parts", "Center, centroid, subtree core and their distances");
    parts_cmd->add_option("input", parts_input, "Edge list file, - for stdin");
    parts_cmd->add_flag("--dot", parts_dot, "Emit DOT with the parts highlighted");

    std::string count_input;
    std::string count_family;
    int count_n = 0;
    int count_l = 0;
    auto* count_cmd = app.add_subcommand("count", "Subtree counts f(v) for every vertex");
    count_cmd->add_option("input", count_input, "Edge list file, - for stdin");
    count_cmd->add_option("--family", count_family, "Generate the tree instead of reading it");
    count_cmd->add_option("--n", count_n, "Vertex count for --family");
    count_cmd->add_option("--l", count_l, "rgood part size for --family crg");

    int enum_n = 0;
    int enum_n_max = 0;
    bool enum_rooted = false;
    bool enum_force = false;
    std::string enum_dump;
    auto* enum_cmd = app.add_subcommand("enum", "Count (and optionally dump) non-isomorphic binary trees");
    enum_cmd->add_option("--n", enum_n, "Vertex count (first of the range with --n-max)")->required();
    enum_cmd->add_option("--n-max", enum_n_max, "Last vertex count of the range");
    enum_cmd->add_flag("--rooted", enum_rooted, "Rooted binary trees (odd n) instead of free ones");
    enum_cmd->add_option("--dump", enum_dump, "Directory for one edge-list file per tree");
    enum_cmd->add_flag("--force", enum_force, "Ignore the enumeration cap");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check that crg trees maximize the distances");
    verify_cmd->add_option("--n-min", verify.n_min, "Smallest even n (>= 12)");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest even n");
    verify_cmd->add_option("--quantity", verify.quantity, "c-cd | c-sc | cd-sc | all");
    verify_cmd->add_option("--shards", verify.shards, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", verify.out, "Report destination (default stdout)");
    verify_cmd->add_option("--dot", verify.dot_dir, "Directory for DOT exports of every maximizing tree");
    verify_cmd->add_option("--structure", verify.structure_n_max, "Also check crg structure up to this n");
    verify_cmd->add_flag("--timing", verify.timing, "Add elapsed time to the runtime section");
    verify_cmd->add_flag("--force", verify.force, "Ignore the enumeration cap");

    int table_n = 0;
    std::string table_out;
    auto* table_cmd = app.add_subcommand("table", "CSV of distances over all crg trees on n vertices");
    table_cmd->add_option("--n", table_n, "Even n >= 12")->required();
    table_cmd->add_option("--out", table_out, "CSV destination (default stdout)");

    int k_digits = 9;
    auto* k_cmd = app.add_subcommand("k", "Growth constant of the complete rgood root counts");
    k_cmd->add_option("--digits", k_digits, "Significant digits (1..200)");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*parts_cmd) return cmd_parts(parts_input, parts_dot, out, err);
        if (*count_cmd) return cmd_count(count_input, count_family, count_n, count_l, out);
        if (*enum_cmd) return cmd_enum(enum_n, enum_n_max, enum_rooted, enum_dump, enum_force, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*table_cmd) return cmd_table(table_n, table_out, out);
        if (*k_cmd) return cmd_k(k_digits, out);
    } catch (const CommandError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    }
    return kExitUsage;
}

}  // namespace treecentral::cli
