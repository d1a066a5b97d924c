// sls: subsystem lattice surgery workbench.
//
// Subcommands build lattice codes, analyze and bound them, run the
// merge/split surgery with verification, simulate logical teleportation,
// and render lattice diagrams. All machine output is canonical JSON
// (sorted keys, 2-space indent) so equal runs give byte-identical files.
//
// Exit codes: 0 success, 1 verification/teleportation failure, 2 usage or
// IO error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sls/builders.hpp"
#include "sls/code.hpp"
#include "sls/io.hpp"
#include "sls/sim.hpp"
#include "sls/surgery.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace sls;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SubsystemCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open code file: " + path);
    json j;
    in >> j;
    return code_from_json(j);
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write: " + path);
    out << body;
}

/// Text format is a flat rendering of the same JSON structure.
void flatten(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const json& report, const std::string& path, const std::string& format) {
    if (format == "text") {
        std::ostringstream os;
        flatten(report, "", os);
        write_text(path, os.str());
    } else {
        write_text(path, dump_report(report));
    }
}

SubsystemCode build_family(const std::string& family, int size, int size2) {
    if (family == "surface") return build_surface_code(size);
    if (family == "color") return build_color_code(size);
    if (family == "ssc") return build_subsystem_surface_code(size);
    if (family == "bacon-shor") return build_bacon_shor(size, size2 > 0 ? size2 : size);
    throw UsageError("unknown family: " + family);
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw UsageError("side must be left or right");
}

std::size_t default_max_weight(std::size_t n) { return std::min<std::size_t>(n, 7); }

struct MergeArgs {
    std::string code_a, code_b;
    std::string side_a = "right", side_b = "left";
    std::string pauli = "Z";
    bool ancillas = false;
    std::size_t logical_index = 0;
};

MergeResult make_merge(const MergeArgs& args) {
    SubsystemCode a = load_code(args.code_a);
    SubsystemCode b = load_code(args.code_b);
    CodeAnalysis an_a = analyze(a);
    CodeAnalysis an_b = analyze(b);
    char p = args.pauli.empty() ? 'Z' : char(std::toupper(args.pauli[0]));
    auto la = boundary_logical(a, an_a, parse_side(args.side_a), args.logical_index, p);
    auto lb = boundary_logical(b, an_b, parse_side(args.side_b), args.logical_index, p);
    if (!la || !lb) throw InvalidCodeError("no admissible boundary logical on a requested side");
    return build_merged_code(MergeSpec{a, b, *la, *lb, args.ancillas});
}

json config_echo(const json& fields) {
    json j = fields;
    j["version"] = kVersion;
    return j;
}

void add_merge_options(CLI::App* cmd, MergeArgs& args) {
    cmd->add_option("--code-a", args.code_a, "code file for patch A")->required();
    cmd->add_option("--code-b", args.code_b, "code file for patch B")->required();
    cmd->add_option("--side-a", args.side_a, "boundary side of A (left|right)");
    cmd->add_option("--side-b", args.side_b, "boundary side of B (left|right)");
    cmd->add_option("--pauli", args.pauli, "logical type to merge (X|Z)");
    cmd->add_flag("--ancillas", args.ancillas, "dress the seam with ancilla qubits");
}

json merge_config_json(const MergeArgs& args) {
    return json{{"code_a", args.code_a}, {"code_b", args.code_b},  {"side_a", args.side_a},
                {"side_b", args.side_b}, {"pauli", args.pauli},    {"ancillas", args.ancillas}};
}

int run(int argc, char** argv) {
    CLI::App app{"subsystem lattice surgery workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string out = "-", out_code, format = "json";
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out, "report destination (default stdout)");
        cmd->add_option("--format", format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    // build
    auto* cmd_build = app.add_subcommand("build", "construct a lattice code file");
    std::string family;
    int size = 3, size2 = 0;
    cmd_build->add_option("--family", family, "surface|color|ssc|bacon-shor")->required();
    cmd_build->add_option("--size", size, "lattice size / distance parameter")->required();
    cmd_build->add_option("--size2", size2, "second dimension (bacon-shor only)");
    add_output(cmd_build);

    // analyze / distance
    auto* cmd_analyze = app.add_subcommand("analyze", "compute (n,k,g,s) and the decomposition");
    auto* cmd_distance = app.add_subcommand("distance", "run the dressed-distance oracle");
    std::string code_path;
    std::size_t max_weight = 0;
    for (auto* cmd : {cmd_analyze, cmd_distance}) {
        cmd->add_option("--code", code_path, "code file")->required();
        cmd->add_option("--max-weight", max_weight, "search cutoff (default min(n,7))");
        add_output(cmd);
    }

    // merge / split / verify
    MergeArgs margs;
    auto* cmd_merge = app.add_subcommand("merge", "merge two codes along facing boundaries");
    add_merge_options(cmd_merge, margs);
    cmd_merge->add_option("--max-weight", max_weight, "distance cutoff (default min(n,7))");
    cmd_merge->add_option("--out-code", out_code, "write the merged code file here");
    add_output(cmd_merge);

    auto* cmd_split = app.add_subcommand("split", "split a merge back into its two codes");
    add_merge_options(cmd_split, margs);
    add_output(cmd_split);

    auto* cmd_verify = app.add_subcommand("verify", "verify a merge: ledger, lemma 2, locality");
    add_merge_options(cmd_verify, margs);
    cmd_verify->add_option("--max-weight", max_weight, "distance cutoff (default min(n,7))");
    std::string compare_path;
    cmd_verify->add_option("--compare", compare_path,
                           "reference code for gauge-group equality after seam relabeling");
    add_output(cmd_verify);

    // teleport
    auto* cmd_teleport = app.add_subcommand("teleport", "teleport a logical state A -> B");
    add_merge_options(cmd_teleport, margs);
    uint64_t seed = 1;
    std::size_t rounds = 2;
    std::string state_label = "all";
    cmd_teleport->add_option("--seed", seed, "rng seed");
    cmd_teleport->add_option("--state", state_label, "Z+|Z-|X+|X-|Y+|Y-|all");
    cmd_teleport->add_option("--rounds", rounds, "stabilizer re-measurement sweeps");
    add_output(cmd_teleport);

    // render
    auto* cmd_render = app.add_subcommand("render", "render a code lattice as SVG");
    std::vector<std::size_t> highlight;
    cmd_render->add_option("--code", code_path, "code file")->required();
    cmd_render->add_option("--highlight", highlight, "qubit indices to highlight");
    cmd_render->add_option("-o,--output", out, "SVG destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_build) {
            SubsystemCode code = build_family(family, size, size2);
            write_text(out, dump_report(code_to_json(code)));
            return 0;
        }
        if (*cmd_analyze || *cmd_distance) {
            SubsystemCode code = load_code(code_path);
            CodeAnalysis an = analyze(code);
            std::size_t mw = max_weight ? max_weight : default_max_weight(code.n);
            an.params.d = distance(code, an, mw);
            json rep = analysis_to_json(an);
            rep["config"] = config_echo({{"command", *cmd_analyze ? "analyze" : "distance"},
                                         {"code", code_path},
                                         {"max_weight", mw}});
            if (*cmd_distance)
                rep = json{{"config", rep["config"]},
                           {"distance", an.params.d ? json(*an.params.d) : json(nullptr)},
                           {"max_weight", mw}};
            emit(rep, out, format);
            return 0;
        }
        if (*cmd_merge || *cmd_verify) {
            MergeResult mr = make_merge(margs);
            std::size_t mw = max_weight ? max_weight : default_max_weight(mr.merged.n);
            MergedParamsReport params = verify_merged_parameters(mr, mw);
            auto witnesses = verify_lemma2(mr);
            json rep = merge_report_json(mr, params, witnesses);
            rep["config"] = config_echo(merge_config_json(margs));
            if (*cmd_verify && !compare_path.empty()) {
                bool equal = gauge_groups_equal_after_seam_collapse(mr, load_code(compare_path));
                rep["group_equality"] = {{"reference", compare_path}, {"equal", equal}};
                if (!equal) {
                    rep["ok"] = false;
                    rep["violations"].push_back("gauge group differs from the reference code");
                }
            }
            emit(rep, out, format);
            if (*cmd_merge && !out_code.empty())
                write_text(out_code, dump_report(code_to_json(mr.merged)));
            return rep["ok"].get<bool>() ? 0 : 1;
        }
        if (*cmd_split) {
            MergeResult mr = make_merge(margs);
            SplitResult sr = split(mr);
            json rep;
            rep["config"] = config_echo(merge_config_json(margs));
            rep["code_a"] = code_to_json(sr.code_a);
            rep["code_b"] = code_to_json(sr.code_b);
            rep["joint_record"] = sr.joint_record.to_string();
            emit(rep, out, format);
            return 0;
        }
        if (*cmd_teleport) {
            MergeResult mr = make_merge(margs);
            std::vector<Eigenstate> states;
            if (state_label == "all") {
                states.assign(std::begin(kAllEigenstates), std::end(kAllEigenstates));
            } else {
                auto e = parse_eigenstate(state_label);
                if (!e) throw UsageError("bad state label: " + state_label);
                states.push_back(*e);
            }
            json runs = json::array();
            bool all_pass = true;
            for (Eigenstate e : states) {
                TeleportReport tr = teleport(mr, e, seed, rounds);
                runs.push_back(teleport_report_json(tr));
                all_pass = all_pass && tr.pass;
            }
            json rep;
            json cfg = merge_config_json(margs);
            cfg["seed"] = seed;
            cfg["state"] = state_label;
            cfg["rounds"] = rounds;
            rep["config"] = config_echo(cfg);
            rep["runs"] = runs;
            rep["passed"] = all_pass;
            emit(rep, out, format);
            return all_pass ? 0 : 1;
        }
        if (*cmd_render) {
            SubsystemCode code = load_code(code_path);
            write_text(out, render_svg(code, highlight));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidCodeError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
