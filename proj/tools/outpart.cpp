// outpart: checkers, solvers, gadget builders, reduction compilers and
// brute-force oracles for out-degree reducing digraph partitions.
//
// Exit codes: 0 valid/found, 1 checked-negative, 2 input or usage error,
// 3 unsupported parameter regime.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "outpart/checkers.hpp"
#include "outpart/gadgets.hpp"
#include "outpart/oracle.hpp"
#include "outpart/reductions.hpp"
#include "outpart/solvers.hpp"
#include "outpart/structure.hpp"

using json = nlohmann::ordered_json;
using namespace outpart;

namespace {

constexpr int exit_valid = 0;
constexpr int exit_negative = 1;
constexpr int exit_input_error = 2;
constexpr int exit_unsupported = 3;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

// One manifest per run; replaying the command on the same inputs reproduces
// the outputs byte for byte.
struct ManifestWriter {
    json manifest;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    std::string path = "outpart_manifest.json";

    ManifestWriter(int argc, char** argv) {
        std::string command;
        for (int i = 0; i < argc; ++i) {
            if (i) command += ' ';
            command += argv[i];
        }
        manifest["command"] = command;
        manifest["inputs"] = json::object();
        manifest["parameters"] = json::object();
        manifest["outcome"] = nullptr;
        manifest["witness_path"] = nullptr;
    }

    void input(const std::string& file, const std::string& bytes) {
        manifest["inputs"][file] = fnv1a_digest(bytes);
    }

    void flush() {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        manifest["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        write_file(path, manifest.dump(2) + "\n");
    }
};

json roles_to_json(const RoleMap& roles) {
    json out = json::object();
    for (const auto& [name, ids] : roles) out[name] = ids;
    return out;
}

void emit_gadget(const std::string& out_prefix, const Digraph& d, const RoleMap& roles,
                 const json& extra = json::object()) {
    write_file(out_prefix + ".edges", serialize_digraph(d));
    json j;
    j["roles"] = roles_to_json(roles);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    write_file(out_prefix + ".roles.json", j.dump(2) + "\n");
    std::cout << "wrote " << out_prefix << ".edges (" << d.vertex_count() << " vertices, "
              << d.arc_count() << " arcs) and " << out_prefix << ".roles.json\n";
}

json artifact_meta(const ReductionArtifact& artifact) {
    json j;
    j["reduction"] = artifact.provenance.reduction;
    j["parameters"] = json::object();
    for (const auto& [key, value] : artifact.provenance.params) j["parameters"][key] = value;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"out-degree reducing partition toolkit"};
    app.require_subcommand(1);
    ManifestWriter manifest(argc, argv);
    int exit_code = exit_valid;

    std::string digraph_path, partition_path, kernel_path, cnf_path, graph_path;
    std::string out_path, property_spec, variant = "all";
    std::string gadget_kind;
    int k = 1, parts = -1, k1 = 0, k2 = 1, gi = 1, gp = 1, max_n = 8, jobs = 1;
    long long budget = 10'000'000;
    bool use_oracle = false, strong_flag = false, dot_flag = false, tree_mode = false;

    auto* check = app.add_subcommand("check", "validate a certificate against a digraph");
    check->add_option("--digraph", digraph_path)->required();
    check->add_option("--partition", partition_path);
    check->add_option("--kernel-file", kernel_path);
    check->add_option("--parts", parts);
    check->add_option("-k,--k", k);
    check->add_option("--k1", k1);
    check->add_option("--k2", k2);
    bool f_all = false, f_max = false, f_delta = false, f_kernel = false, f_majority = false;
    check->add_flag("--all-reducing", f_all);
    check->add_flag("--max-reducing", f_max);
    check->add_flag("--delta", f_delta);
    check->add_flag("--kernel", f_kernel);
    check->add_flag("--majority", f_majority);

    auto* solve = app.add_subcommand("solve", "construct a partition or certify non-existence");
    solve->add_option("--digraph", digraph_path)->required();
    solve->add_option("--variant", variant)->check(CLI::IsMember({"all", "max"}));
    solve->add_option("-k,--k", k);
    solve->add_option("-p,--parts", parts);
    solve->add_option("--out", out_path);
    solve->add_option("--budget", budget);
    solve->add_flag("--oracle", use_oracle, "fall back to exhaustive search in hard regimes");
    solve->add_option("--jobs", jobs);

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground-truth queries");
    oracle_cmd->add_option("--digraph", digraph_path);
    oracle_cmd->add_option("--graph", graph_path, "undirected input for coloring:p");
    oracle_cmd->add_option("--property", property_spec)->required();
    oracle_cmd->add_option("-p,--parts", parts);
    oracle_cmd->add_option("--budget", budget);
    oracle_cmd->add_option("--jobs", jobs);
    oracle_cmd->add_option("--out", out_path);

    auto* gadget = app.add_subcommand("gadget", "emit a gadget as edge list + role map");
    gadget->add_option("kind", gadget_kind)
        ->required()
        ->check(CLI::IsMember({"connector", "w", "h", "forcing", "xz", "variable", "d2", "seed",
                               "regularize"}));
    gadget->add_option("-i", gi);
    gadget->add_option("-p", gp);
    gadget->add_option("-k,--k", k);
    gadget->add_option("--k1", k1);
    gadget->add_option("--k2", k2);
    gadget->add_option("--max-n", max_n);
    gadget->add_option("--digraph", digraph_path);
    gadget->add_flag("--tree", tree_mode, "adjacent-endpoint regularization mode");
    gadget->add_option("--out", out_path);
    gadget->add_flag("--dot", dot_flag, "also emit a DOT rendering");

    auto* reduce = app.add_subcommand("reduce", "compile SAT/NAE/coloring instances to digraphs");
    std::string reduction_kind;
    reduce->add_option("kind", reduction_kind)
        ->required()
        ->check(CLI::IsMember({"delta", "kernel", "nae", "coloring"}));
    reduce->add_option("--cnf", cnf_path);
    reduce->add_option("--graph", graph_path);
    reduce->add_option("-k,--k", k);
    reduce->add_option("-p,--parts", parts);
    reduce->add_option("--k1", k1);
    reduce->add_option("--k2", k2);
    reduce->add_flag("--strong", strong_flag);
    reduce->add_option("--out", out_path);

    app.add_option("--manifest", manifest.path, "manifest output path");
    for (auto* sub : {check, solve, oracle_cmd, gadget, reduce}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    auto load_digraph = [&]() {
        const auto text = read_file(digraph_path);
        manifest.input(digraph_path, text);
        return parse_digraph(text);
    };

    if (*check) {
        const auto d = load_digraph();
        manifest.manifest["parameters"] = {{"k", k}, {"k1", k1}, {"k2", k2}, {"parts", parts}};
        std::string report = "valid";
        bool valid = true;
        if (f_kernel) {
            if (kernel_path.empty()) throw input_error("--kernel requires --kernel-file");
            const auto text = read_file(kernel_path);
            manifest.input(kernel_path, text);
            const auto result = check_kernel(d, parse_vertex_set(text));
            valid = result.valid();
            report = result.to_string();
        } else {
            if (partition_path.empty()) throw input_error("check requires --partition");
            const auto text = read_file(partition_path);
            manifest.input(partition_path, text);
            const auto p = parse_partition(text, parts > 0 ? parts : -1);
            if (f_all) {
                const auto v = check_all_reducing(d, p, k);
                valid = !v;
                if (v)
                    report = "Violation vertex " + std::to_string(v->vertex) + " keeps " +
                             std::to_string(v->inside_out_degree) + " out-neighbours in part " +
                             std::to_string(v->part);
            } else if (f_max) {
                const auto v = check_max_reducing(d, p, k);
                valid = !v;
                if (v)
                    report = "Violation part " + std::to_string(v->part) +
                             " has induced max out-degree " + std::to_string(v->induced_max_out_degree);
            } else if (f_delta) {
                const auto v = check_delta_bounded(d, p, k1, k2);
                valid = !v;
                if (v)
                    report = "Violation part " + std::to_string(v->part) +
                             " has induced max out-degree " + std::to_string(v->induced_max_out_degree) +
                             " > " + std::to_string(v->cap);
            } else if (f_majority) {
                const auto v = check_majority_2coloring(d, p);
                valid = !v;
                if (v) report = "Violation vertex " + std::to_string(v->vertex);
            } else {
                throw input_error("choose one of --all-reducing/--max-reducing/--delta/--kernel/--majority");
            }
        }
        std::cout << report << "\n";
        manifest.manifest["outcome"] = report;
        exit_code = valid ? exit_valid : exit_negative;
    } else if (*solve) {
        const auto d = load_digraph();
        manifest.manifest["parameters"] = {{"variant", variant}, {"k", k}, {"parts", parts}};
        if (k <= 0 || parts <= 1) throw input_error("need k >= 1 and -p >= 2");

        std::optional<SolveOutcome> outcome;
        if (use_oracle) {
            const OracleProperty prop = variant == "all" ? OracleProperty{prop_all_reducing{k}}
                                                         : OracleProperty{prop_max_reducing{k}};
            const auto found = exhaustive_partition_search(d, prop, parts, budget, jobs);
            if (found.status == SearchStatus::budget_exceeded)
                throw input_error("oracle budget exceeded; result indeterminate");
            if (found.status == SearchStatus::found)
                outcome = SolveOutcome{found.witness};
            else
                outcome = SolveOutcome{NonExistence{{}, "exhaustive search found no partition"}};
        } else if (k == 1 && parts == 2) {
            outcome = variant == "all" ? solve_one_all_2partition(d, budget)
                                       : solve_one_max_2partition(d, budget);
        } else if (parts >= 2 * k + 1) {
            auto p = solve_k_all_partition_2k_plus_1(d, k);
            p.parts = parts;  // trailing parts stay empty
            outcome = SolveOutcome{std::move(p)};
        } else if (parts == 2 * k && k >= 2) {
            if (variant == "max" && degree_profile(d).max_out > k) {
                std::cout << "unsupported regime: max-variant 2k-partition with max out-degree above k\n";
                manifest.manifest["outcome"] = "unsupported";
                manifest.flush();
                return exit_unsupported;
            }
            outcome = solve_k_all_partition_2k(d, k);
        } else {
            std::cout << "NP-complete regime for k=" << k << ", p=" << parts
                      << "; rerun with --oracle for exhaustive search\n";
            manifest.manifest["outcome"] = "unsupported";
            manifest.flush();
            return exit_unsupported;
        }

        if (const auto* p = solved(*outcome)) {
            // re-check through the matching checker before anything is written
            const bool bad = variant == "all" ? check_all_reducing(d, *p, k).has_value()
                                              : check_max_reducing(d, *p, k).has_value();
            if (bad) throw std::logic_error("solver emitted a partition its checker rejects");
            const std::string path = out_path.empty() ? digraph_path + ".partition" : out_path;
            write_file(path, serialize_partition(*p));
            std::cout << "partition written: " << path << "\n";
            manifest.manifest["outcome"] = "found";
            manifest.manifest["witness_path"] = path;
        } else if (const auto* missing = std::get_if<NonExistence>(&*outcome)) {
            std::cout << "NonExistence: " << missing->reason;
            if (!missing->component.empty()) {
                std::cout << " (component:";
                for (int v : missing->component) std::cout << ' ' << v;
                std::cout << ")";
            }
            std::cout << "\n";
            manifest.manifest["outcome"] = "non-existence";
            exit_code = exit_negative;
        } else {
            throw input_error("cycle-search budget exceeded; result indeterminate");
        }
    } else if (*oracle_cmd) {
        manifest.manifest["parameters"] = {{"property", property_spec}, {"parts", parts}};
        if (property_spec.rfind("coloring:", 0) == 0) {
            if (graph_path.empty()) throw input_error("coloring:p needs --graph");
            const auto text = read_file(graph_path);
            manifest.input(graph_path, text);
            const auto g = parse_graph(text);
            const int colors = std::stoi(property_spec.substr(9));
            const auto result = coloring_brute_force(g, colors, budget);
            if (result.status == SearchStatus::found) {
                std::cout << "witness:";
                for (int c : result.coloring) std::cout << ' ' << c;
                std::cout << "\n";
                manifest.manifest["outcome"] = "found";
            } else if (result.status == SearchStatus::none) {
                std::cout << "none (exhaustive)\n";
                manifest.manifest["outcome"] = "none";
                exit_code = exit_negative;
            } else {
                throw input_error("oracle budget exceeded; result indeterminate");
            }
            manifest.flush();
            return exit_code;
        }
        if (digraph_path.empty()) throw input_error("oracle needs --digraph");
        const auto d = load_digraph();
        OracleProperty prop = prop_all_reducing{1};
        if (property_spec.rfind("all:", 0) == 0)
            prop = prop_all_reducing{std::stoi(property_spec.substr(4))};
        else if (property_spec.rfind("max:", 0) == 0)
            prop = prop_max_reducing{std::stoi(property_spec.substr(4))};
        else if (property_spec.rfind("delta:", 0) == 0) {
            const auto rest = property_spec.substr(6);
            const auto comma = rest.find(',');
            if (comma == std::string::npos) throw input_error("expected delta:k1,k2");
            prop = prop_delta_bounded{std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1))};
            parts = 2;
        } else if (property_spec == "majority2") {
            prop = prop_majority2{};
            parts = 2;
        } else if (property_spec == "kernel") {
            prop = prop_kernel_part{};
            parts = 2;
        } else {
            throw input_error("unknown property \"" + property_spec + "\"");
        }
        const auto result = exhaustive_partition_search(d, prop, parts, budget, jobs);
        if (result.status == SearchStatus::found) {
            std::cout << "witness:";
            for (int v = 0; v < result.witness.size(); ++v) std::cout << ' ' << result.witness[v];
            std::cout << "\n";
            if (!out_path.empty()) {
                write_file(out_path, serialize_partition(result.witness));
                manifest.manifest["witness_path"] = out_path;
            }
            manifest.manifest["outcome"] = "found";
        } else if (result.status == SearchStatus::none) {
            std::cout << "none (exhaustive)\n";
            manifest.manifest["outcome"] = "none";
            exit_code = exit_negative;
        } else {
            throw input_error("oracle budget exceeded; result indeterminate");
        }
    } else if (*gadget) {
        const std::string prefix = out_path.empty() ? "gadget_" + gadget_kind : out_path;
        manifest.manifest["parameters"] = {{"kind", gadget_kind}, {"i", gi}, {"p", gp},
                                           {"k", k},              {"k1", k1}, {"k2", k2}};
        GadgetInstance instance;
        json extra = json::object();
        if (gadget_kind == "connector") {
            instance = make_connector(gi, gp);
        } else if (gadget_kind == "w") {
            instance = make_kernel_gadgets().first;
        } else if (gadget_kind == "h") {
            instance = make_kernel_gadgets().second;
        } else if (gadget_kind == "forcing") {
            const auto seed = find_no_even_cycle_outregular(k, max_n);
            if (!seed) throw input_error("no certified seed within --max-n");
            instance = make_forcing_gadget(k, seed->digraph);
        } else if (gadget_kind == "xz") {
            const auto seed = find_no_even_cycle_outregular(k2, max_n);
            if (!seed) throw input_error("no certified seed within --max-n");
            const auto [x_gadget, z_gadget] = make_xz_forcers(k1, k2, seed->digraph);
            emit_gadget(prefix + "_x", x_gadget.digraph, x_gadget.roles);
            instance = z_gadget;
        } else if (gadget_kind == "variable") {
            instance = make_variable_gadget(k1, k2);
        } else if (gadget_kind == "d2") {
            instance = make_d2_gadget(k, gp);
        } else if (gadget_kind == "seed") {
            const auto seed = find_no_even_cycle_outregular(k, max_n);
            if (!seed) {
                std::cout << "NotFound: no certified seed within the search bounds\n";
                manifest.manifest["outcome"] = "not-found";
                manifest.flush();
                return exit_negative;
            }
            instance.digraph = seed->digraph;
            for (int v = 0; v < seed->digraph.vertex_count(); ++v) instance.roles["seed"].push_back(v);
            extra["certification"] = {{"candidate", seed->candidate},
                                      {"candidates_examined", seed->candidates_tried},
                                      {"k", seed->k},
                                      {"even_cycle_search", "exhaustive, none found"},
                                      {"strong", true}};
        } else if (gadget_kind == "regularize") {
            if (digraph_path.empty()) throw input_error("regularize needs --digraph");
            const auto d = load_digraph();
            instance.digraph =
                regularize(d, gp, tree_mode ? RegularizeMode::tree : RegularizeMode::chain);
            for (int v = 0; v < d.vertex_count(); ++v) instance.roles["original"].push_back(v);
            for (int v = d.vertex_count(); v < instance.digraph.vertex_count(); ++v)
                instance.roles["added"].push_back(v);
        }
        emit_gadget(prefix, instance.digraph, instance.roles, extra);
        if (dot_flag) write_file(prefix + ".dot", to_dot(instance.digraph));
        manifest.manifest["outcome"] = "written";
        manifest.manifest["witness_path"] = prefix + ".edges";
    } else if (*reduce) {
        const std::string prefix = out_path.empty() ? "artifact_" + reduction_kind : out_path;
        manifest.manifest["parameters"] = {{"kind", reduction_kind}, {"k", k},   {"p", parts},
                                           {"k1", k1},               {"k2", k2}, {"strong", strong_flag}};
        ReductionArtifact artifact;
        if (reduction_kind == "coloring") {
            if (graph_path.empty()) throw input_error("coloring reduction needs --graph");
            const auto text = read_file(graph_path);
            manifest.input(graph_path, text);
            artifact = reduce_coloring_to_reducing_partition(parse_graph(text), k, parts).artifact;
        } else {
            if (cnf_path.empty()) throw input_error("reduction needs --cnf");
            const auto text = read_file(cnf_path);
            manifest.input(cnf_path, text);
            if (reduction_kind == "delta") {
                const auto f = parse_dimacs(text, CnfMode::plain3sat);
                artifact = reduce_sat_to_delta_partition(f, k1, k2).artifact;
            } else if (reduction_kind == "kernel") {
                const auto f = parse_dimacs(text, CnfMode::plain3sat);
                artifact = reduce_sat_to_kernel(f, strong_flag).artifact;
            } else {
                const auto f = parse_dimacs(text, CnfMode::monotone_nae);
                artifact = reduce_nae_to_kk_partition(f, k).artifact;
            }
        }
        emit_gadget(prefix, artifact.digraph, artifact.roles, artifact_meta(artifact));
        manifest.manifest["outcome"] = "written";
        manifest.manifest["witness_path"] = prefix + ".edges";
    }

    manifest.flush();
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_input_error;
    }
}
