// Copyright 2026 The tmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmc/circuit.h"
#include "tmc/compiler.h"
#include "tmc/generators.h"
#include "tmc/report.h"

namespace tmc {

namespace {

constexpr const char *kVersion = "tmc 1.0.0";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string &path, std::istream &in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw IoError("cannot write " + path);
    }
}

nlohmann::ordered_json counts_json(const Circuit &c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto &[name, count] : gate_counts(c)) {
        j[name] = count;
    }
    return j;
}

std::string permutation_text(const std::vector<size_t> &perm) {
    std::string s;
    for (size_t q : perm) {
        s += (s.empty() ? "" : " ") + std::to_string(q);
    }
    return s;
}

struct CompileConfig {
    std::vector<std::string> inputs;
    std::string target;
    std::string natives = "s_sx";
    std::string frame = "report";
    std::string strategy = "auto";
    std::string output = "-";
    std::string metadata;
    std::string out_dir;
    std::vector<std::string> allow;
    size_t jobs = 1;
    bool expand_ecr = false;
    bool show_tableau = false;
    bool iswap_heuristic = false;
};

CompileOptions compile_options(const CompileConfig &cfg) {
    CompileOptions options;
    options.frame = cfg.frame == "fold" ? FrameMode::fold : cfg.frame == "none" ? FrameMode::none : FrameMode::report;
    options.strategy = cfg.strategy == "greedy"    ? Strategy::greedy
                       : cfg.strategy == "tracked" ? Strategy::tracked
                                                   : Strategy::automatic;
    for (const auto &pair : cfg.allow) {
        size_t dash = pair.find('-');
        if (dash == std::string::npos) {
            throw std::invalid_argument("--allow expects A-B, got " + pair);
        }
        options.allowed_pairs.emplace_back(std::stoul(pair.substr(0, dash)), std::stoul(pair.substr(dash + 1)));
    }
    return options;
}

// Compiles one input; writes circuit and metadata. Returns an exit code.
int compile_one(const CompileConfig &cfg, const std::string &input, const std::string &output,
                const std::string &metadata, std::istream &in, std::ostream &out, std::ostream &err) {
    Circuit source;
    try {
        source = parse_circuit(read_text(input, in));
    } catch (const ParseError &e) {
        err << "error: " << input << ": " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    CompilationResult result;
    GateSet gs;
    try {
        gs = gateset_by_name(cfg.target, cfg.natives);
        CompileOptions options = compile_options(cfg);
        result = cfg.iswap_heuristic ? compile_iswap_heuristic(source, gs, options) : compile(source, gs, options);
    } catch (const VerificationError &e) {
        err << "error: " << input << ": verification failed: " << e.what() << "\n";
        return EXIT_VERIFICATION_FAILED;
    } catch (const std::exception &e) {
        err << "error: " << input << ": " << e.what() << "\n";
        return EXIT_COMPILE_ERROR;
    }

    nlohmann::ordered_json meta;
    meta["gateset"] = gs.name;
    meta["verified"] = result.verified;
    meta["strategy"] = result.strategy_used;
    meta["input_counts"] = counts_json(source);
    meta["output_counts"] = counts_json(result.circuit);
    meta["depth_in"] = source.depth();
    meta["depth_out"] = result.circuit.depth();
    meta["depth_with_frame"] = result.depth_with_frame;
    meta["frame"] = result.frame.letters();
    meta["frame_mode"] = cfg.frame;
    meta["permutation"] = result.permutation;
    if (!result.flagged_pairs.empty()) {
        meta["flagged_pairs"] = result.flagged_pairs;
    }
    try {
        EmitOptions emit_options;
        emit_options.expand_ecr = cfg.expand_ecr;
        write_text(output, emit_circuit(result.circuit, emit_options), out);
        if (metadata.empty()) {
            err << meta.dump(2) << "\n";
        } else {
            write_text(metadata, meta.dump(2) + "\n", out);
        }
        if (cfg.show_tableau) {
            err << circuit_tableau(result.circuit).str();
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_COMPILE_ERROR;
    }
    return result.verified ? EXIT_OK : EXIT_VERIFICATION_FAILED;
}

int cmd_compile(const CompileConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    if (cfg.inputs.size() == 1) {
        return compile_one(cfg, cfg.inputs[0], cfg.output, cfg.metadata, in, out, err);
    }
    if (cfg.out_dir.empty()) {
        err << "error: several inputs need --out-dir\n";
        return EXIT_COMPILE_ERROR;
    }
    std::filesystem::create_directories(cfg.out_dir);
    std::vector<int> codes(cfg.inputs.size(), 0);
    std::vector<std::string> messages(cfg.inputs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        std::istringstream no_input;
        std::ostringstream no_output;
        for (size_t k = next++; k < cfg.inputs.size(); k = next++) {
            const std::string &input = cfg.inputs[k];
            std::string stem = std::filesystem::path(input).stem().string();
            std::string base = (std::filesystem::path(cfg.out_dir) / stem).string();
            std::ostringstream local_err;
            codes[k] = compile_one(cfg, input, base + ".stim", base + ".json", no_input, no_output, local_err);
            messages[k] = local_err.str();
        }
    };
    std::vector<std::thread> threads;
    size_t jobs = std::max<size_t>(1, std::min(cfg.jobs, cfg.inputs.size()));
    for (size_t t = 0; t < jobs; t++) {
        threads.emplace_back(worker);
    }
    for (auto &t : threads) {
        t.join();
    }
    int worst = EXIT_OK;
    for (size_t k = 0; k < cfg.inputs.size(); k++) {
        err << messages[k];
        worst = std::max(worst, codes[k]);
    }
    return worst;
}

struct VerifyConfig {
    std::string a, b;
    bool up_to_frame = false;
    bool up_to_permutation = false;
};

std::string row_key(const Tableau &t, size_t wire) {
    std::string key;
    for (size_t g = 0; g < 2 * t.num_qubits(); g++) {
        key += pauli_char(t.image(g).get(wire));
    }
    return key;
}

int cmd_verify(const VerifyConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Circuit ca, cb;
    try {
        ca = parse_circuit(read_text(cfg.a, in));
        cb = parse_circuit(read_text(cfg.b, in));
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    size_t n = std::max(ca.num_qubits, cb.num_qubits);
    Tableau ta = circuit_tableau(ca, n), tb = circuit_tableau(cb, n);

    // perm[q]: wire of A carrying qubit q of B.
    std::vector<size_t> perm(n);
    for (size_t q = 0; q < n; q++) {
        perm[q] = q;
    }
    if (cfg.up_to_permutation) {
        std::vector<bool> used(n, false);
        for (size_t q = 0; q < n; q++) {
            std::string key = row_key(tb, q);
            bool found = false;
            for (size_t w = 0; w < n && !found; w++) {
                if (!used[w] && row_key(ta, w) == key) {
                    used[w] = found = true;
                    perm[q] = w;
                }
            }
            if (!found) {
                out << "not equivalent: no wire matches qubit " << q << "\n";
                return EXIT_NOT_EQUIVALENT;
            }
        }
    }
    std::vector<size_t> inv(n);
    for (size_t q = 0; q < n; q++) {
        inv[perm[q]] = q;
    }
    Tableau relabeled = ta.relabel_outputs(inv);
    bool equivalent = relabeled == tb;
    PauliProduct frame(n);
    if (!equivalent && cfg.up_to_frame) {
        SignComparison cmp = equal_up_to_sign(relabeled, tb);
        if (cmp.equal) {
            std::vector<PauliProduct> images = relabeled.generator_images();
            PauliProduct logical = solve_frame(images, cmp.flips);
            for (size_t q = 0; q < n; q++) {
                frame.set(perm[q], logical.get(q));
            }
            equivalent = true;
        }
    }
    if (!equivalent) {
        out << "not equivalent\n";
        return EXIT_NOT_EQUIVALENT;
    }
    out << "equivalent\n";
    if (cfg.up_to_frame) {
        out << "frame: " << frame.letters() << "\n";
    }
    if (cfg.up_to_permutation) {
        out << "permutation: " << permutation_text(perm) << "\n";
    }
    return EXIT_OK;
}

struct StatsConfig {
    std::string input = "-";
    std::string format = "json";
    std::string compare_with;
    std::string output = "-";
};

int cmd_stats(const StatsConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Report a, b;
    try {
        a = make_report(parse_circuit(read_text(cfg.input, in)));
        if (!cfg.compare_with.empty()) {
            b = make_report(parse_circuit(read_text(cfg.compare_with, in)));
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    std::string text;
    if (cfg.compare_with.empty()) {
        text = cfg.format == "csv" ? report_csv(a) : report_json(a);
    } else {
        Comparison c = compare(a, b);
        if (cfg.format == "csv") {
            std::ostringstream csv;
            csv << "category,ratio\n";
            for (const auto &[name, value] : c.ratios) {
                csv << name << ',';
                if (value.has_value()) {
                    csv << *value;
                }
                csv << '\n';
            }
            text = csv.str();
        } else {
            nlohmann::ordered_json j;
            j["report"] = nlohmann::ordered_json::parse(report_json(a));
            j["baseline"] = nlohmann::ordered_json::parse(report_json(b));
            j["comparison"] = nlohmann::ordered_json::parse(comparison_json(c));
            text = j.dump(2) + "\n";
        }
    }
    try {
        write_text(cfg.output, text, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_COMPILE_ERROR;
    }
    return EXIT_OK;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford circuit compiler based on tableau manipulation", "tmc"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CompileConfig ccfg;
    auto *compile_cmd = app.add_subcommand("compile", "Compile circuits into a native gateset");
    compile_cmd->add_option("inputs", ccfg.inputs, "Input circuit files ('-' for stdin)")->required();
    compile_cmd->add_option("--target", ccfg.target, "Native entangler")
        ->required()
        ->check(CLI::IsMember({"cx", "cz", "sqrt_xx", "ecr", "iswap"}));
    compile_cmd->add_option("--natives", ccfg.natives, "Native single-qubit set")
        ->check(CLI::IsMember({"s_sx", "class6"}))
        ->capture_default_str();
    compile_cmd->add_option("--frame", ccfg.frame, "Pauli frame handling")
        ->check(CLI::IsMember({"report", "fold", "none"}))
        ->capture_default_str();
    compile_cmd->add_option("--strategy", ccfg.strategy, "Propagation fixing strategy")
        ->check(CLI::IsMember({"auto", "greedy", "tracked"}))
        ->capture_default_str();
    compile_cmd->add_option("-o,--output", ccfg.output, "Output circuit ('-' for stdout)")->capture_default_str();
    compile_cmd->add_option("--metadata", ccfg.metadata, "Metadata JSON path (default: stderr)");
    compile_cmd->add_option("--out-dir", ccfg.out_dir, "Output directory when compiling several inputs");
    compile_cmd->add_option("--jobs", ccfg.jobs, "Parallel compilations for several inputs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compile_cmd->add_option("--allow", ccfg.allow, "Available interaction A-B (iSWAP heuristic; repeatable)");
    compile_cmd->add_flag("--expand-ecr", ccfg.expand_ecr, "Write ECR as S/SQRT_X, CX, X layers");
    compile_cmd->add_flag("--show-tableau", ccfg.show_tableau, "Print the compiled tableau to stderr");
    compile_cmd->add_flag("--iswap-heuristic", ccfg.iswap_heuristic, "Allow CX-like <-> iSWAP-like compilation");

    VerifyConfig vcfg;
    auto *verify_cmd = app.add_subcommand("verify", "Check two circuits for equivalence");
    verify_cmd->add_option("a", vcfg.a, "First circuit")->required();
    verify_cmd->add_option("b", vcfg.b, "Second circuit")->required();
    verify_cmd->add_flag("--up-to-frame", vcfg.up_to_frame, "Allow a final Pauli frame");
    verify_cmd->add_flag("--up-to-permutation", vcfg.up_to_permutation, "Allow relabelled output wires");

    auto *generate_cmd = app.add_subcommand("generate", "Generate benchmark circuits");
    generate_cmd->require_subcommand(1);
    size_t distance = 3;
    std::string gen_output = "-";
    auto *surface_cmd = generate_cmd->add_subcommand("surface-code", "Rotated surface code syndrome extraction");
    surface_cmd->add_option("--distance", distance, "Odd code distance >= 3")->required();
    surface_cmd->add_option("-o,--output", gen_output, "Output path")->capture_default_str();
    RandomCircuitSpec rspec;
    std::string entangler_name = "CX";
    auto *random_cmd = generate_cmd->add_subcommand("random-clifford", "Seeded random Clifford circuit");
    random_cmd->add_option("--qubits", rspec.num_qubits, "Qubit count")->required();
    random_cmd->add_option("--entanglers", rspec.entangler_layers, "Entangler layers")->required();
    random_cmd->add_option("--seed", rspec.seed, "Seed")->required();
    random_cmd->add_option("--entangler", entangler_name, "Two-qubit gate name")->capture_default_str();
    random_cmd->add_option("-o,--output", gen_output, "Output path")->capture_default_str();

    StatsConfig scfg;
    auto *stats_cmd = app.add_subcommand("stats", "Gate distribution report");
    stats_cmd->add_option("input", scfg.input, "Circuit file ('-' for stdin)")->capture_default_str();
    stats_cmd->add_option("--format", scfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    stats_cmd->add_option("--compare", scfg.compare_with, "Baseline circuit for ratios");
    stats_cmd->add_option("-o,--output", scfg.output, "Output path")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_PARSE_ERROR;
    }

    if (compile_cmd->parsed()) {
        return cmd_compile(ccfg, in, out, err);
    }
    if (verify_cmd->parsed()) {
        return cmd_verify(vcfg, in, out, err);
    }
    if (stats_cmd->parsed()) {
        return cmd_stats(scfg, in, out, err);
    }
    try {
        std::string text;
        if (surface_cmd->parsed()) {
            text = surface_code_text(distance);
        } else {
            for (char &ch : entangler_name) {
                ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            }
            const GateDef *g = find_builtin(entangler_name);
            if (g == nullptr) {
                err << "error: unknown entangler " << entangler_name << "\n";
                return EXIT_PARSE_ERROR;
            }
            rspec.entangler = g;
            text = emit_circuit(random_clifford_circuit(rspec));
        }
        write_text(gen_output, text, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    return EXIT_OK;
}

}  // namespace tmc
