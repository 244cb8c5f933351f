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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "test_util.h"
#include "tmc/circuit.h"

using namespace tmc;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmpdir() {
    const char *env = std::getenv("TMC_TEST_TMPDIR");
    fs::path p = env != nullptr ? fs::path(env) : fs::temp_directory_path() / "tmc_cli_test";
    fs::create_directories(p);
    return p;
}

std::string write_file(const std::string &name, const std::string &text) {
    fs::path p = tmpdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

TEST(cli, version_and_help) {
    CliRun v = run({"--version"});
    EXPECT_EQ(v.code, EXIT_OK);
    EXPECT_NE(v.out.find("tmc 1.0.0"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, EXIT_OK);
    EXPECT_EQ(run({}).code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"frobnicate"}).code, EXIT_PARSE_ERROR);
}

TEST(cli, compile_from_stdin_writes_circuit_and_metadata) {
    CliRun r = run({"compile", "-", "--target", "ecr"}, testing_util::kInterlaced);
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    Circuit out = parse_circuit(r.out);
    EXPECT_EQ(two_qubit_count(out), 4u);
    auto meta = nlohmann::json::parse(r.err);
    EXPECT_EQ(meta["verified"], true);
    EXPECT_EQ(meta["strategy"], "greedy");
    EXPECT_EQ(meta["frame"], "X2");
    EXPECT_EQ(meta["frame_mode"], "report");
    EXPECT_EQ(meta["input_counts"]["CX"], 4);
    EXPECT_EQ(meta["output_counts"]["ECR"], 4);
    EXPECT_EQ(meta["depth_in"], 5);
    EXPECT_EQ(meta["depth_out"], out.depth());
    EXPECT_EQ(meta["permutation"], nlohmann::json::array({0, 1, 2, 3}));
    EXPECT_FALSE(meta.contains("flagged_pairs"));
}

TEST(cli, compile_to_files_then_verify) {
    std::string src = write_file("interlaced.stim", testing_util::kInterlaced);
    std::string out = (tmpdir() / "interlaced_ecr.stim").string();
    std::string meta = (tmpdir() / "interlaced_ecr.json").string();
    CliRun r = run({"compile", src, "--target", "ecr", "-o", out, "--metadata", meta});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(nlohmann::json::parse(read_file(meta))["frame"], "X2");

    CliRun exact = run({"verify", out, src});
    EXPECT_EQ(exact.code, EXIT_NOT_EQUIVALENT);
    EXPECT_EQ(exact.out, "not equivalent\n");
    CliRun framed = run({"verify", out, src, "--up-to-frame"});
    EXPECT_EQ(framed.code, EXIT_OK);
    EXPECT_EQ(framed.out, "equivalent\nframe: X2\n");

    std::string folded = (tmpdir() / "interlaced_fold.stim").string();
    ASSERT_EQ(run({"compile", src, "--target", "ecr", "--frame", "fold", "-o", folded, "--metadata", meta}).code,
              EXIT_OK);
    EXPECT_EQ(run({"verify", folded, src}).out, "equivalent\n");
}

TEST(cli, compile_frame_none_fails_when_a_frame_is_needed) {
    CliRun r = run({"compile", "-", "--target", "ecr", "--frame", "none"}, testing_util::kInterlaced);
    EXPECT_EQ(r.code, EXIT_COMPILE_ERROR);
    EXPECT_NE(r.err.find("frame"), std::string::npos);
}

TEST(cli, compile_errors) {
    EXPECT_EQ(run({"compile", "-", "--target", "ecr"}, "M 0\n").code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"compile", "-", "--target", "ecr"}, "FOO 0\n").code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"compile", (tmpdir() / "missing.stim").string(), "--target", "cx"}).code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"compile", "-", "--target", "bogus"}, "H 0\n").code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"compile", "-"}, "H 0\n").code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"compile", "-", "--target", "cx"}, "ISWAP 0 1\n").code, EXIT_COMPILE_ERROR);
    EXPECT_EQ(run({"compile", "-", "--target", "cz", "--strategy", "greedy"}, "CX 0 1\nTICK\nCX 0 1\n").code,
              EXIT_COMPILE_ERROR);
}

TEST(cli, iswap_heuristic_and_verification_with_permutation) {
    std::string src = write_file("weight4.stim", testing_util::kWeightFourX);
    std::string out = (tmpdir() / "weight4_iswap.stim").string();
    std::string meta = (tmpdir() / "weight4_iswap.json").string();
    CliRun r = run({"compile", src, "--target", "iswap", "--iswap-heuristic", "-o", out, "--metadata", meta, "--allow",
                 "0-1", "--allow", "1-2"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto j = nlohmann::json::parse(read_file(meta));
    EXPECT_EQ(j["permutation"], nlohmann::json::array({4, 0, 1, 2, 3}));
    EXPECT_EQ(j["flagged_pairs"], nlohmann::json::parse("[[2,3],[3,4]]"));
    CliRun v = run({"verify", out, src, "--up-to-permutation", "--up-to-frame"});
    EXPECT_EQ(v.code, EXIT_OK);
    EXPECT_EQ(v.out, "equivalent\nframe: I\npermutation: 4 0 1 2 3\n");
    EXPECT_EQ(run({"verify", out, src}).code, EXIT_NOT_EQUIVALENT);
    // Without the heuristic the class mismatch is a compile error.
    EXPECT_EQ(run({"compile", src, "--target", "iswap", "-o", out, "--metadata", meta}).code, EXIT_COMPILE_ERROR);
}

TEST(cli, expand_ecr_and_show_tableau) {
    CliRun r = run({"compile", "-", "--target", "ecr", "--expand-ecr", "--show-tableau"}, "CX 0 1\n");
    ASSERT_EQ(r.code, EXIT_OK);
    EXPECT_EQ(r.out.find("ECR"), std::string::npos);
    EXPECT_NE(r.out.find("CX 0 1"), std::string::npos);
    EXPECT_NE(r.err.find("| X0 Z0 |"), std::string::npos);
}

TEST(cli, batch_compile) {
    fs::path dir = tmpdir() / "batch";
    fs::remove_all(dir);
    std::vector<std::string> args{"compile", "--target", "sqrt_xx", "--out-dir", dir.string(), "--jobs", "3"};
    for (int k = 0; k < 5; k++) {
        std::string text = emit_circuit(testing_util::random_circuit(4, 4, k));
        args.push_back(write_file("rand" + std::to_string(k) + ".stim", text));
    }
    CliRun r = run(args);
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    for (int k = 0; k < 5; k++) {
        std::string base = (dir / ("rand" + std::to_string(k))).string();
        EXPECT_TRUE(fs::exists(base + ".stim"));
        auto j = nlohmann::json::parse(read_file(base + ".json"));
        EXPECT_EQ(j["verified"], true);
    }
    EXPECT_EQ(run({"compile", "a.stim", "b.stim", "--target", "cx"}).code, EXIT_COMPILE_ERROR);
}

TEST(cli, generate_surface_code) {
    CliRun r = run({"generate", "surface-code", "--distance", "3"});
    ASSERT_EQ(r.code, EXIT_OK);
    EXPECT_EQ(parse_circuit(r.out), surface_code_syndrome_extraction(3).normalized());
    EXPECT_EQ(run({"generate", "surface-code", "--distance", "4"}).code, EXIT_PARSE_ERROR);
    EXPECT_EQ(run({"generate"}).code, EXIT_PARSE_ERROR);
}

TEST(cli, generate_random_clifford) {
    CliRun a = run({"generate", "random-clifford", "--qubits", "4", "--entanglers", "6", "--seed", "11"});
    CliRun b = run({"generate", "random-clifford", "--qubits", "4", "--entanglers", "6", "--seed", "11"});
    ASSERT_EQ(a.code, EXIT_OK);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, emit_circuit(testing_util::random_circuit(4, 6, 11)));
    CliRun cz = run({"generate", "random-clifford", "--qubits", "4", "--entanglers", "2", "--seed", "1", "--entangler",
                  "cz"});
    EXPECT_EQ(cz.out, emit_circuit(testing_util::random_circuit(4, 2, 1, "CZ")));
    EXPECT_EQ(run({"generate", "random-clifford", "--qubits", "4", "--entanglers", "2", "--seed", "1", "--entangler",
                   "nope"})
                  .code,
              EXIT_PARSE_ERROR);
}

TEST(cli, stats_json_csv_and_compare) {
    std::string src = write_file("stats_src.stim", testing_util::kInterlaced);
    CliRun j = run({"stats", src});
    ASSERT_EQ(j.code, EXIT_OK);
    auto report = nlohmann::json::parse(j.out);
    EXPECT_EQ(report["counts"]["CX"], 4);
    EXPECT_EQ(report["x_type"], 2);
    CliRun csv = run({"stats", "--format", "csv"}, testing_util::kInterlaced);
    EXPECT_EQ(csv.out, "gate,count,category\nCX,4,two_qubit\nH,2,x_type\n");

    CliRun compiled = run({"compile", "-", "--target", "ecr"}, testing_util::kInterlaced);
    std::string out = write_file("stats_out.stim", compiled.out);
    CliRun cmp = run({"stats", out, "--compare", src});
    ASSERT_EQ(cmp.code, EXIT_OK) << cmp.err;
    auto c = nlohmann::json::parse(cmp.out);
    EXPECT_DOUBLE_EQ(c["comparison"]["ratios"]["two_qubit"].get<double>(), 1.0);
    EXPECT_EQ(c["comparison"]["undefined"], nlohmann::json::array({"z_type"}));
    EXPECT_TRUE(c.contains("report"));
    EXPECT_TRUE(c.contains("baseline"));
    CliRun cmp_csv = run({"stats", out, "--compare", src, "--format", "csv"});
    EXPECT_EQ(cmp_csv.out.rfind("category,ratio\n", 0), 0u);
    EXPECT_NE(cmp_csv.out.find("two_qubit,1"), std::string::npos);
    EXPECT_EQ(run({"stats", "-"}, "M 0\n").code, EXIT_PARSE_ERROR);
}
