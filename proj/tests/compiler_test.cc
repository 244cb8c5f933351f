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

#include "tmc/compiler.h"

#include <gtest/gtest.h>

#include <thread>

#include "test_util.h"

using namespace tmc;
using testing_util::timeline;
using V = std::vector<std::string>;

namespace {

// Independent check of a lookup cell: the gate's images of the current
// letters must be the target letters.
bool maps(const GateDef &g, Pauli from_x, Pauli from_z, Pauli to_x, Pauli to_z) {
    return class_image(g, from_x) == to_x && class_image(g, from_z) == to_z;
}

Tableau with_frame(const Circuit &c, const PauliProduct &frame) {
    Tableau t = circuit_tableau(c, frame.num_qubits());
    t.append_pauli(frame);
    return t;
}

void expect_valid(const Circuit &source, const CompilationResult &r, const GateSet &gs) {
    Tableau target = circuit_tableau(source);
    size_t n = target.num_qubits();
    Tableau physical = with_frame(r.circuit, r.frame);
    std::vector<size_t> inv(n);
    for (size_t q = 0; q < n; q++) {
        inv[r.permutation[q]] = q;
    }
    EXPECT_EQ(physical.relabel_outputs(inv), target);
    EXPECT_EQ(two_qubit_count(r.circuit), two_qubit_count(source));
    for (const auto &layer : r.circuit.layers) {
        for (const auto &inst : layer) {
            if (inst.gate->arity == 2) {
                EXPECT_EQ(inst.gate, gs.entangler);
            } else {
                EXPECT_TRUE(std::find(gs.natives.begin(), gs.natives.end(), inst.gate) != gs.natives.end())
                    << inst.gate->name;
            }
        }
    }
    EXPECT_TRUE(r.verified);
}

}  // namespace

TEST(compiler, lookup_table_every_cell) {
    const auto &pairs = ConjugationLookup::pairs();
    ASSERT_EQ(pairs.size(), 6u);
    for (auto [cx, cz] : pairs) {
        for (auto [tx, tz] : pairs) {
            const GateDef &g = ConjugationLookup::lookup(cx, cz, tx, tz);
            EXPECT_TRUE(maps(g, cx, cz, tx, tz)) << pauli_char(cx) << pauli_char(cz) << "->" << pauli_char(tx)
                                                 << pauli_char(tz) << " got " << g.name;
            EXPECT_EQ(g.arity, 1u);
            EXPECT_EQ(&class_of(g.semantics), &g);
        }
    }
}

TEST(compiler, lookup_table_rows) {
    const char *rows[6][6] = {
        {"I", "H_YZ", "H_XY", "C_XYZ", "C_ZYX", "H"}, {"H_YZ", "I", "C_XYZ", "H_XY", "H", "C_ZYX"},
        {"H_XY", "C_ZYX", "I", "H", "H_YZ", "C_XYZ"}, {"C_ZYX", "H_XY", "H", "I", "C_XYZ", "H_YZ"},
        {"C_XYZ", "H", "H_YZ", "C_ZYX", "I", "H_XY"}, {"H", "C_XYZ", "C_ZYX", "H_YZ", "H_XY", "I"},
    };
    const auto &pairs = ConjugationLookup::pairs();
    for (size_t r = 0; r < 6; r++) {
        for (size_t c = 0; c < 6; c++) {
            EXPECT_EQ(ConjugationLookup::lookup(pairs[r].first, pairs[r].second, pairs[c].first, pairs[c].second).name,
                      rows[r][c]);
        }
    }
    // (Z, X) -> (X, Z) is a Hadamard.
    EXPECT_EQ(ConjugationLookup::lookup(Pauli::Z, Pauli::X, Pauli::X, Pauli::Z).name, "H");
    EXPECT_THROW(ConjugationLookup::lookup(Pauli::X, Pauli::X, Pauli::X, Pauli::Z), std::invalid_argument);
}

TEST(compiler, interlaced_skeleton) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    GateSet gs = gateset_by_name("ecr");
    Circuit skeleton = initial_condition(source, gs);
    EXPECT_EQ(emit_circuit(skeleton), "ECR 0 1 2 3\nTICK\nECR 0 2\nTICK\nECR 1 3\n");
    EXPECT_EQ(circuit_tableau(skeleton), testing_util::interlaced_ecr_skeleton());
}

TEST(compiler, interlaced_propagation_inserts) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    Tableau target = circuit_tableau(source);
    GateSet gs = gateset_by_name("ecr");
    Circuit prop = fix_propagation(initial_condition(source, gs), target, gs);
    EXPECT_EQ(timeline(prop, 0), (V{"H", "ECR:0:1", "ECR:0:2"}));
    EXPECT_EQ(timeline(prop, 1), (V{"ECR:1:0", "H_YZ", "ECR:0:3"}));
    EXPECT_EQ(timeline(prop, 2), (V{"ECR:0:3", "H_XY", "ECR:1:0"}));
    EXPECT_EQ(timeline(prop, 3), (V{"ECR:1:2", "ECR:1:1"}));
    // Every propagated image now has the target's support.
    Tableau t = circuit_tableau(prop, 4);
    for (size_t g = 0; g < 8; g++) {
        EXPECT_EQ(support(t.image(g)), support(target.image(g))) << g;
    }
}

TEST(compiler, interlaced_conjugation_appends) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    Tableau target = circuit_tableau(source);
    GateSet gs = gateset_by_name("ecr");
    Circuit cls = fix_conjugation(fix_propagation(initial_condition(source, gs), target, gs), target);
    EXPECT_EQ(timeline(cls, 0), (V{"H", "ECR:0:1", "ECR:0:2", "H"}));
    EXPECT_EQ(timeline(cls, 1), (V{"ECR:1:0", "H_YZ", "ECR:0:3", "H_XY"}));
    EXPECT_EQ(timeline(cls, 2), (V{"ECR:0:3", "H_XY", "ECR:1:0", "H_YZ"}));
    EXPECT_EQ(timeline(cls, 3), (V{"ECR:1:2", "ECR:1:1"}));
    EXPECT_TRUE(equal_up_to_sign(circuit_tableau(cls, 4), target).equal);
}

TEST(compiler, interlaced_native_circuit_and_frame) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    GateSet gs = gateset_by_name("ecr");
    CompilationResult r = compile(source, gs);
    EXPECT_EQ(r.strategy_used, "greedy");
    EXPECT_EQ(timeline(r.circuit, 0), (V{"S", "SQRT_X", "S", "ECR:0:1", "ECR:0:2", "S", "SQRT_X", "S"}));
    EXPECT_EQ(timeline(r.circuit, 1), (V{"ECR:1:0", "SQRT_X", "ECR:0:3", "S"}));
    EXPECT_EQ(timeline(r.circuit, 2), (V{"ECR:0:3", "S", "ECR:1:0", "SQRT_X"}));
    EXPECT_EQ(timeline(r.circuit, 3), (V{"ECR:1:2", "ECR:1:1"}));
    EXPECT_EQ(circuit_tableau(r.circuit, 4), testing_util::interlaced_ecr_compiled());
    EXPECT_EQ(r.frame.str(), "+X2");
    EXPECT_EQ(r.frame, extract_frame(r.circuit, circuit_tableau(source)));
    expect_valid(source, r, gs);
    EXPECT_EQ(r.stats.two_qubit, 4u);
    EXPECT_EQ(r.stats.counts.at("S"), 6u);
    EXPECT_EQ(r.stats.counts.at("SQRT_X"), 4u);
}

TEST(compiler, frame_modes) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    GateSet gs = gateset_by_name("ecr");
    CompileOptions fold;
    fold.frame = FrameMode::fold;
    CompilationResult f = compile(source, gs, fold);
    EXPECT_EQ(circuit_tableau(f.circuit, 4), circuit_tableau(source));
    EXPECT_EQ(f.stats.counts.at("X"), 1u);
    EXPECT_EQ(f.circuit.depth(), f.depth_with_frame);
    CompileOptions none;
    none.frame = FrameMode::none;
    EXPECT_THROW(compile(source, gs, none), CompileError);
    // A frame-free compilation passes in mode none.
    Circuit plain = parse_circuit("CX 0 1\n");
    CompilationResult p = compile(plain, gateset_by_name("cx"), none);
    EXPECT_TRUE(p.frame.is_identity());
    EXPECT_EQ(emit_circuit(p.circuit), "CX 0 1\n");
}

TEST(compiler, identity_entangler_compiles_to_itself) {
    for (const char *name : {"cx", "cz", "sqrt_xx", "ecr"}) {
        GateSet gs = gateset_by_name(name);
        Circuit c(2);
        c.append_layer({{gs.entangler, {0, 1}}});
        CompilationResult r = compile(c, gs);
        EXPECT_EQ(r.circuit, c) << name;
        EXPECT_TRUE(r.frame.is_identity());
    }
}

TEST(compiler, greedy_failure_falls_back_to_tracking) {
    Circuit source = parse_circuit("CX 0 1\nTICK\nCX 0 1\n");
    GateSet gs = gateset_by_name("cz");
    CompileOptions greedy;
    greedy.strategy = Strategy::greedy;
    EXPECT_THROW(compile(source, gs, greedy), CompileError);
    CompilationResult r = compile(source, gs);
    EXPECT_EQ(r.strategy_used, "tracked");
    expect_valid(source, r, gs);
}

TEST(compiler, tracked_strategy_on_random_circuits) {
    CompileOptions tracked;
    tracked.strategy = Strategy::tracked;
    for (const char *name : {"cx", "cz", "sqrt_xx", "ecr"}) {
        GateSet gs = gateset_by_name(name);
        for (uint64_t seed = 0; seed < 40; seed++) {
            Circuit c = testing_util::random_circuit(5, 6, seed, seed % 2 ? "CZ" : "ECR");
            CompilationResult r = compile(c, gs, tracked);
            EXPECT_EQ(r.strategy_used, "tracked");
            expect_valid(c, r, gs);
            // At most one class gate per wire between consecutive entangler layers.
            Circuit k = tracked_compile(c, gs);
            EXPECT_TRUE(equal_up_to_sign(circuit_tableau(k, 5), circuit_tableau(c)).equal);
        }
    }
}

TEST(compiler, class_mismatch_is_rejected) {
    Circuit source = parse_circuit("ISWAP 0 1\n");
    EXPECT_THROW(compile(source, gateset_by_name("cx")), CompileError);
    EXPECT_THROW(initial_condition(parse_circuit("CX 0 1\n"), make_gateset("iswap", builtin("ISWAP"),
                                                                             {&builtin("S"), &builtin("SQRT_X")})),
                 CompileError);
}

TEST(compiler, single_qubit_only_circuits) {
    Circuit source = parse_circuit("H 0\nTICK\nS 1\nTICK\nC_XYZ 0 2\n");
    for (const char *name : {"cx", "ecr"}) {
        GateSet gs = gateset_by_name(name);
        CompilationResult r = compile(source, gs);
        expect_valid(source, r, gs);
    }
    EXPECT_EQ(compile(Circuit(0), gateset_by_name("cx")).circuit.depth(), 0u);
}

TEST(compiler, single_qubit_gate_count_is_bounded) {
    // One class gate per wire between entangler layers, plus the ends; each
    // class gate expands to at most three natives.
    for (uint64_t seed = 0; seed < 100; seed++) {
        Circuit c = testing_util::random_circuit(6, 8, seed);
        GateSet gs = gateset_by_name(seed % 2 ? "sqrt_xx" : "cz");
        CompilationResult r = compile(c, gs);
        size_t entangler_layers = 0;
        for (const auto &layer : c.layers) {
            entangler_layers += std::any_of(layer.begin(), layer.end(), [](auto &i) { return i.gate->arity == 2; });
        }
        size_t slots = (entangler_layers + 1) * c.num_qubits;
        EXPECT_LE(r.class_circuit.instruction_count() - two_qubit_count(c), slots);
        EXPECT_LE(r.stats.single_qubit(), 3 * slots);
        expect_valid(c, r, gs);
    }
}

TEST(compiler, deterministic_and_thread_safe) {
    std::vector<Circuit> inputs;
    for (uint64_t seed = 0; seed < 16; seed++) {
        inputs.push_back(testing_util::random_circuit(5, 5, seed, "CZ"));
    }
    GateSet gs = gateset_by_name("ecr");
    std::vector<std::string> serial;
    for (const auto &c : inputs) {
        serial.push_back(emit_circuit(compile(c, gs).circuit));
    }
    std::vector<std::string> parallel(inputs.size());
    std::vector<std::thread> threads;
    for (size_t t = 0; t < 4; t++) {
        threads.emplace_back([&, t]() {
            for (size_t k = t; k < inputs.size(); k += 4) {
                parallel[k] = emit_circuit(compile(inputs[k], gs).circuit);
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    EXPECT_EQ(serial, parallel);
}

TEST(compiler, expand_to_natives_class6_is_identity_map) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    GateSet gs = gateset_by_name("ecr", "class6");
    CompilationResult r = compile(source, gs);
    expect_valid(source, r, gs);
    EXPECT_EQ(r.stats.single_qubit(), 6u);
}

TEST(compiler, iswap_heuristic_weight_four_check) {
    Circuit source = parse_circuit(testing_util::kWeightFourX);
    Circuit chain = parse_circuit("ISWAP 0 1\nTICK\nISWAP 1 2\nTICK\nISWAP 2 3\nTICK\nISWAP 3 4\n");
    GateSet gs = make_gateset("iswap", builtin("ISWAP"), {&builtin("S"), &builtin("SQRT_X")});
    CompilationResult r = compile_iswap_heuristic(source, gs);
    EXPECT_EQ(r.permutation, (std::vector<size_t>{4, 0, 1, 2, 3}));
    EXPECT_TRUE(r.frame.is_identity());
    expect_valid(source, r, gs);
    // The entangling skeleton is the nearest-neighbour chain.
    std::vector<std::vector<size_t>> pairs;
    for (const auto &layer : r.circuit.layers) {
        for (const auto &inst : layer) {
            if (inst.gate->arity == 2) {
                pairs.push_back(inst.targets);
            }
        }
    }
    EXPECT_EQ(pairs, (std::vector<std::vector<size_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    EXPECT_EQ(circuit_tableau(chain), testing_util::iswap_chain());
}

TEST(compiler, iswap_heuristic_random_circuits_both_directions) {
    GateSet to_iswap = make_gateset("iswap", builtin("ISWAP"), {&builtin("S"), &builtin("SQRT_X")});
    GateSet to_cx = gateset_by_name("cx");
    for (uint64_t seed = 0; seed < 60; seed++) {
        Circuit c = testing_util::random_circuit(4, 5, seed, "CX");
        CompilationResult r = compile_iswap_heuristic(c, to_iswap);
        expect_valid(c, r, to_iswap);
        Circuit i = testing_util::random_circuit(4, 5, seed, "ISWAP");
        CompilationResult back = compile_iswap_heuristic(i, to_cx);
        expect_valid(i, back, to_cx);
    }
}

TEST(compiler, iswap_heuristic_flags_disallowed_pairs) {
    Circuit source = parse_circuit(testing_util::kWeightFourX);
    GateSet gs = make_gateset("iswap", builtin("ISWAP"), {&builtin("S"), &builtin("SQRT_X")});
    CompileOptions opts;
    opts.allowed_pairs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    EXPECT_TRUE(compile_iswap_heuristic(source, gs, opts).flagged_pairs.empty());
    opts.allowed_pairs = {{1, 0}, {1, 2}};
    auto flagged = compile_iswap_heuristic(source, gs, opts).flagged_pairs;
    EXPECT_EQ(flagged, (std::vector<std::pair<size_t, size_t>>{{2, 3}, {3, 4}}));
}

TEST(compiler, iswap_heuristic_same_class_uses_plain_compile) {
    Circuit source = parse_circuit(testing_util::kInterlaced);
    GateSet gs = gateset_by_name("ecr");
    CompilationResult r = compile_iswap_heuristic(source, gs);
    EXPECT_EQ(r.permutation, (std::vector<size_t>{0, 1, 2, 3}));
    EXPECT_EQ(r.circuit, compile(source, gs).circuit);
    EXPECT_THROW(compile_iswap_heuristic(parse_circuit("SWAP 0 1\n"), gs), CompileError);
    EXPECT_THROW(compile_iswap_heuristic(parse_circuit("CX 0 1\nTICK\nISWAP 0 1\n"), gs), CompileError);
}
