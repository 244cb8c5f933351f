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

#include "tmc/report.h"

#include "json.hpp"
#include <sstream>

namespace tmc {

bool is_z_type(const GateDef &g) {
    if (g.arity != 1) {
        return false;
    }
    // Diagonal gates commute with Z.
    const PauliProduct &z = g.semantics.z_image(0);
    return z.get(0) == Pauli::Z && !z.negative();
}

Report make_report(const Circuit &c) {
    Report r;
    r.depth = c.depth();
    for (const auto &layer : c.layers) {
        for (const auto &inst : layer) {
            r.counts[inst.gate->name]++;
            r.total++;
            if (inst.gate->arity == 2) {
                r.two_qubit++;
            } else if (is_z_type(*inst.gate)) {
                r.z_type++;
            } else {
                r.x_type++;
            }
        }
    }
    return r;
}

std::optional<double> Comparison::ratio(const std::string &category) const {
    for (const auto &[name, value] : ratios) {
        if (name == category) {
            return value;
        }
    }
    return std::nullopt;
}

Comparison compare(const Report &a, const Report &b) {
    Comparison c;
    auto add = [&](const std::string &name, size_t num, size_t den) {
        if (den == 0) {
            c.ratios.emplace_back(name, std::nullopt);
            c.undefined.push_back(name);
        } else {
            c.ratios.emplace_back(name, static_cast<double>(num) / static_cast<double>(den));
        }
    };
    add("x_type", a.x_type, b.x_type);
    add("z_type", a.z_type, b.z_type);
    add("single_qubit", a.single_qubit(), b.single_qubit());
    add("two_qubit", a.two_qubit, b.two_qubit);
    add("depth", a.depth, b.depth);
    add("total", a.total, b.total);
    return c;
}

std::string report_json(const Report &r) {
    nlohmann::ordered_json j;
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto &[name, count] : r.counts) {
        j["counts"][name] = count;
    }
    j["x_type"] = r.x_type;
    j["z_type"] = r.z_type;
    j["two_qubit"] = r.two_qubit;
    j["depth"] = r.depth;
    j["total"] = r.total;
    return j.dump(2) + "\n";
}

std::string report_csv(const Report &r) {
    std::ostringstream out;
    out << "gate,count,category\n";
    for (const auto &[name, count] : r.counts) {
        const GateDef *g = find_builtin(name);
        std::string category = g == nullptr         ? "unknown"
                               : g->arity == 2      ? "two_qubit"
                               : is_z_type(*g)      ? "z_type"
                                                    : "x_type";
        out << name << ',' << count << ',' << category << '\n';
    }
    return out.str();
}

std::string comparison_json(const Comparison &c) {
    nlohmann::ordered_json j;
    j["ratios"] = nlohmann::ordered_json::object();
    for (const auto &[name, value] : c.ratios) {
        if (value.has_value()) {
            j["ratios"][name] = *value;
        } else {
            j["ratios"][name] = nullptr;
        }
    }
    j["undefined"] = c.undefined;
    return j.dump(2) + "\n";
}

}  // namespace tmc
