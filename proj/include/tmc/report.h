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

#ifndef _TMC_REPORT_H
#define _TMC_REPORT_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmc/circuit.h"

namespace tmc {

/// Gate tallies of a circuit. Single-qubit gates split into Z-type (diagonal:
/// I, Z, S, S_DAG) and X-type (everything else).
struct Report {
    std::map<std::string, size_t> counts;
    size_t x_type = 0;
    size_t z_type = 0;
    size_t two_qubit = 0;
    size_t depth = 0;
    size_t total = 0;

    size_t single_qubit() const { return x_type + z_type; }
    bool operator==(const Report &other) const = default;
};

bool is_z_type(const GateDef &g);

Report make_report(const Circuit &c);

/// Category-wise ratios a/b. Categories whose denominator is zero have no
/// value and are listed in `undefined`.
struct Comparison {
    std::vector<std::pair<std::string, std::optional<double>>> ratios;
    std::vector<std::string> undefined;

    std::optional<double> ratio(const std::string &category) const;
};

Comparison compare(const Report &a, const Report &b);

/// {"counts": {...}, "x_type": n, "z_type": n, "two_qubit": n, "depth": n, "total": n}
std::string report_json(const Report &r);
/// Header `gate,count,category`, one row per gate name in sorted order.
std::string report_csv(const Report &r);
/// {"ratios": {category: value-or-null, ...}, "undefined": [...]}
std::string comparison_json(const Comparison &c);

}  // namespace tmc

#endif
