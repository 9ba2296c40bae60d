// Copyright 2026 The Counterlab Authors
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

#include "counterlab/validation.hpp"

namespace counterlab {

std::vector<Violation> unitarity_violations(const UnitarityReport &report) {
    std::vector<Violation> out;
    for (const UnitarityViolation &v : report.isometry_violations) {
        out.push_back({"U_" + v.symbol + " columns " + v.first + " " + v.second,
                       "isometry violation, inner product " + to_string(v.inner_product)});
    }
    for (const UnitarityViolation &v : report.coisometry_violations) {
        out.push_back({"U_" + v.symbol + " rows " + v.first + " " + v.second,
                       "co-isometry violation, inner product " + to_string(v.inner_product)});
    }
    return out;
}

std::vector<Violation> validate(const CounterMachine &m) {
    std::vector<Violation> out = validate_machine(m);
    if (is_quantum(m.machine_class()) && out.empty()) {
        auto unitarity = unitarity_violations(check_unitarity(m));
        out.insert(out.end(), unitarity.begin(), unitarity.end());
    }
    return out;
}

}  // namespace counterlab
