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

#include "counterlab/engine.hpp"

#include "counterlab/classical.hpp"
#include "counterlab/quantum.hpp"

namespace counterlab {

Verdict evaluate(const CounterMachine &m, std::string_view w) {
    return is_quantum(m.machine_class()) ? run_quantum(m, w) : run(m, w);
}

std::vector<Verdict> evaluate_batch(const CounterMachine &m, std::span<const std::string> inputs) {
    return is_quantum(m.machine_class()) ? run_quantum_batch(m, inputs) : run_batch(m, inputs);
}

}  // namespace counterlab
