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


#ifndef COUNTERLAB_VALIDATION_HPP
#define COUNTERLAB_VALIDATION_HPP

#include <vector>

#include "counterlab/machine.hpp"
#include "counterlab/quantum.hpp"

namespace counterlab {

/// Violations reported by a unitarity check, one per offending column or row pair.
std::vector<Violation> unitarity_violations(const UnitarityReport &report);

/// validate_machine plus, for quantum machines, the unitarity check.
std::vector<Violation> validate(const CounterMachine &m);

}  // namespace counterlab

#endif
