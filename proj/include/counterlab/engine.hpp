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

#ifndef COUNTERLAB_ENGINE_HPP
#define COUNTERLAB_ENGINE_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/machine.hpp"

namespace counterlab {

/// Exact verdict through the engine matching the machine's class.
Verdict evaluate(const CounterMachine &m, std::string_view w);
std::vector<Verdict> evaluate_batch(const CounterMachine &m, std::span<const std::string> inputs);

}  // namespace counterlab

#endif
