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

#ifndef COUNTERLAB_CLASSICAL_HPP
#define COUNTERLAB_CLASSICAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "counterlab/machine.hpp"

namespace counterlab {

/// Exact probability distribution over configurations. Entries are sorted by configuration and
/// carry strictly positive weights.
class ConfigDistribution {
   public:
    using Entry = std::pair<Configuration, Rational>;

    ConfigDistribution() = default;
    static ConfigDistribution point(Configuration c);
    /// Merges duplicate configurations and drops zero weights.
    static ConfigDistribution from_unsorted(std::vector<Entry> entries);

    const std::vector<Entry> &entries() const {
        return entries_;
    }
    std::size_t size() const {
        return entries_.size();
    }
    Rational total() const;
    /// Weight of `c`, 0 when absent.
    Rational weight(const Configuration &c) const;

    friend bool operator==(const ConfigDistribution &x, const ConfigDistribution &y) {
        return x.entries_ == y.entries_;
    }

   private:
    std::vector<Entry> entries_;
};

/// Which final-configuration rule decides acceptance.
enum class AcceptanceRule {
    class_default,  // blind rule for blind classes, state-only rule otherwise
    state_only,     // accept iff the final state is accepting
    zero_counter,   // accept iff the final state is accepting and the counter is 0
};

ConfigDistribution initial_distribution(const CounterMachine &m);

/// One step on `symbol` (an extended-alphabet index). Throws InputError for an index outside the
/// extended alphabet and EngineError for quantum machines.
ConfigDistribution step(const CounterMachine &m, const ConfigDistribution &d, SymbolIndex symbol);

/// Verdict of a distribution taken after the right endmarker.
Verdict read_verdict(const CounterMachine &m, const ConfigDistribution &d,
                     AcceptanceRule rule = AcceptanceRule::class_default);

Verdict run(const CounterMachine &m, std::string_view w, AcceptanceRule rule = AcceptanceRule::class_default);

struct RunTrace {
    std::vector<ConfigDistribution> steps;  // after each symbol, only when retained
    Verdict verdict;
    std::size_t step_count = 0;
};

RunTrace trace(const CounterMachine &m, std::string_view w, bool retain_steps = false);

/// Nondeterministic (N1BCA) or universal (U1BCA) acceptance. Throws EngineError for other classes.
bool decide_mode(const CounterMachine &m, std::string_view w);

/// One random computation path; reproducible for a fixed seed. Throws EngineError for quantum machines.
Outcome sample_run(const CounterMachine &m, std::string_view w, std::uint64_t seed);

/// Runs many inputs, sharing work between inputs with a common prefix. Results follow input order.
std::vector<Verdict> run_batch(const CounterMachine &m, std::span<const std::string> inputs,
                               AcceptanceRule rule = AcceptanceRule::class_default);

}  // namespace counterlab

#endif
