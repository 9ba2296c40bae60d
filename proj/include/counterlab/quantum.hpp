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

#ifndef COUNTERLAB_QUANTUM_HPP
#define COUNTERLAB_QUANTUM_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "counterlab/machine.hpp"

namespace counterlab {

/// Superposition over configurations. Entries are sorted by configuration and nonzero.
class StateVector {
   public:
    using Entry = std::pair<Configuration, Amplitude>;

    StateVector() = default;
    static StateVector basis(Configuration c);
    /// Merges duplicate configurations and prunes exact zeros.
    static StateVector from_unsorted(std::vector<Entry> entries);

    const std::vector<Entry> &entries() const {
        return entries_;
    }
    std::size_t size() const {
        return entries_.size();
    }
    /// Amplitude of `c`, 0 when absent.
    Amplitude amplitude(const Configuration &c) const;
    QSqrt2 squared_norm() const;

    friend bool operator==(const StateVector &x, const StateVector &y) {
        return x.entries_ == y.entries_;
    }

   private:
    std::vector<Entry> entries_;
};

/// A final probability had a nonzero sqrt(2) component.
class MeasurementError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

StateVector initial_state(const CounterMachine &m);

/// Applies U_symbol. Throws InputError for an index outside the extended alphabet and
/// EngineError for classical machines.
StateVector evolve(const CounterMachine &m, const StateVector &psi, SymbolIndex symbol);

/// Projective measurement onto accepting / rejecting states.
Verdict measure(const CounterMachine &m, const StateVector &psi);

Verdict run_quantum(const CounterMachine &m, std::string_view w);

/// Runs many inputs, sharing common prefixes. Results follow input order.
std::vector<Verdict> run_quantum_batch(const CounterMachine &m, std::span<const std::string> inputs);

struct UnitarityViolation {
    std::string symbol;
    std::string first;   // "(state, counter)" of a column, or of a row target
    std::string second;
    Amplitude inner_product;
};

struct UnitarityReport {
    std::vector<UnitarityViolation> isometry_violations;
    std::vector<UnitarityViolation> coisometry_violations;

    bool empty() const {
        return isometry_violations.empty() && coisometry_violations.empty();
    }
};

/// Checks that U_symbol is unitary on configuration space, using a finite counter window that
/// covers every combination of counter status and relative offset.
UnitarityReport check_unitarity(const CounterMachine &m, SymbolIndex symbol);
/// The union of the per-symbol reports over every symbol including endmarkers.
UnitarityReport check_unitarity(const CounterMachine &m);

}  // namespace counterlab

#endif
