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

#ifndef COUNTERLAB_MACHINE_HPP
#define COUNTERLAB_MACHINE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/core.hpp"

namespace counterlab {

struct Transition {
    StateIndex target = 0;
    int delta = 0;
    Amplitude weight = 1;

    friend bool operator==(const Transition &x, const Transition &y) {
        return x.target == y.target && x.delta == y.delta && x.weight == y.weight;
    }
};

/// A one-counter machine of any supported class.
///
/// The transition table is dense over (state, symbol, status). An empty row means the key is
/// absent; classical engines send absent keys to the implicit sink state `sink()`, which is not
/// part of Q and loops on itself with delta 0.
class CounterMachine {
   public:
    const std::string &name() const {
        return name_;
    }
    MachineClass machine_class() const {
        return class_;
    }
    const Alphabet &alphabet() const {
        return alphabet_;
    }
    std::size_t num_states() const {
        return state_names_.size();
    }
    const std::string &state_name(StateIndex q) const;
    std::optional<StateIndex> find_state(std::string_view name) const;
    StateIndex initial() const {
        return initial_;
    }
    bool is_accepting(StateIndex q) const {
        return q < accepting_.size() && accepting_[q];
    }
    bool is_neutral(StateIndex q) const {
        return q < neutral_.size() && neutral_[q];
    }
    std::vector<StateIndex> accepting_states() const;
    std::vector<StateIndex> neutral_states() const;
    int max_step() const {
        return max_step_;
    }
    StateIndex sink() const {
        return static_cast<StateIndex>(state_names_.size());
    }

    /// Entries stored for the key; empty when the key is absent. `q` must be a real state.
    std::span<const Transition> row(StateIndex q, SymbolIndex symbol, CounterStatus status) const {
        return rows_[row_index(q, symbol, status)];
    }

    friend bool operator==(const CounterMachine &x, const CounterMachine &y);

   private:
    friend class MachineBuilder;

    std::size_t row_index(StateIndex q, SymbolIndex symbol, CounterStatus status) const {
        return (static_cast<std::size_t>(q) * alphabet_.extended_size() + symbol) * 2 +
               static_cast<std::size_t>(status);
    }

    std::string name_;
    MachineClass class_ = MachineClass::d1ca;
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    StateIndex initial_ = 0;
    std::vector<bool> accepting_;
    std::vector<bool> neutral_;
    int max_step_ = 1;
    std::vector<std::vector<Transition>> rows_;
};

/// Incremental construction of a CounterMachine. build() does not validate.
class MachineBuilder {
   public:
    MachineBuilder(std::string name, MachineClass cls, std::string alphabet, int max_step = 1);
    explicit MachineBuilder(const CounterMachine &machine);

    /// Throws std::invalid_argument on an empty or duplicate name.
    StateIndex add_state(std::string name);
    /// Throws std::invalid_argument on an unknown name.
    StateIndex state(std::string_view name) const;
    std::optional<StateIndex> find_state(std::string_view name) const {
        return machine_.find_state(name);
    }
    std::size_t num_states() const {
        return machine_.state_names_.size();
    }

    /// Index of an input character; throws std::invalid_argument if absent.
    SymbolIndex symbol(char c) const;
    SymbolIndex left_end() const {
        return Alphabet::left_end;
    }
    SymbolIndex right_end() const {
        return machine_.alphabet_.right_end();
    }
    const Alphabet &alphabet() const {
        return machine_.alphabet_;
    }

    MachineBuilder &set_name(std::string name);
    MachineBuilder &set_class(MachineClass cls);
    MachineBuilder &set_max_step(int m);
    MachineBuilder &set_initial(StateIndex q);
    MachineBuilder &set_accepting(StateIndex q, bool value = true);
    MachineBuilder &set_neutral(StateIndex q, bool value = true);

    /// Appends one entry; `status` nullopt means both Z and NZ.
    MachineBuilder &add(StateIndex from, SymbolIndex symbol, std::optional<CounterStatus> status, StateIndex to,
                        int delta, const Amplitude &weight = 1);
    /// Removes every entry of the key(s).
    MachineBuilder &clear(StateIndex from, SymbolIndex symbol, std::optional<CounterStatus> status);
    /// Mutable access to a stored row.
    std::vector<Transition> &row(StateIndex from, SymbolIndex symbol, CounterStatus status);

    CounterMachine build() const {
        return machine_;
    }

   private:
    void grow_rows();

    CounterMachine machine_;
};

/// Copy of `m` relabelled with another class tag (weights unchanged).
CounterMachine with_class(const CounterMachine &m, MachineClass cls);
/// Copy of `m` with another initial state.
CounterMachine with_initial(const CounterMachine &m, StateIndex q);

struct Violation {
    std::string locus;
    std::string message;

    friend bool operator==(const Violation &, const Violation &) = default;
};

/// "(q, a, NZ)" style key locus.
std::string key_locus(const CounterMachine &m, StateIndex q, SymbolIndex symbol, CounterStatus status);

/// Class invariants that do not need the quantum engine. Empty when valid.
std::vector<Violation> validate_machine(const CounterMachine &m);

}  // namespace counterlab

#endif
