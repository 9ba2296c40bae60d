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

#include "counterlab/machine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace counterlab {

const std::string &CounterMachine::state_name(StateIndex q) const {
    static const std::string sink_name = "<sink>";
    if (q == sink()) {
        return sink_name;
    }
    return state_names_.at(q);
}

std::optional<StateIndex> CounterMachine::find_state(std::string_view name) const {
    for (std::size_t i = 0; i < state_names_.size(); i++) {
        if (state_names_[i] == name) {
            return static_cast<StateIndex>(i);
        }
    }
    return std::nullopt;
}

std::vector<StateIndex> CounterMachine::accepting_states() const {
    std::vector<StateIndex> result;
    for (StateIndex q = 0; q < num_states(); q++) {
        if (is_accepting(q)) {
            result.push_back(q);
        }
    }
    return result;
}

std::vector<StateIndex> CounterMachine::neutral_states() const {
    std::vector<StateIndex> result;
    for (StateIndex q = 0; q < num_states(); q++) {
        if (is_neutral(q)) {
            result.push_back(q);
        }
    }
    return result;
}

bool operator==(const CounterMachine &x, const CounterMachine &y) {
    return x.name_ == y.name_ && x.class_ == y.class_ && x.alphabet_ == y.alphabet_ &&
           x.state_names_ == y.state_names_ && x.initial_ == y.initial_ && x.accepting_ == y.accepting_ &&
           x.neutral_ == y.neutral_ && x.max_step_ == y.max_step_ && x.rows_ == y.rows_;
}

MachineBuilder::MachineBuilder(std::string name, MachineClass cls, std::string alphabet, int max_step) {
    machine_.name_ = std::move(name);
    machine_.class_ = cls;
    machine_.alphabet_ = Alphabet(std::move(alphabet));
    machine_.max_step_ = max_step;
}

MachineBuilder::MachineBuilder(const CounterMachine &machine) : machine_(machine) {
}

StateIndex MachineBuilder::add_state(std::string name) {
    if (name.empty()) {
        throw std::invalid_argument("empty state name");
    }
    if (machine_.find_state(name)) {
        throw std::invalid_argument("duplicate state '" + name + "'");
    }
    machine_.state_names_.push_back(std::move(name));
    machine_.accepting_.push_back(false);
    machine_.neutral_.push_back(false);
    grow_rows();
    return static_cast<StateIndex>(machine_.state_names_.size() - 1);
}

StateIndex MachineBuilder::state(std::string_view name) const {
    auto q = machine_.find_state(name);
    if (!q) {
        throw std::invalid_argument("unknown state '" + std::string(name) + "'");
    }
    return *q;
}

SymbolIndex MachineBuilder::symbol(char c) const {
    auto index = machine_.alphabet_.index_of(c);
    if (!index) {
        throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
    }
    return *index;
}

MachineBuilder &MachineBuilder::set_name(std::string name) {
    machine_.name_ = std::move(name);
    return *this;
}

MachineBuilder &MachineBuilder::set_class(MachineClass cls) {
    machine_.class_ = cls;
    return *this;
}

MachineBuilder &MachineBuilder::set_max_step(int m) {
    machine_.max_step_ = m;
    return *this;
}

MachineBuilder &MachineBuilder::set_initial(StateIndex q) {
    if (q >= num_states()) {
        throw std::invalid_argument("initial state out of range");
    }
    machine_.initial_ = q;
    return *this;
}

MachineBuilder &MachineBuilder::set_accepting(StateIndex q, bool value) {
    machine_.accepting_.at(q) = value;
    return *this;
}

MachineBuilder &MachineBuilder::set_neutral(StateIndex q, bool value) {
    machine_.neutral_.at(q) = value;
    return *this;
}

MachineBuilder &MachineBuilder::add(StateIndex from, SymbolIndex symbol, std::optional<CounterStatus> status,
                                    StateIndex to, int delta, const Amplitude &weight) {
    if (from >= num_states() || to >= num_states()) {
        throw std::invalid_argument("transition state out of range");
    }
    if (symbol >= machine_.alphabet_.extended_size()) {
        throw std::invalid_argument("transition symbol out of range");
    }
    for (CounterStatus s : {CounterStatus::zero, CounterStatus::nonzero}) {
        if (!status || *status == s) {
            row(from, symbol, s).push_back(Transition{to, delta, weight});
        }
    }
    return *this;
}

MachineBuilder &MachineBuilder::clear(StateIndex from, SymbolIndex symbol, std::optional<CounterStatus> status) {
    for (CounterStatus s : {CounterStatus::zero, CounterStatus::nonzero}) {
        if (!status || *status == s) {
            row(from, symbol, s).clear();
        }
    }
    return *this;
}

std::vector<Transition> &MachineBuilder::row(StateIndex from, SymbolIndex symbol, CounterStatus status) {
    return machine_.rows_.at(machine_.row_index(from, symbol, status));
}

void MachineBuilder::grow_rows() {
    machine_.rows_.resize(machine_.state_names_.size() * machine_.alphabet_.extended_size() * 2);
}

CounterMachine with_class(const CounterMachine &m, MachineClass cls) {
    MachineBuilder b(m);
    b.set_class(cls);
    return b.build();
}

CounterMachine with_initial(const CounterMachine &m, StateIndex q) {
    MachineBuilder b(m);
    b.set_initial(q);
    return b.build();
}

std::string key_locus(const CounterMachine &m, StateIndex q, SymbolIndex symbol, CounterStatus status) {
    return "(" + m.state_name(q) + ", " + m.alphabet().name(symbol) + ", " + std::string(to_string(status)) + ")";
}

std::vector<Violation> validate_machine(const CounterMachine &m) {
    std::vector<Violation> out;
    MachineClass cls = m.machine_class();
    if (m.max_step() < 1) {
        out.push_back({"machine", "maxstep " + std::to_string(m.max_step()) + " < 1"});
    }
    if (m.num_states() == 0) {
        out.push_back({"machine", "no states"});
        return out;
    }
    if (m.initial() >= m.num_states()) {
        out.push_back({"machine", "initial state out of range"});
    }
    for (StateIndex q = 0; q < m.num_states(); q++) {
        if (m.is_neutral(q) && !is_las_vegas(cls)) {
            out.push_back({m.state_name(q), "neutral state on a non Las Vegas machine"});
        }
        if (m.is_neutral(q) && m.is_accepting(q)) {
            out.push_back({m.state_name(q), "state is both accepting and neutral"});
        }
    }
    std::size_t symbols = m.alphabet().extended_size();
    for (StateIndex q = 0; q < m.num_states(); q++) {
        for (SymbolIndex s = 0; s < symbols; s++) {
            if (is_blind(cls) &&
                !std::ranges::equal(m.row(q, s, CounterStatus::zero), m.row(q, s, CounterStatus::nonzero))) {
                out.push_back(
                    {"(" + m.state_name(q) + ", " + m.alphabet().name(s) + ")", "blind machine reads counter status"});
            }
            for (CounterStatus status : {CounterStatus::zero, CounterStatus::nonzero}) {
                auto entries = m.row(q, s, status);
                if (entries.empty()) {
                    continue;
                }
                std::string locus = key_locus(m, q, s, status);
                for (std::size_t i = 0; i < entries.size(); i++) {
                    const Transition &t = entries[i];
                    if (t.target >= m.num_states()) {
                        out.push_back({locus, "target state out of range"});
                    }
                    if (std::abs(t.delta) > m.max_step()) {
                        out.push_back({locus, "delta " + std::to_string(t.delta) + " exceeds maxstep " +
                                                  std::to_string(m.max_step())});
                    }
                    for (std::size_t j = 0; j < i; j++) {
                        if (entries[j].target == t.target && entries[j].delta == t.delta) {
                            out.push_back({locus, "duplicate transition entry"});
                        }
                    }
                }
                if (is_quantum(cls)) {
                    continue;
                }
                if (is_deterministic(cls) && entries.size() > 1) {
                    out.push_back({locus, "nondeterministic key"});
                }
                Rational sum = 0;
                bool rational_weights = true;
                for (const Transition &t : entries) {
                    if (!t.weight.is_real_rational()) {
                        out.push_back({locus, "weight " + to_string(t.weight) + " is not a rational probability"});
                        rational_weights = false;
                        continue;
                    }
                    const Rational &w = t.weight.real().rational_part();
                    if (is_deterministic(cls) && w != 1) {
                        out.push_back({locus, "deterministic weight " + to_compact(w) + " is not 1"});
                    } else if (sgn(w) < 0 || w > 1) {
                        out.push_back({locus, "weight " + to_compact(w) + " outside [0,1]"});
                    }
                    sum += w;
                }
                if (rational_weights && !is_deterministic(cls) && sum != 1) {
                    out.push_back({locus, "weights sum " + to_compact(sum) + " \xE2\x89\xA0 1"});
                }
            }
        }
    }
    return out;
}

}  // namespace counterlab
