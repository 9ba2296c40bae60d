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

#ifndef COUNTERLAB_ADVERSARY_HPP
#define COUNTERLAB_ADVERSARY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/machine.hpp"
#include "counterlab/problems.hpp"

namespace counterlab {

/// A search or analysis could not complete (hypothesis violated, budget or ceiling exceeded).
class AdversaryError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Cycle reached when reading sigma repeatedly with a counter that never hits zero.
struct CycleProfile {
    std::size_t entry = 0;   // steps before the cycle starts
    std::size_t period = 0;  // cycle length
    Integer difference;      // counter change over one period
    std::vector<StateIndex> cycle_states;
};

/// Simulates the deterministic machine from `start` on sigma^2|Q| (the implicit sink counts as
/// a state). Throws AdversaryError "counter reached zero" when one of those configurations has a
/// zero counter, and for nondeterministic classes.
CycleProfile analyze_cycle(const CounterMachine &m, const Configuration &start, SymbolIndex sigma);

struct SigmaClass {
    std::vector<StateIndex> states;  // sorted
    std::vector<StateIndex> cycle;   // in traversal order from the smallest state
    std::size_t period = 0;
    long difference = 0;
};

/// Groups states (and the sink) by the cycle they reach reading sigma under a nonzero counter.
/// Classes are ordered by their smallest cycle state.
std::vector<SigmaClass> sigma_partition(const CounterMachine &m, SymbolIndex sigma);

/// Two XOR-EQ strings with opposite labels that a deterministic machine cannot tell apart.
struct FoolingPair {
    std::string first_prefix;   // 0^a#0^b#
    std::string second_prefix;  // 0^a'#0^b'#
    bool same_first_block = false;
    XorEqTuple first_tuple;
    XorEqTuple second_tuple;
    std::string first;
    std::string second;
    Label first_label = Label::outside_promise;
    Label second_label = Label::outside_promise;
    Verdict first_verdict;
    Verdict second_verdict;
};

inline constexpr int kFoolStartBound = 8;
inline constexpr int kFoolCeiling = 512;

/// Finds two prefixes 0^a#0^b# (even a,b >= 2, below the bound) reaching the same
/// configuration, completes them into a yes and a no instance and checks both against the
/// oracle and the classical engine. The bound doubles from `n` up to `ceiling`.
FoolingPair fool_xoreq_d1ca(const CounterMachine &m, int n = kFoolStartBound, int ceiling = kFoolCeiling);

enum class RefutationKind { accepts_member, pumped_pair };

std::string_view to_string(RefutationKind kind);

/// One computation path: the initial configuration, then the one after each tape symbol.
using ComputationPath = std::vector<Configuration>;

struct PumpRecord {
    RefutationKind kind = RefutationKind::accepts_member;
    std::string witness;     // the member of EQ* that was analysed
    Verdict witness_verdict;
    ComputationPath rejecting_path;  // on the witness, pumped_pair only
    std::size_t t = 0;               // the path repeats a state after a^t and a^t2
    std::size_t t2 = 0;
    Integer segment_difference;
    std::string pumped_once;   // a^(n1+(t2-t)) ...
    std::string pumped_twice;  // a^(n1+2(t2-t)) ...
    std::string refuted_input; // the pumped string rejected by the reported path
    ComputationPath refuting_path;
};

inline constexpr std::size_t kPumpNodeBudget = 1000000;

/// Refutes a universal blind machine as a recognizer of complement(EQ*) using witness w, a
/// member of EQ* whose first a-block is longer than |Q|. Throws std::invalid_argument for a
/// bad witness or class and AdversaryError when the path search exceeds the budget.
PumpRecord pump_u1bca(const CounterMachine &m, std::string_view w, std::size_t node_budget = kPumpNodeBudget);

/// a^(|Q|+1) b^(|Q|+1).
std::string default_pump_witness(const CounterMachine &m);

struct Misclassification {
    std::size_t index = 0;  // position in the scanned instance list
    LabeledInstance instance;
    Verdict verdict;
};

/// Rule used when none is supplied: las-vegas, nondeterministic or universal by class, exact for
/// deterministic and quantum machines, threshold 1/2 otherwise.
DecisionRule default_decision_rule(MachineClass cls);

/// First instance, in the given order, whose decision contradicts its label.
std::optional<Misclassification> brute_refute(const CounterMachine &m, const std::vector<LabeledInstance> &instances,
                                              const DecisionRule &rule);
std::optional<Misclassification> brute_refute(const CounterMachine &m, std::string_view problem, std::size_t n,
                                              const DecisionRule &rule);

}  // namespace counterlab

#endif
