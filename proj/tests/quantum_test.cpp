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

#include <gtest/gtest.h>

#include <set>

#include "counterlab/classical.hpp"
#include "counterlab/problems.hpp"
#include "counterlab/quantum.hpp"
#include "counterlab/zoo.hpp"

namespace counterlab {
namespace {

const Amplitude kInvSqrt2(QSqrt2(0, make_rational(1, 2)));

CounterMachine identity_machine() {
    MachineBuilder b("id", MachineClass::q1ca, "a");
    for (const char *name : {"p", "q"}) {
        StateIndex s = b.add_state(name);
        for (SymbolIndex sym = 0; sym < b.alphabet().extended_size(); sym++) {
            b.add(s, sym, std::nullopt, s, 0);
        }
    }
    b.set_initial(0);
    b.set_accepting(0);
    return b.build();
}

// p splits into (p + q)/sqrt2 and q into (p - q)/sqrt2 on 'a'.
CounterMachine hadamard_machine() {
    MachineBuilder b("h", MachineClass::q1ca, "a");
    StateIndex p = b.add_state("p");
    StateIndex q = b.add_state("q");
    SymbolIndex a = b.symbol('a');
    b.add(p, a, std::nullopt, p, 0, kInvSqrt2);
    b.add(p, a, std::nullopt, q, 0, kInvSqrt2);
    b.add(q, a, std::nullopt, p, 0, kInvSqrt2);
    b.add(q, a, std::nullopt, q, 0, Amplitude(0) - kInvSqrt2);
    for (StateIndex s : {p, q}) {
        b.add(s, b.left_end(), std::nullopt, s, 0);
        b.add(s, b.right_end(), std::nullopt, s, 0);
    }
    b.set_initial(p);
    b.set_accepting(p);
    return b.build();
}

TEST(Evolve, IdentityKeepsState) {
    CounterMachine m = identity_machine();
    StateVector psi = StateVector::from_unsorted({{{0, 3}, kInvSqrt2}, {{1, -2}, kInvSqrt2}});
    EXPECT_EQ(evolve(m, psi, 1), psi);
    EXPECT_TRUE(check_unitarity(m).empty());
}

TEST(Evolve, HadamardSplitAndInterference) {
    CounterMachine m = hadamard_machine();
    StateVector once = evolve(m, initial_state(m), 1);
    ASSERT_EQ(once.size(), 2u);
    for (const auto &[c, a] : once.entries()) {
        EXPECT_EQ(a.real().sqrt2_part(), make_rational(1, 2));
        EXPECT_TRUE(a.real().rational_part() == 0);
    }
    StateVector twice = evolve(m, once, 1);
    ASSERT_EQ(twice.size(), 1u);  // the q amplitudes cancel
    EXPECT_EQ(twice.amplitude({0, 0}), Amplitude(1));
    EXPECT_TRUE(check_unitarity(m).empty());
    EXPECT_EQ(run_quantum(m, "a").accept, make_rational(1, 2));
    EXPECT_EQ(run_quantum(m, "aa").accept, 1);
    EXPECT_THROW(evolve(m, once, 9), InputError);
}

TEST(Measure, BasisAndBornRule) {
    CounterMachine m = hadamard_machine();
    EXPECT_EQ(measure(m, StateVector::basis({0, 0})), (Verdict{1, 0, 0}));
    StateVector psi = StateVector::from_unsorted({{{0, 0}, kInvSqrt2}, {{1, 0}, kInvSqrt2}});
    EXPECT_EQ(measure(m, psi), (Verdict{make_rational(1, 2), make_rational(1, 2), 0}));
    StateVector bad = StateVector::basis({0, 0});
    bad = StateVector::from_unsorted({{{0, 0}, Amplitude(QSqrt2(make_rational(1, 2), make_rational(1, 2)))}});
    EXPECT_THROW(measure(m, bad), MeasurementError);
}

TEST(Unitarity, DetectsStatusCollision) {
    // (p, 0) stays put under Z while (p, -1) moves up under NZ: both land on (p, 0).
    MachineBuilder b("c", MachineClass::q1ca, "a");
    StateIndex p = b.add_state("p");
    b.add(p, b.symbol('a'), CounterStatus::zero, p, 0);
    b.add(p, b.symbol('a'), CounterStatus::nonzero, p, 1);
    b.add(p, b.left_end(), std::nullopt, p, 0);
    b.add(p, b.right_end(), std::nullopt, p, 0);
    b.set_initial(p);
    UnitarityReport report = check_unitarity(b.build(), 1);
    EXPECT_FALSE(report.isometry_violations.empty());
    EXPECT_TRUE(check_unitarity(b.build(), 0).empty());
}

TEST(Unitarity, MissingColumnIsReported) {
    MachineBuilder b("z", MachineClass::q1ca, "a");
    StateIndex p = b.add_state("p");
    b.add(p, b.symbol('a'), std::nullopt, p, 0);
    b.set_initial(p);
    EXPECT_FALSE(check_unitarity(b.build(), 0).empty());
}

std::string xoreq(int a, int b, int c, int d, int k1, int k2, int l1, int l2) {
    return xoreq_string({a, b, c, d, k1, k2, l1, l2});
}

TEST(XorEqMachine, RunExamples) {
    CounterMachine m = build_xoreq_q1ca();
    EXPECT_EQ(run_quantum(m, xoreq(2, 2, 2, 4, 2, 0, 0, 0)).accept, 1);
    EXPECT_EQ(run_quantum(m, xoreq(2, 2, 2, 2, 0, 0, 0, 0)).accept, 0);
    // a != c, b = d: the promise needs a - c + K = -L.
    EXPECT_EQ(run_quantum(m, xoreq(2, 2, 4, 2, 2, 0, 0, 0)).accept, 1);
    // Neither comparison holds: a - c + K = b - d + L with K = L = 0.
    EXPECT_EQ(run_quantum(m, xoreq(2, 4, 4, 6, 0, 0, 0, 0)).accept, 0);
}

TEST(XorEqMachine, UnitaryExceptAtRightEndmarker) {
    CounterMachine m = build_xoreq_q1ca();
    for (SymbolIndex s = 0; s < m.alphabet().right_end(); s++) {
        EXPECT_TRUE(check_unitarity(m, s).empty()) << m.alphabet().name(s);
    }
}

TEST(XorEqMachine, PerturbedAmplitudeIsFlagged) {
    MachineBuilder b(build_xoreq_q1ca());
    auto &row = b.row(b.state("start"), b.left_end(), CounterStatus::zero);
    row.front().weight = Amplitude(make_rational(1, 3));
    EXPECT_FALSE(check_unitarity(b.build(), Alphabet::left_end).isometry_violations.empty());
}

TEST(XorEqMachine, NormAndSharedCounterOnPromisedInputs) {
    CounterMachine m = build_xoreq_q1ca();
    for (const LabeledInstance &instance : generate_xoreq_tuples(4, 2)) {
        auto tape = encode_tape(m.alphabet(), instance.input);
        StateVector psi = initial_state(m);
        for (std::size_t i = 0; i < tape.size(); i++) {
            psi = evolve(m, psi, tape[i]);
            ASSERT_EQ(psi.squared_norm(), QSqrt2(1)) << instance.input;
            if (i + 2 == tape.size()) {
                std::set<Integer> counters;
                for (const auto &[c, a] : psi.entries()) {
                    counters.insert(c.counter);
                }
                EXPECT_EQ(counters.size(), 1u) << instance.input;
            }
        }
    }
}

TEST(ReversibleSubroutines, QuantumMatchesClassical) {
    for (const CounterMachine &m : {build_m1(), build_m2()}) {
        CounterMachine q = with_class(m, MachineClass::q1ca);
        EXPECT_TRUE(check_unitarity(q).empty()) << m.name();
        for (const LabeledInstance &instance : generate(m.name() == "m1" ? "eq-ac" : "eq-bd", 20)) {
            Verdict classical = run(m, instance.input);
            Verdict quantum = run_quantum(q, instance.input);
            EXPECT_EQ(classical, quantum) << instance.input;
            EXPECT_TRUE(quantum.accept == 0 || quantum.accept == 1);
        }
    }
}

TEST(RunQuantumBatch, MatchesSingleRuns) {
    CounterMachine m = build_xoreq_q1ca();
    std::vector<std::string> inputs;
    for (const LabeledInstance &instance : generate("xor-eq", 20)) {
        inputs.push_back(instance.input);
    }
    auto verdicts = run_quantum_batch(m, inputs);
    for (std::size_t i = 0; i < inputs.size(); i++) {
        EXPECT_EQ(verdicts[i], run_quantum(m, inputs[i]));
    }
}

}  // namespace
}  // namespace counterlab
