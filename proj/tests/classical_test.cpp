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

#include "counterlab/classical.hpp"
#include "counterlab/problems.hpp"
#include "counterlab/zoo.hpp"

namespace counterlab {
namespace {

Rational r(long p, long q = 1) {
    return make_rational(p, q);
}

void add_endmarker_loops(MachineBuilder &b, StateIndex q) {
    b.add(q, b.left_end(), std::nullopt, q, 0);
    b.add(q, b.right_end(), std::nullopt, q, 0);
}

CounterMachine counting_loop() {
    MachineBuilder b("loop", MachineClass::d1ca, "a");
    StateIndex q = b.add_state("q0");
    b.add(q, b.symbol('a'), std::nullopt, q, 1);
    add_endmarker_loops(b, q);
    b.set_initial(q);
    b.set_accepting(q);
    return b.build();
}

TEST(Step, DeterministicSelfLoop) {
    CounterMachine m = counting_loop();
    ConfigDistribution d = step(m, initial_distribution(m), m.alphabet().index_of('a').value());
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.weight({0, 1}), 1);
}

TEST(Step, ThreeWaySplit) {
    MachineBuilder b("split", MachineClass::p1ca, "a");
    StateIndex s = b.add_state("s");
    for (const char *name : {"x", "y", "z"}) {
        b.add(s, b.symbol('a'), std::nullopt, b.add_state(name), 0, Amplitude(r(1, 3)));
    }
    b.set_initial(s);
    CounterMachine m = b.build();
    ConfigDistribution d = step(m, initial_distribution(m), 1);
    ASSERT_EQ(d.size(), 3u);
    for (const auto &[c, w] : d.entries()) {
        EXPECT_EQ(w, r(1, 3));
    }
    EXPECT_EQ(d.total(), 1);
}

TEST(Step, MergingPaths) {
    MachineBuilder b("merge", MachineClass::p1ca, "a");
    StateIndex s = b.add_state("s");
    StateIndex x = b.add_state("x");
    StateIndex y = b.add_state("y");
    StateIndex t = b.add_state("t");
    b.add(s, b.symbol('a'), std::nullopt, x, 1, Amplitude(r(1, 2)));
    b.add(s, b.symbol('a'), std::nullopt, y, 1, Amplitude(r(1, 2)));
    b.add(x, b.symbol('a'), std::nullopt, t, 0, Amplitude(r(1, 2)));
    b.add(x, b.symbol('a'), std::nullopt, x, 0, Amplitude(r(1, 2)));
    b.add(y, b.symbol('a'), std::nullopt, t, 0, Amplitude(r(1, 2)));
    b.add(y, b.symbol('a'), std::nullopt, y, 0, Amplitude(r(1, 2)));
    b.set_initial(s);
    CounterMachine m = b.build();
    ConfigDistribution d = step(m, step(m, initial_distribution(m), 1), 1);
    EXPECT_EQ(d.weight({t, 1}), r(1, 2));
    EXPECT_EQ(d.size(), 3u);
}

TEST(Step, RejectsBadSymbolAndQuantumMachines) {
    CounterMachine m = counting_loop();
    EXPECT_THROW(step(m, initial_distribution(m), 7), InputError);
    EXPECT_THROW(run(build_xoreq_q1ca(), "0"), EngineError);
    EXPECT_THROW(run(m, "b"), InputError);
}

TEST(Run, EqStarExamples) {
    CounterMachine m = build_eqstar_p1bca(3);
    EXPECT_EQ(run(m, "aabb").accept, 1);
    EXPECT_EQ(run(m, "abbaab").accept, r(1, 3));
    EXPECT_EQ(run(m, "abba").accept, 0);
    EXPECT_EQ(run(m, "").accept, 1);
    EXPECT_EQ(run(build_eqstar_p1bca(5), "abbaab").accept, r(1, 5));
}

TEST(Run, OneNoneLasVegas) {
    Verdict v = run(build_onenone_lv(), "aabcddddabbccccdddddddd");
    EXPECT_EQ(v, (Verdict{r(1, 3), 0, r(2, 3)}));
    // Swapping the two u-blocks turns it into a no-instance.
    Verdict no = run(build_onenone_lv(), "abbccccdddddddaabcdddd");
    EXPECT_EQ(no, (Verdict{0, r(1, 3), r(2, 3)}));
}

TEST(Run, BlindLasVegasRoutesNonzeroNeutralToReject) {
    MachineBuilder b("lvb", MachineClass::lv_p1bca, "a");
    StateIndex s = b.add_state("s");
    StateIndex n = b.add_state("n");
    b.add(s, b.symbol('a'), std::nullopt, n, 1);
    b.add(n, b.symbol('a'), std::nullopt, n, -1);
    add_endmarker_loops(b, s);
    add_endmarker_loops(b, n);
    b.set_initial(s);
    b.set_neutral(n);
    CounterMachine m = b.build();
    EXPECT_EQ(run(m, "a"), (Verdict{0, 1, 0}));
    EXPECT_EQ(run(m, "aa"), (Verdict{0, 0, 1}));
}

TEST(Run, NonBlindIgnoresFinalCounter) {
    EXPECT_EQ(run(counting_loop(), "aaa").accept, 1);
    EXPECT_EQ(run(counting_loop(), "aaa", AcceptanceRule::zero_counter).accept, 0);
}

TEST(DecideMode, UniversalAndNondeterministic) {
    CounterMachine u = with_class(build_eqstar_p1bca(3), MachineClass::u1bca);
    EXPECT_TRUE(decide_mode(u, "aabb"));
    EXPECT_FALSE(decide_mode(u, "abb"));
    CounterMachine n = with_class(build_eqstar_p1bca(3), MachineClass::n1bca);
    EXPECT_TRUE(decide_mode(n, "abbaab"));

    MachineBuilder b("none", MachineClass::n1bca, "a");
    StateIndex s = b.add_state("s");
    b.add(s, b.symbol('a'), std::nullopt, s, 1);
    add_endmarker_loops(b, s);
    b.set_initial(s);
    b.set_accepting(s);
    EXPECT_FALSE(decide_mode(b.build(), "a"));
    EXPECT_THROW(decide_mode(build_eqstar_p1bca(3), "ab"), EngineError);
}

TEST(SampleRun, Reproducible) {
    CounterMachine lv = build_onenone_lv();
    const char *w = "aabcddddabbccccdddddddd";
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        EXPECT_EQ(sample_run(lv, w, seed), sample_run(lv, w, seed));
        EXPECT_NE(sample_run(lv, w, seed), Outcome::reject);
    }
    CounterMachine d = build_eqstar_complement_d1ca();
    for (const char *input : {"", "ab", "aab", "abba"}) {
        Outcome expected = run(d, input).accept == 1 ? Outcome::accept : Outcome::reject;
        EXPECT_EQ(sample_run(d, input, 99), expected);
    }
    EXPECT_THROW(sample_run(build_xoreq_q1ca(), "", 1), EngineError);
}

TEST(Trace, StepCountAndInvariants) {
    for (const ZooEntry &e : zoo_representatives()) {
        if (is_quantum(e.machine.machine_class())) {
            continue;
        }
        SCOPED_TRACE(e.name);
        auto instances = generate(e.problem, e.problem == "xor-eq" || e.problem.starts_with("eq-") ? 16 : 8);
        for (std::size_t i = 0; i < instances.size() && i < 40; i++) {
            const std::string &w = instances[i].input;
            RunTrace t = trace(e.machine, w, true);
            ASSERT_EQ(t.step_count, w.size() + 2);
            for (std::size_t k = 0; k < t.steps.size(); k++) {
                EXPECT_EQ(t.steps[k].total(), 1);
                for (const auto &[c, weight] : t.steps[k].entries()) {
                    EXPECT_LE(abs(c.counter), Integer(e.machine.max_step() * static_cast<long>(k + 1)));
                    EXPECT_GT(weight, 0);
                }
            }
            EXPECT_EQ(t.verdict.accept + t.verdict.reject + t.verdict.dontknow, 1);
            EXPECT_EQ(t.verdict, run(e.machine, w));
        }
    }
}

TEST(Run, DeterministicAsProbabilistic) {
    CounterMachine d = build_eqstar_complement_d1ca();
    CounterMachine p = with_class(d, MachineClass::p1ca);
    for (const std::string &w : all_strings("ab", 8)) {
        Rational a = run(p, w).accept;
        EXPECT_TRUE(a == 0 || a == 1);
        EXPECT_EQ(a, run(d, w).accept);
    }
}

TEST(Run, BlindVersusStateOnlyRule) {
    CounterMachine m = build_eqstar_p1bca(3);
    for (const std::string &w : all_strings("ab", 9)) {
        EXPECT_GE(run(m, w, AcceptanceRule::state_only).accept, run(m, w).accept);
    }
}

TEST(RunBatch, MatchesSingleRuns) {
    CounterMachine m = build_L_p1ca(3);
    std::vector<std::string> inputs;
    for (const std::string &w : all_strings("acde", 5)) {
        inputs.push_back(w);
    }
    std::reverse(inputs.begin(), inputs.end());
    auto verdicts = run_batch(m, inputs);
    ASSERT_EQ(verdicts.size(), inputs.size());
    for (std::size_t i = 0; i < inputs.size(); i++) {
        EXPECT_EQ(verdicts[i], run(m, inputs[i])) << inputs[i];
    }
}

}  // namespace
}  // namespace counterlab
