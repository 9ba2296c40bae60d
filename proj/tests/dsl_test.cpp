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

#include <algorithm>
#include <sstream>

#include "counterlab/dsl.hpp"
#include "counterlab/zoo.hpp"

namespace counterlab {
namespace {

const char *kMinimal = R"(machine loop
class d1ca
alphabet a
states q
initial q
accept q
trans q , a , * -> q , 0
)";

bool has_error(const ParseResult &r, std::string_view needle) {
    return std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [&](const ParseDiagnostic &d) {
        return d.severity == Severity::error && d.message.find(needle) != std::string::npos;
    });
}

std::size_t line_count(std::string_view text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

void expect_spans_inside(const std::string &text, const ParseResult &r) {
    ASSERT_FALSE(r.diagnostics.empty());
    for (const ParseDiagnostic &d : r.diagnostics) {
        EXPECT_GE(d.span.line, 1u);
        EXPECT_GE(d.span.column, 1u);
        EXPECT_LE(d.span.line, line_count(text));
    }
}

TEST(Parse, MinimalDeterministicMachine) {
    ParseResult r = parse(kMinimal);
    ASSERT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : to_string(r.diagnostics.front()));
    EXPECT_EQ(r.machine->num_states(), 1u);
    EXPECT_EQ(r.machine->max_step(), 1);
    EXPECT_EQ(r.machine->row(0, 1, CounterStatus::zero).size(), 1u);
    EXPECT_EQ(r.machine->row(0, 1, CounterStatus::nonzero).size(), 1u);
}

TEST(Parse, WeightOutOfRange) {
    std::string text = R"(machine w
class p1ca
alphabet a
states q r
initial q
trans q , a , * -> q , 0 @ 3/2
trans q , a , * -> r , 0 @ -1/2
)";
    ParseResult r = parse(text);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_error(r, "weight 3/2 outside [0,1]"));
    expect_spans_inside(text, r);
}

TEST(Parse, BlindCannotBranchOnStatus) {
    std::string text = R"(machine b
class p1bca
alphabet a
states q
initial q
trans q , a , Z -> q , 1
)";
    ParseResult r = parse(text);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_error(r, "blind machine cannot branch on status"));
    expect_spans_inside(text, r);
}

TEST(Parse, ReportsEachErrorKind) {
    auto with = [](const std::string &line) {
        return std::string("machine e\nclass d1ca\nalphabet a b\nstates q\ninitial q\n") + line + "\n";
    };
    EXPECT_TRUE(has_error(parse(with("bogus x")), "unknown directive"));
    EXPECT_TRUE(has_error(parse(with("trans p , a , * -> q , 0")), "undeclared state"));
    EXPECT_TRUE(has_error(parse(with("trans q , c , * -> q , 0")), "undeclared symbol"));
    EXPECT_TRUE(has_error(parse(with("trans q , a , * -> q , 0\ntrans q , a , * -> q , 0")), "duplicate"));
    EXPECT_TRUE(has_error(parse(with("trans q , a , * -> q , 0 @ (1/2")), "malformed amplitude"));
    EXPECT_TRUE(has_error(parse(with("trans q , a , * -> q , 0 \x01")), "lexical error"));
    EXPECT_TRUE(has_error(parse("machine e\nclass d1ca\n"), "missing"));
}

TEST(Parse, CommentsAndHashSymbol) {
    std::string text = R"(# a comment line
machine h
class d1ca
alphabet 0 #
states q
   # indented comment
initial q
trans q , # , * -> q , 1
)";
    ParseResult r = parse(text);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.machine->alphabet().symbols(), "0#");
}

TEST(Parse, Deterministic) {
    std::string text = emit(build_onenone_lv());
    ParseResult a = parse(text);
    ParseResult b = parse(text);
    ASSERT_TRUE(a.ok());
    EXPECT_TRUE(*a.machine == *b.machine);
}

TEST(Amplitudes, Grammar) {
    EXPECT_EQ(*parse_amplitude("-1/2 r2"), Amplitude(QSqrt2(0, make_rational(-1, 2))));
    EXPECT_EQ(*parse_amplitude("(1/2 - 1/2 r2) + (1/3) i"),
              Amplitude(QSqrt2(make_rational(1, 2), make_rational(-1, 2)), QSqrt2(make_rational(1, 3))));
    EXPECT_EQ(*parse_amplitude("1"), Amplitude(1));
    EXPECT_FALSE(parse_amplitude("1/0"));
    EXPECT_FALSE(parse_amplitude("r3"));
    EXPECT_FALSE(parse_amplitude(""));
}

TEST(Emit, AmplitudeToken) {
    MachineBuilder b("h", MachineClass::q1ca, "a");
    StateIndex p = b.add_state("p");
    StateIndex q = b.add_state("q");
    Amplitude h(QSqrt2(0, make_rational(1, 2)));
    Amplitude minus_h(QSqrt2(0, make_rational(-1, 2)));
    b.add(p, b.symbol('a'), std::nullopt, p, 0, h);
    b.add(p, b.symbol('a'), std::nullopt, q, 0, h);
    b.add(q, b.symbol('a'), std::nullopt, p, 0, h);
    b.add(q, b.symbol('a'), std::nullopt, q, 0, minus_h);
    b.set_initial(p);
    std::string text = emit(b.build());
    EXPECT_NE(text.find("@ -1/2 r2"), std::string::npos) << text;
    ParseResult r = parse(text);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(*r.machine == b.build());
}

TEST(Emit, NeutralDirective) {
    std::string text = emit(build_onenone_lv());
    EXPECT_NE(text.find("\nneutral dontknow\n"), std::string::npos);
}

TEST(Emit, RoundTripsEveryZooMachine) {
    std::vector<std::string> names{"m1", "m2", "xoreq-q1ca", "onenone-lv", "eq-star-complement-d1ca"};
    for (int t = 1; t <= 3; t++) {
        names.push_back("onenone-lv-t" + std::to_string(t));
    }
    for (int k = kZooMinK; k <= kZooMaxK; k++) {
        names.push_back("eq-star-p1bca-k" + std::to_string(k));
        names.push_back("eq3-p1bca-k" + std::to_string(k));
        names.push_back("lang-L-p1ca-k" + std::to_string(k));
    }
    for (const std::string &name : names) {
        SCOPED_TRACE(name);
        auto entry = find_zoo(name);
        ASSERT_TRUE(entry);
        ParseResult r = parse(emit(entry->machine));
        ASSERT_TRUE(r.ok()) << to_string(r.diagnostics.front());
        EXPECT_TRUE(*r.machine == entry->machine);
        EXPECT_EQ(emit(*r.machine), emit(entry->machine));
    }
}

}  // namespace
}  // namespace counterlab
