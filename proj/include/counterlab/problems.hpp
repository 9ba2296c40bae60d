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

#ifndef COUNTERLAB_PROBLEMS_HPP
#define COUNTERLAB_PROBLEMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/core.hpp"

namespace counterlab {

enum class Label { yes, no, outside_promise };
std::string_view to_string(Label label);

struct LabeledInstance {
    std::string input;
    Label label = Label::outside_promise;

    friend bool operator==(const LabeledInstance &, const LabeledInstance &) = default;
};

/// Block lengths of an XOR-EQ shaped input 0^a#0^b#0^c#0^d#0^k1#0^k2#0^l1#0^l2.
struct XorEqTuple {
    int a = 2, b = 2, c = 2, d = 2;
    int k1 = 0, k2 = 0, l1 = 0, l2 = 0;

    friend bool operator==(const XorEqTuple &, const XorEqTuple &) = default;
};

std::string xoreq_string(const XorEqTuple &t);
/// Splits into the eight blocks and checks a,b,c,d even and >= 2; nullopt otherwise.
std::optional<XorEqTuple> parse_xoreq(std::string_view w);
/// a-c+(-1)^[a=c](k1-k2) = b-d+(-1)^[b=d](l1-l2).
bool xoreq_promise_holds(const XorEqTuple &t);

Label classify_xoreq(std::string_view w);
/// XOR-EQ shaped inputs (promise not required) labelled by a = c.
Label classify_eq_ac(std::string_view w);
/// XOR-EQ shaped inputs (promise not required) labelled by b = d.
Label classify_eq_bd(std::string_view w);

/// Exactly one of the pairs (a,b), (b,c), (c,a) has equal counts.
bool classify_one(std::string_view u);
/// None of the pairs has equal counts.
bool classify_none(std::string_view u);
Label classify_onenone_t(std::string_view w, int t);

bool classify_eqstar(std::string_view w);
bool classify_eqstar_complement(std::string_view w);
bool classify_eq3(std::string_view w);
bool classify_L(std::string_view w);

/// A named problem with its oracle and exhaustive generator.
struct PromiseProblem {
    std::string name;
    std::string alphabet;
    std::function<Label(std::string_view)> classify;
    /// All promised instances with |w| <= n, deterministically ordered.
    std::function<std::vector<LabeledInstance>(std::size_t)> generate;
};

/// Known names: xor-eq, eq-ac, eq-bd, one-none, one-none-t<t>, eq-star, eq-star-complement, eq3, lang-L.
std::optional<PromiseProblem> find_problem(std::string_view name);
std::vector<std::string> problem_names();

inline constexpr std::size_t kDefaultGenerateCeiling = 24;

/// generate() of the named problem. Throws std::invalid_argument for an unknown name or n above the ceiling.
std::vector<LabeledInstance> generate(std::string_view name, std::size_t n,
                                      std::size_t ceiling = kDefaultGenerateCeiling);

/// Every promised XOR-EQ tuple with even a,b,c,d in [2, max_block] and offsets in [0, max_offset],
/// in lexicographic tuple order.
std::vector<LabeledInstance> generate_xoreq_tuples(int max_block, int max_offset);

/// ONE-NONE(t) instances whose d-runs have minimal length |y| = |u| and whose u-blocks have
/// length <= max_u. With `sorted_blocks`, u-blocks are restricted to the form a^i b^j c^k.
/// Yes-instances come first, then no-instances.
std::vector<LabeledInstance> generate_onenone_minimal(int t, int max_u, bool sorted_blocks);

/// Every string over `alphabet` with length <= n, by length then alphabet order.
std::vector<std::string> all_strings(std::string_view alphabet, std::size_t n);

/// When a machine's verdict counts as a decision for a label.
struct DecisionRule {
    enum class Kind { threshold, las_vegas, exact, nondeterministic, universal };
    Kind kind = Kind::threshold;
    Rational threshold = Rational(1, 2);
};

std::string_view to_string(DecisionRule::Kind kind);
std::optional<DecisionRule::Kind> parse_decision_kind(std::string_view text);

/// True when the verdict is the correct decision for a yes/no label.
bool decision_correct(const DecisionRule &rule, Label label, const Verdict &v);

}  // namespace counterlab

#endif
