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

#include "counterlab/problems.hpp"

namespace counterlab {
namespace {

TEST(XorEq, ParseAndClassify) {
    XorEqTuple t{2, 2, 2, 4, 2, 0, 0, 0};
    std::string w = xoreq_string(t);
    EXPECT_EQ(w, "00#00#00#0000#00###");
    auto back = parse_xoreq(w);
    ASSERT_TRUE(back);
    EXPECT_EQ(xoreq_string(*back), w);
    EXPECT_EQ(classify_xoreq(w), Label::yes);
    EXPECT_EQ(classify_xoreq(xoreq_string({2, 2, 2, 2, 0, 0, 0, 0})), Label::no);
    EXPECT_EQ(classify_xoreq(xoreq_string({2, 4, 4, 6, 0, 0, 0, 0})), Label::no);
    // Promise broken: a = c needs -(k1 - k2) = b - d + (l1 - l2).
    EXPECT_EQ(classify_xoreq(xoreq_string({2, 2, 2, 4, 0, 0, 0, 0})), Label::outside_promise);
    EXPECT_EQ(classify_xoreq("000#00#00#00####"), Label::outside_promise);  // odd block
    EXPECT_EQ(classify_xoreq("00#00#00#00###"), Label::outside_promise);     // seven blocks
    EXPECT_EQ(classify_xoreq("00#00#00#00###a"), Label::outside_promise);
    EXPECT_EQ(classify_eq_ac(xoreq_string({2, 2, 2, 4, 0, 0, 0, 0})), Label::yes);
    EXPECT_EQ(classify_eq_bd(xoreq_string({2, 2, 2, 4, 0, 0, 0, 0})), Label::no);
}

TEST(OneNone, Blocks) {
    EXPECT_TRUE(classify_one("aabc"));    // (2,1,1): only b = c
    EXPECT_TRUE(classify_none("abbcccc"));  // (1,2,4)
    EXPECT_FALSE(classify_one("abc"));    // all three pairs equal
    EXPECT_FALSE(classify_none("abc"));
    EXPECT_TRUE(classify_one("aa"));      // (2,0,0): b = c
    EXPECT_TRUE(classify_none("aab"));
    EXPECT_EQ(classify_onenone_t("aabcddddabbccccdddddddd", 1), Label::yes);
    EXPECT_EQ(classify_onenone_t("abbccccdddddddaabcdddd", 1), Label::no);
    EXPECT_EQ(classify_onenone_t("aabcdddabbccccdddddddd", 1), Label::outside_promise);  // |y| < |u|
    EXPECT_EQ(classify_onenone_t("aabcddddabbccccdddddddd", 2), Label::outside_promise);
    EXPECT_EQ(classify_onenone_t("adaabddd", 1), Label::yes);
    EXPECT_EQ(classify_onenone_t("adaabdddadaabddd", 2), Label::yes);
    EXPECT_EQ(classify_onenone_t("adaabdddaabdddad", 2), Label::outside_promise);
}

TEST(Languages, Membership) {
    EXPECT_TRUE(classify_eqstar(""));
    EXPECT_TRUE(classify_eqstar("aabbab"));
    EXPECT_FALSE(classify_eqstar("abba"));
    EXPECT_FALSE(classify_eqstar("ba"));
    EXPECT_TRUE(classify_eqstar_complement("aab"));
    EXPECT_FALSE(classify_eqstar_complement("aabb"));
    EXPECT_TRUE(classify_eq3(""));
    EXPECT_TRUE(classify_eq3("ccddee"));
    EXPECT_FALSE(classify_eq3("cdde"));
    EXPECT_FALSE(classify_eq3("dce"));
    EXPECT_TRUE(classify_L(""));
    EXPECT_TRUE(classify_L("ba"));
    EXPECT_FALSE(classify_L("ab"));
    EXPECT_TRUE(classify_L("cde"));
    EXPECT_FALSE(classify_L("abcde"));
}

TEST(AllStrings, CountsAndOrder) {
    auto words = all_strings("ab", 3);
    EXPECT_EQ(words.size(), 15u);
    EXPECT_EQ(words[0], "");
    EXPECT_EQ(words[1], "a");
    EXPECT_EQ(words[3], "aa");
    EXPECT_EQ(words.back(), "bbb");
}

TEST(Generators, AgreeWithOracles) {
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"xor-eq", 19}, {"eq-ac", 17}, {"eq-bd", 17}, {"one-none", 14}, {"one-none-t2", 16},
        {"eq-star", 10}, {"eq-star-complement", 10}, {"eq3", 8}, {"lang-L", 7}};
    for (const auto &[name, n] : cases) {
        SCOPED_TRACE(name);
        auto problem = find_problem(name);
        ASSERT_TRUE(problem);
        auto instances = problem->generate(n);
        ASSERT_FALSE(instances.empty());
        std::set<std::string> seen;
        bool any_yes = false, any_no = false;
        for (const LabeledInstance &instance : instances) {
            EXPECT_LE(instance.input.size(), n);
            EXPECT_NE(instance.label, Label::outside_promise);
            EXPECT_EQ(problem->classify(instance.input), instance.label) << instance.input;
            EXPECT_TRUE(seen.insert(instance.input).second) << "duplicate " << instance.input;
            any_yes = any_yes || instance.label == Label::yes;
            any_no = any_no || instance.label == Label::no;
        }
        EXPECT_TRUE(any_yes);
        EXPECT_TRUE(any_no);
    }
}

TEST(Generators, CompleteForLanguages) {
    EXPECT_EQ(generate("eq-star", 6).size(), all_strings("ab", 6).size());
    std::size_t promised = 0;
    for (const std::string &w : all_strings("abcd", 8)) {
        promised += classify_onenone_t(w, 1) != Label::outside_promise;
    }
    EXPECT_EQ(generate("one-none", 8).size(), promised);
}

TEST(Generators, XorEqTupleFamily) {
    auto instances = generate_xoreq_tuples(4, 1);
    for (const LabeledInstance &instance : instances) {
        EXPECT_EQ(classify_xoreq(instance.input), instance.label);
    }
    std::size_t expected = 0;
    for (int a : {2, 4})
        for (int b : {2, 4})
            for (int c : {2, 4})
                for (int d : {2, 4})
                    for (int k1 = 0; k1 <= 1; k1++)
                        for (int k2 = 0; k2 <= 1; k2++)
                            for (int l1 = 0; l1 <= 1; l1++)
                                for (int l2 = 0; l2 <= 1; l2++)
                                    expected += xoreq_promise_holds({a, b, c, d, k1, k2, l1, l2});
    EXPECT_EQ(instances.size(), expected);
}

TEST(Generators, MinimalOneNone) {
    auto yes_first = generate_onenone_minimal(1, 2, false);
    // Every block of length <= 2 is ONE, so no round can be formed.
    EXPECT_TRUE(yes_first.empty());
    auto instances = generate_onenone_minimal(1, 3, true);
    for (const LabeledInstance &instance : instances) {
        EXPECT_EQ(classify_onenone_t(instance.input, 1), instance.label) << instance.input;
    }
    EXPECT_EQ(instances.front().label, Label::yes);
    EXPECT_EQ(instances.back().label, Label::no);
}

TEST(Registry, NamesAndErrors) {
    EXPECT_TRUE(find_problem("one-none-t7"));
    EXPECT_FALSE(find_problem("one-none-t0"));
    EXPECT_FALSE(find_problem("nope"));
    EXPECT_THROW(generate("nope", 3), std::invalid_argument);
    EXPECT_THROW(generate("eq-star", kDefaultGenerateCeiling + 1), std::invalid_argument);
    EXPECT_EQ(problem_names().size(), 9u);
}

TEST(DecisionRules, Correctness) {
    Verdict third{make_rational(1, 3), make_rational(2, 3), 0};
    DecisionRule threshold{DecisionRule::Kind::threshold};
    EXPECT_TRUE(decision_correct(threshold, Label::no, third));
    EXPECT_FALSE(decision_correct(threshold, Label::yes, third));
    DecisionRule lv{DecisionRule::Kind::las_vegas};
    EXPECT_TRUE(decision_correct(lv, Label::yes, Verdict{make_rational(1, 3), 0, make_rational(2, 3)}));
    EXPECT_FALSE(decision_correct(lv, Label::yes, Verdict{make_rational(1, 3), make_rational(1, 3), make_rational(1, 3)}));
    DecisionRule exact{DecisionRule::Kind::exact};
    EXPECT_FALSE(decision_correct(exact, Label::yes, third));
    EXPECT_TRUE(decision_correct(exact, Label::no, Verdict{0, 1, 0}));
    EXPECT_TRUE(decision_correct(DecisionRule{DecisionRule::Kind::nondeterministic}, Label::yes, third));
    EXPECT_FALSE(decision_correct(DecisionRule{DecisionRule::Kind::universal}, Label::yes, third));
    EXPECT_TRUE(decision_correct(exact, Label::outside_promise, third));
    EXPECT_EQ(parse_decision_kind("las-vegas"), DecisionRule::Kind::las_vegas);
    EXPECT_FALSE(parse_decision_kind("maybe"));
}

}  // namespace
}  // namespace counterlab
