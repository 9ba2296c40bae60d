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

#include "counterlab/problems.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace counterlab {

std::string_view to_string(Label label) {
    switch (label) {
        case Label::yes:
            return "yes";
        case Label::no:
            return "no";
        default:
            return "outside_promise";
    }
}

std::string xoreq_string(const XorEqTuple &t) {
    std::string w;
    for (int n : {t.a, t.b, t.c, t.d, t.k1, t.k2, t.l1, t.l2}) {
        if (!w.empty()) {
            w.push_back('#');
        }
        w.append(static_cast<std::size_t>(n), '0');
    }
    return w;
}

std::optional<XorEqTuple> parse_xoreq(std::string_view w) {
    std::array<int, 8> blocks{};
    std::size_t index = 0;
    for (char c : w) {
        if (c == '#') {
            if (++index == blocks.size()) {
                return std::nullopt;
            }
        } else if (c == '0') {
            blocks[index]++;
        } else {
            return std::nullopt;
        }
    }
    if (index != 7) {
        return std::nullopt;
    }
    for (int i = 0; i < 4; i++) {
        if (blocks[i] < 2 || blocks[i] % 2 != 0) {
            return std::nullopt;
        }
    }
    return XorEqTuple{blocks[0], blocks[1], blocks[2], blocks[3], blocks[4], blocks[5], blocks[6], blocks[7]};
}

bool xoreq_promise_holds(const XorEqTuple &t) {
    int left = t.a - t.c + (t.a == t.c ? -1 : 1) * (t.k1 - t.k2);
    int right = t.b - t.d + (t.b == t.d ? -1 : 1) * (t.l1 - t.l2);
    return left == right;
}

Label classify_xoreq(std::string_view w) {
    auto t = parse_xoreq(w);
    if (!t || !xoreq_promise_holds(*t)) {
        return Label::outside_promise;
    }
    return ((t->a == t->c) != (t->b == t->d)) ? Label::yes : Label::no;
}

Label classify_eq_ac(std::string_view w) {
    auto t = parse_xoreq(w);
    if (!t) {
        return Label::outside_promise;
    }
    return t->a == t->c ? Label::yes : Label::no;
}

Label classify_eq_bd(std::string_view w) {
    auto t = parse_xoreq(w);
    if (!t) {
        return Label::outside_promise;
    }
    return t->b == t->d ? Label::yes : Label::no;
}

namespace {

// Number of equal pairs among (a,b), (b,c), (c,a); -1 for a symbol outside {a,b,c}.
int equal_pairs(std::string_view u) {
    long x = 0, y = 0, z = 0;
    for (char c : u) {
        if (c == 'a') {
            x++;
        } else if (c == 'b') {
            y++;
        } else if (c == 'c') {
            z++;
        } else {
            return -1;
        }
    }
    return (x == y) + (y == z) + (z == x);
}

bool only_symbols(std::string_view w, std::string_view alphabet) {
    return w.find_first_not_of(alphabet) == std::string_view::npos;
}

}  // namespace

bool classify_one(std::string_view u) {
    return equal_pairs(u) == 1;
}

bool classify_none(std::string_view u) {
    return equal_pairs(u) == 0;
}

Label classify_onenone_t(std::string_view w, int t) {
    if (t < 1 || !only_symbols(w, "abcd")) {
        return Label::outside_promise;
    }
    std::vector<std::string_view> us;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t u_start = i;
        while (i < w.size() && w[i] != 'd') {
            i++;
        }
        std::size_t y_start = i;
        while (i < w.size() && w[i] == 'd') {
            i++;
        }
        std::size_t u_len = y_start - u_start;
        std::size_t y_len = i - y_start;
        if (u_len == 0 || y_len == 0 || y_len < u_len) {
            return Label::outside_promise;
        }
        us.push_back(w.substr(u_start, u_len));
    }
    if (us.size() != static_cast<std::size_t>(2 * t)) {
        return Label::outside_promise;
    }
    bool yes = true;
    bool no = true;
    for (std::size_t j = 0; j < us.size(); j++) {
        bool odd = j % 2 == 0;
        yes = yes && (odd ? classify_one(us[j]) : classify_none(us[j]));
        no = no && (odd ? classify_none(us[j]) : classify_one(us[j]));
    }
    if (yes) {
        return Label::yes;
    }
    if (no) {
        return Label::no;
    }
    return Label::outside_promise;
}

bool classify_eqstar(std::string_view w) {
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t a = 0, b = 0;
        while (i < w.size() && w[i] == 'a') {
            a++;
            i++;
        }
        while (i < w.size() && w[i] == 'b') {
            b++;
            i++;
        }
        if (a == 0 || a != b) {
            return false;
        }
    }
    return true;
}

bool classify_eqstar_complement(std::string_view w) {
    return only_symbols(w, "ab") && !classify_eqstar(w);
}

bool classify_eq3(std::string_view w) {
    std::size_t i = 0;
    std::array<std::size_t, 3> counts{};
    for (std::size_t k = 0; k < 3; k++) {
        while (i < w.size() && w[i] == "cde"[k]) {
            counts[k]++;
            i++;
        }
    }
    return i == w.size() && counts[0] == counts[1] && counts[1] == counts[2];
}

bool classify_L(std::string_view w) {
    if (w.empty()) {
        return true;
    }
    if (only_symbols(w, "ab")) {
        return classify_eqstar_complement(w);
    }
    if (only_symbols(w, "cde")) {
        return classify_eq3(w);
    }
    return false;
}

std::vector<std::string> all_strings(std::string_view alphabet, std::size_t n) {
    std::vector<std::string> out;
    out.emplace_back();
    if (alphabet.empty()) {
        return out;
    }
    for (std::size_t len = 1; len <= n; len++) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            std::string w(len, ' ');
            for (std::size_t i = 0; i < len; i++) {
                w[i] = alphabet[digits[i]];
            }
            out.push_back(std::move(w));
            std::size_t pos = len;
            while (pos > 0 && ++digits[pos - 1] == alphabet.size()) {
                digits[pos - 1] = 0;
                pos--;
            }
            if (pos == 0) {
                break;
            }
        }
    }
    return out;
}

namespace {

bool shorter_then_lexicographic(const LabeledInstance &x, const LabeledInstance &y) {
    if (x.input.size() != y.input.size()) {
        return x.input.size() < y.input.size();
    }
    return x.input < y.input;
}

std::vector<LabeledInstance> language_instances(std::string_view alphabet, std::size_t n,
                                                bool (*member)(std::string_view)) {
    std::vector<LabeledInstance> out;
    for (std::string &w : all_strings(alphabet, n)) {
        Label label = member(w) ? Label::yes : Label::no;
        out.push_back({std::move(w), label});
    }
    return out;
}

// Tuples in lexicographic order with total string length <= n.
template <class Visit>
void for_each_xoreq_tuple(std::size_t n, Visit visit) {
    if (n < 15) {
        return;
    }
    int budget = static_cast<int>(n) - 7;
    XorEqTuple t;
    for (t.a = 2; t.a <= budget; t.a += 2) {
        for (t.b = 2; t.a + t.b <= budget; t.b += 2) {
            for (t.c = 2; t.a + t.b + t.c <= budget; t.c += 2) {
                for (t.d = 2; t.a + t.b + t.c + t.d <= budget; t.d += 2) {
                    int rest = budget - t.a - t.b - t.c - t.d;
                    for (t.k1 = 0; t.k1 <= rest; t.k1++) {
                        for (t.k2 = 0; t.k1 + t.k2 <= rest; t.k2++) {
                            for (t.l1 = 0; t.k1 + t.k2 + t.l1 <= rest; t.l1++) {
                                for (t.l2 = 0; t.k1 + t.k2 + t.l1 + t.l2 <= rest; t.l2++) {
                                    visit(t);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

std::vector<LabeledInstance> xoreq_instances(std::size_t n, Label (*classify)(std::string_view)) {
    std::vector<LabeledInstance> out;
    for_each_xoreq_tuple(n, [&](const XorEqTuple &t) {
        std::string w = xoreq_string(t);
        Label label = classify(w);
        if (label != Label::outside_promise) {
            out.push_back({std::move(w), label});
        }
    });
    return out;
}

std::vector<std::string> blocks_with(std::size_t max_len, bool (*property)(std::string_view), bool sorted_only) {
    std::vector<std::string> out;
    for (std::string &u : all_strings("abc", max_len)) {
        if (u.empty() || !property(u)) {
            continue;
        }
        if (sorted_only && !std::is_sorted(u.begin(), u.end())) {
            continue;
        }
        out.push_back(std::move(u));
    }
    return out;
}

void extend_onenone(int t, std::size_t block, std::size_t budget, const std::string &prefix, bool yes_pattern,
                    const std::vector<std::string> &ones, const std::vector<std::string> &nones,
                    std::vector<LabeledInstance> &out) {
    std::size_t blocks = static_cast<std::size_t>(2 * t);
    if (block == blocks) {
        out.push_back({prefix, yes_pattern ? Label::yes : Label::no});
        return;
    }
    bool want_one = (block % 2 == 0) == yes_pattern;
    std::size_t reserve = 2 * (blocks - block - 1);
    for (const std::string &u : want_one ? ones : nones) {
        for (std::size_t y = u.size(); u.size() + y + reserve <= budget; y++) {
            extend_onenone(t, block + 1, budget - u.size() - y, prefix + u + std::string(y, 'd'), yes_pattern, ones,
                           nones, out);
        }
    }
}

std::vector<LabeledInstance> onenone_instances(int t, std::size_t n) {
    auto ones = blocks_with(n / 2, classify_one, false);
    auto nones = blocks_with(n / 2, classify_none, false);
    std::vector<LabeledInstance> out;
    extend_onenone(t, 0, n, "", true, ones, nones, out);
    extend_onenone(t, 0, n, "", false, ones, nones, out);
    std::sort(out.begin(), out.end(), shorter_then_lexicographic);
    return out;
}

std::vector<LabeledInstance> lang_l_instances(std::size_t n) {
    std::vector<LabeledInstance> out;
    out.push_back({"", Label::yes});
    for (std::string_view alphabet : {std::string_view("ab"), std::string_view("cde")}) {
        for (std::string &w : all_strings(alphabet, n)) {
            if (!w.empty()) {
                Label label = classify_L(w) ? Label::yes : Label::no;
                out.push_back({std::move(w), label});
            }
        }
    }
    std::sort(out.begin(), out.end(), shorter_then_lexicographic);
    return out;
}

Label language_label(std::string_view w, std::string_view alphabet, bool (*member)(std::string_view)) {
    if (!only_symbols(w, alphabet)) {
        return Label::outside_promise;
    }
    return member(w) ? Label::yes : Label::no;
}

std::optional<int> onenone_rounds(std::string_view name) {
    if (name == "one-none") {
        return 1;
    }
    constexpr std::string_view prefix = "one-none-t";
    if (name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
    }
    std::string_view digits = name.substr(prefix.size());
    int t = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || t < 1 || digits.front() == '0') {
        return std::nullopt;
    }
    return t;
}

}  // namespace

std::optional<PromiseProblem> find_problem(std::string_view name) {
    if (name == "xor-eq") {
        return PromiseProblem{"xor-eq", "0#", classify_xoreq,
                              [](std::size_t n) { return xoreq_instances(n, classify_xoreq); }};
    }
    if (name == "eq-ac") {
        return PromiseProblem{"eq-ac", "0#", classify_eq_ac,
                              [](std::size_t n) { return xoreq_instances(n, classify_eq_ac); }};
    }
    if (name == "eq-bd") {
        return PromiseProblem{"eq-bd", "0#", classify_eq_bd,
                              [](std::size_t n) { return xoreq_instances(n, classify_eq_bd); }};
    }
    if (auto t = onenone_rounds(name)) {
        int rounds = *t;
        return PromiseProblem{std::string(name), "abcd",
                              [rounds](std::string_view w) { return classify_onenone_t(w, rounds); },
                              [rounds](std::size_t n) { return onenone_instances(rounds, n); }};
    }
    if (name == "eq-star") {
        return PromiseProblem{"eq-star", "ab", [](std::string_view w) { return language_label(w, "ab", classify_eqstar); },
                              [](std::size_t n) { return language_instances("ab", n, classify_eqstar); }};
    }
    if (name == "eq-star-complement") {
        return PromiseProblem{
            "eq-star-complement", "ab",
            [](std::string_view w) { return language_label(w, "ab", classify_eqstar_complement); },
            [](std::size_t n) { return language_instances("ab", n, classify_eqstar_complement); }};
    }
    if (name == "eq3") {
        return PromiseProblem{"eq3", "cde", [](std::string_view w) { return language_label(w, "cde", classify_eq3); },
                              [](std::size_t n) { return language_instances("cde", n, classify_eq3); }};
    }
    if (name == "lang-L") {
        return PromiseProblem{"lang-L", "abcde",
                              [](std::string_view w) { return language_label(w, "abcde", classify_L); },
                              lang_l_instances};
    }
    return std::nullopt;
}

std::vector<std::string> problem_names() {
    return {"xor-eq", "eq-ac", "eq-bd", "one-none", "one-none-t<t>", "eq-star", "eq-star-complement", "eq3", "lang-L"};
}

std::vector<LabeledInstance> generate(std::string_view name, std::size_t n, std::size_t ceiling) {
    auto problem = find_problem(name);
    if (!problem) {
        throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
    }
    if (n > ceiling) {
        throw std::invalid_argument("size bound " + std::to_string(n) + " exceeds the ceiling " +
                                    std::to_string(ceiling));
    }
    return problem->generate(n);
}

std::vector<LabeledInstance> generate_xoreq_tuples(int max_block, int max_offset) {
    std::vector<LabeledInstance> out;
    XorEqTuple t;
    for (t.a = 2; t.a <= max_block; t.a += 2) {
        for (t.b = 2; t.b <= max_block; t.b += 2) {
            for (t.c = 2; t.c <= max_block; t.c += 2) {
                for (t.d = 2; t.d <= max_block; t.d += 2) {
                    for (t.k1 = 0; t.k1 <= max_offset; t.k1++) {
                        for (t.k2 = 0; t.k2 <= max_offset; t.k2++) {
                            for (t.l1 = 0; t.l1 <= max_offset; t.l1++) {
                                for (t.l2 = 0; t.l2 <= max_offset; t.l2++) {
                                    if (xoreq_promise_holds(t)) {
                                        bool yes = (t.a == t.c) != (t.b == t.d);
                                        out.push_back({xoreq_string(t), yes ? Label::yes : Label::no});
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<LabeledInstance> generate_onenone_minimal(int t, int max_u, bool sorted_blocks) {
    auto ones = blocks_with(static_cast<std::size_t>(max_u), classify_one, sorted_blocks);
    auto nones = blocks_with(static_cast<std::size_t>(max_u), classify_none, sorted_blocks);
    std::vector<LabeledInstance> out;
    for (bool yes : {true, false}) {
        const auto &first = yes ? ones : nones;
        const auto &second = yes ? nones : ones;
        std::size_t per_round = first.size() * second.size();
        std::vector<std::size_t> digits(static_cast<std::size_t>(t), 0);
        if (per_round == 0) {
            continue;
        }
        while (true) {
            std::string w;
            for (std::size_t d : digits) {
                const std::string &u1 = first[d / second.size()];
                const std::string &u2 = second[d % second.size()];
                w += u1 + std::string(u1.size(), 'd') + u2 + std::string(u2.size(), 'd');
            }
            out.push_back({std::move(w), yes ? Label::yes : Label::no});
            std::size_t pos = digits.size();
            while (pos > 0 && ++digits[pos - 1] == per_round) {
                digits[pos - 1] = 0;
                pos--;
            }
            if (pos == 0) {
                break;
            }
        }
    }
    return out;
}

std::string_view to_string(DecisionRule::Kind kind) {
    switch (kind) {
        case DecisionRule::Kind::threshold:
            return "threshold";
        case DecisionRule::Kind::las_vegas:
            return "las-vegas";
        case DecisionRule::Kind::exact:
            return "exact";
        case DecisionRule::Kind::nondeterministic:
            return "nondeterministic";
        default:
            return "universal";
    }
}

std::optional<DecisionRule::Kind> parse_decision_kind(std::string_view text) {
    for (auto kind : {DecisionRule::Kind::threshold, DecisionRule::Kind::las_vegas, DecisionRule::Kind::exact,
                      DecisionRule::Kind::nondeterministic, DecisionRule::Kind::universal}) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

bool decision_correct(const DecisionRule &rule, Label label, const Verdict &v) {
    if (label == Label::outside_promise) {
        return true;
    }
    bool yes = label == Label::yes;
    switch (rule.kind) {
        case DecisionRule::Kind::threshold:
            return (v.accept > rule.threshold) == yes;
        case DecisionRule::Kind::exact:
            return yes ? v.accept == 1 : sgn(v.accept) == 0;
        case DecisionRule::Kind::las_vegas:
            return yes ? (sgn(v.accept) > 0 && sgn(v.reject) == 0) : (sgn(v.reject) > 0 && sgn(v.accept) == 0);
        case DecisionRule::Kind::nondeterministic:
            return (sgn(v.accept) > 0) == yes;
        default:
            return (v.accept == 1) == yes;
    }
}

}  // namespace counterlab
