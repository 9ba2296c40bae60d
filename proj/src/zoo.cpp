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

#include "counterlab/zoo.hpp"

#include <array>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace counterlab {

namespace {

constexpr auto Z = CounterStatus::zero;
constexpr auto NZ = CounterStatus::nonzero;
constexpr std::optional<CounterStatus> kBoth = std::nullopt;

Amplitude fraction(long p, long q) {
    return Amplitude(make_rational(p, q));
}

// One reversible copy of a block-comparing subroutine over {0,#}.
struct CopySpec {
    std::vector<std::string> states;
    std::vector<std::pair<std::string, int>> zero_deltas;
    // (from, status, to); status nullopt means both.
    std::vector<std::tuple<std::string, std::optional<CounterStatus>, std::string>> hash_moves;
};

const CopySpec &m1_spec() {
    static const CopySpec spec{
        {"1", "2", "3", "4e", "4n", "5e", "5n", "6e", "6n", "7e", "7n", "8e", "8n", "x"},
        {{"1", 1}, {"2", 0}, {"3", -1}, {"4e", 0}, {"4n", 0}, {"5e", -1}, {"5n", 1}, {"6e", 1}, {"6n", -1},
         {"7e", 0}, {"7n", 0}, {"8e", 0}, {"8n", 0}, {"x", 0}},
        {{"1", kBoth, "2"},
         {"2", kBoth, "3"},
         {"3", Z, "4e"},
         {"3", NZ, "4n"},
         {"4e", kBoth, "5e"},
         {"4n", kBoth, "5n"},
         {"5e", kBoth, "6e"},
         {"5n", kBoth, "6n"},
         {"6e", kBoth, "7e"},
         {"6n", kBoth, "7n"},
         {"7e", kBoth, "8e"},
         {"7n", kBoth, "8n"},
         {"8n", kBoth, "1"},
         {"8e", kBoth, "x"},
         {"x", Z, "4n"},
         {"x", NZ, "4e"}},
    };
    return spec;
}

const CopySpec &m2_spec() {
    static const CopySpec spec{
        {"1", "2", "3", "4", "5e", "5n", "6e", "6n", "7e", "7n", "8e", "8n", "x"},
        {{"1", 0}, {"2", 1}, {"3", 0}, {"4", -1}, {"5e", 0}, {"5n", 0}, {"6e", 0}, {"6n", 0}, {"7e", -1},
         {"7n", 1}, {"8e", 1}, {"8n", -1}, {"x", 0}},
        {{"1", kBoth, "2"},
         {"2", kBoth, "3"},
         {"3", kBoth, "4"},
         {"4", Z, "5e"},
         {"4", NZ, "5n"},
         {"5e", kBoth, "6e"},
         {"5n", kBoth, "6n"},
         {"6e", kBoth, "7e"},
         {"6n", kBoth, "7n"},
         {"7e", kBoth, "8e"},
         {"7n", kBoth, "8n"},
         {"8n", kBoth, "1"},
         {"8e", kBoth, "x"},
         {"x", Z, "5n"},
         {"x", NZ, "5e"}},
    };
    return spec;
}

void add_copy_states(MachineBuilder &b, const CopySpec &spec, const std::string &prefix) {
    for (const std::string &s : spec.states) {
        b.add_state(prefix + s);
    }
}

void add_copy_moves(MachineBuilder &b, const CopySpec &spec, const std::string &prefix) {
    SymbolIndex zero = b.symbol('0');
    SymbolIndex hash = b.symbol('#');
    for (const auto &[s, delta] : spec.zero_deltas) {
        StateIndex q = b.state(prefix + s);
        b.add(q, zero, kBoth, q, delta);
    }
    for (const auto &[from, status, to] : spec.hash_moves) {
        b.add(b.state(prefix + from), hash, status, b.state(prefix + to), 0);
    }
}

void add_endmarker_loops(MachineBuilder &b, StateIndex q) {
    b.add(q, b.left_end(), kBoth, q, 0);
    b.add(q, b.right_end(), kBoth, q, 0);
}

CounterMachine build_two_copies(const std::string &name, const CopySpec &spec, const std::string &prefix,
                                const std::string &primed_prefix, const std::string &accept_eq,
                                const std::string &accept_neq) {
    MachineBuilder b(name, MachineClass::d1ca, "0#");
    add_copy_states(b, spec, prefix);
    add_copy_states(b, spec, primed_prefix);
    add_copy_moves(b, spec, prefix);
    add_copy_moves(b, spec, primed_prefix);
    for (StateIndex q = 0; q < b.num_states(); q++) {
        add_endmarker_loops(b, q);
    }
    b.set_initial(b.state(prefix + "1"));
    b.set_accepting(b.state(prefix + accept_eq));
    b.set_accepting(b.state(primed_prefix + accept_neq));
    return b.build();
}

}  // namespace

CounterMachine build_m1() {
    return build_two_copies("m1", m1_spec(), "q1_", "q1p_", "8e", "8n");
}

CounterMachine build_m2() {
    return build_two_copies("m2", m2_spec(), "q2_", "q2p_", "8e", "8n");
}

CounterMachine build_xoreq_q1ca() {
    MachineBuilder b("xoreq-q1ca", MachineClass::q1ca, "0#");
    StateIndex start = b.add_state("start");
    std::array<StateIndex, 4> sources{b.add_state("cz1"), start, b.add_state("cz2"), b.add_state("cz3")};
    add_copy_states(b, m1_spec(), "q1_");
    add_copy_states(b, m1_spec(), "q1p_");
    add_copy_states(b, m2_spec(), "q2_");
    add_copy_states(b, m2_spec(), "q2p_");
    std::array<StateIndex, 4> outs{b.add_state("rej"), b.add_state("acc"), b.add_state("out2"), b.add_state("out3")};
    add_copy_moves(b, m1_spec(), "q1_");
    add_copy_moves(b, m1_spec(), "q1p_");
    add_copy_moves(b, m2_spec(), "q2_");
    add_copy_moves(b, m2_spec(), "q2p_");
    for (StateIndex q : sources) {
        b.add(q, b.symbol('0'), kBoth, q, 0);
        b.add(q, b.symbol('#'), kBoth, q, 0);
    }
    for (StateIndex q : outs) {
        b.add(q, b.symbol('0'), kBoth, q, 0);
        b.add(q, b.symbol('#'), kBoth, q, 0);
    }

    // Left endmarker: a four-way Hadamard-type split between the source block and the four
    // initial states, applied in both directions.
    const std::array<std::array<int, 4>, 4> h{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}};
    std::array<StateIndex, 4> targets{b.state("q1_1"), b.state("q1p_1"), b.state("q2_1"), b.state("q2p_1")};
    std::vector<bool> split(b.num_states(), false);
    for (std::size_t j = 0; j < 4; j++) {
        split[sources[j]] = split[targets[j]] = true;
        for (std::size_t i = 0; i < 4; i++) {
            b.add(sources[j], b.left_end(), kBoth, targets[i], 0, fraction(h[i][j], 2));
            b.add(targets[j], b.left_end(), kBoth, sources[i], 0, fraction(h[i][j], 2));
        }
    }

    // Right endmarker: the final states of the copies form four logical outputs, two physical
    // states each; the first of each pair is the one the output states map back to.
    const std::array<std::array<std::string, 2>, 4> groups{{{"q1_8e", "q1p_8n"},
                                                             {"q1_8n", "q1p_8e"},
                                                             {"q2_8e", "q2p_8n"},
                                                             {"q2_8n", "q2p_8e"}}};
    const std::array<std::array<int, 4>, 4> r{{{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 1, 1}, {1, 1, -1, -1}}};
    std::vector<bool> finals(b.num_states(), false);
    for (std::size_t j = 0; j < 4; j++) {
        for (const std::string &name : groups[j]) {
            StateIndex p = b.state(name);
            finals[p] = true;
            for (std::size_t i = 0; i < 4; i++) {
                b.add(p, b.right_end(), kBoth, outs[i], 0, fraction(r[i][j], 2));
            }
        }
    }
    for (std::size_t i = 0; i < 4; i++) {
        finals[outs[i]] = true;
        for (std::size_t j = 0; j < 4; j++) {
            b.add(outs[i], b.right_end(), kBoth, b.state(groups[j][0]), 0, fraction(r[i][j], 2));
        }
    }
    for (StateIndex q = 0; q < b.num_states(); q++) {
        if (!split[q]) {
            b.add(q, b.left_end(), kBoth, q, 0);
        }
        if (!finals[q]) {
            b.add(q, b.right_end(), kBoth, q, 0);
        }
    }
    b.set_initial(start);
    b.set_accepting(outs[1]);
    return b.build();
}

namespace {

constexpr std::array<std::string_view, 3> kPairs{"ab", "bc", "ca"};

// Counter change of symbol x for the path comparing pair p.
int pair_delta(std::string_view p, char x) {
    if (x == p[0]) {
        return 1;
    }
    if (x == p[1]) {
        return -1;
    }
    return 0;
}

std::string u_state(int r, int h, std::string_view p, bool positive) {
    return "u" + std::to_string(r) + "_" + std::to_string(h) + "_" + std::string(p) + (positive ? "_p" : "_m");
}

std::string r_state(int r, int h, bool positive) {
    return "r" + std::to_string(r) + "_" + std::to_string(h) + (positive ? "_p" : "_m");
}

}  // namespace

CounterMachine build_onenone_lv_t(int t) {
    if (t < 1) {
        throw std::invalid_argument("the number of rounds must be at least 1");
    }
    MachineBuilder b(t == 1 ? "onenone-lv-t1" : "onenone-lv-t" + std::to_string(t), MachineClass::lv_p1ca, "abcd");
    StateIndex start = b.add_state("start");
    StateIndex accept = b.add_state("accept");
    StateIndex reject = b.add_state("reject");
    StateIndex dontknow = b.add_state("dontknow");
    auto last = [t](int r, int h) { return r == t && h == 2; };
    for (int r = 1; r <= t; r++) {
        for (int h = 1; h <= 2; h++) {
            for (std::string_view p : kPairs) {
                b.add_state(u_state(r, h, p, true));
                b.add_state(u_state(r, h, p, false));
            }
            if (!last(r, h)) {
                b.add_state(r_state(r, h, true));
                b.add_state(r_state(r, h, false));
            }
        }
    }
    const SymbolIndex d = b.symbol('d');
    const Amplitude third = fraction(1, 3);

    for (std::string_view p : kPairs) {
        b.add(start, b.left_end(), kBoth, b.state(u_state(1, 1, p, true)), 0, third);
    }
    for (StateIndex q : {accept, reject, dontknow}) {
        for (char x : std::string_view("abcd")) {
            b.add(q, b.symbol(x), kBoth, q, 0);
        }
        b.add(q, b.right_end(), kBoth, q, 0);
    }

    for (int r = 1; r <= t; r++) {
        for (int h = 1; h <= 2; h++) {
            for (bool positive : {true, false}) {
                for (std::string_view p : kPairs) {
                    StateIndex q = b.state(u_state(r, h, p, positive));
                    for (char x : std::string_view("abc")) {
                        int delta = pair_delta(p, x);
                        bool sign_after_zero = delta == 0 ? positive : delta > 0;
                        b.add(q, b.symbol(x), Z, b.state(u_state(r, h, p, sign_after_zero)), delta);
                        b.add(q, b.symbol(x), NZ, q, delta);
                    }
                    b.add(q, d, Z, h == 1 ? accept : reject, 0);
                    if (last(r, h)) {
                        b.add(q, d, NZ, dontknow, 0);
                    } else {
                        b.add(q, d, NZ, b.state(r_state(r, h, positive)), positive ? -1 : 1);
                    }
                }
                if (last(r, h)) {
                    continue;
                }
                StateIndex reset = b.state(r_state(r, h, positive));
                b.add(reset, d, Z, reset, 0);
                b.add(reset, d, NZ, reset, positive ? -1 : 1);
                int next_r = h == 1 ? r : r + 1;
                int next_h = h == 1 ? 2 : 1;
                for (char x : std::string_view("abc")) {
                    for (std::string_view p : kPairs) {
                        int delta = pair_delta(p, x);
                        b.add(reset, b.symbol(x), Z, b.state(u_state(next_r, next_h, p, delta >= 0)), delta, third);
                    }
                }
            }
        }
    }
    b.set_initial(start);
    b.set_accepting(accept);
    b.set_neutral(dontknow);
    return b.build();
}

CounterMachine build_onenone_lv() {
    CounterMachine m = build_onenone_lv_t(1);
    MachineBuilder b(m);
    b.set_name("onenone-lv");
    return b.build();
}

CounterMachine build_eqstar_p1bca(int k) {
    if (k < kZooMinK || k > kZooMaxK) {
        throw std::invalid_argument("k must lie in 2..9");
    }
    MachineBuilder b("eq-star-p1bca-k" + std::to_string(k), MachineClass::p1bca, "ab", k);
    StateIndex start = b.add_state("start");
    StateIndex acc = b.add_state("acc");
    std::vector<StateIndex> a_run, b_run;
    for (int i = 1; i <= k; i++) {
        a_run.push_back(b.add_state("a" + std::to_string(i)));
        b_run.push_back(b.add_state("b" + std::to_string(i)));
    }
    const SymbolIndex a = b.symbol('a');
    const SymbolIndex bs = b.symbol('b');
    const Amplitude share = fraction(1, k);
    b.add(start, b.left_end(), kBoth, start, 0);
    b.add(start, b.right_end(), kBoth, acc, 0);
    for (int i = 1; i <= k; i++) {
        b.add(start, a, kBoth, a_run[i - 1], i, share);
    }
    for (int i = 1; i <= k; i++) {
        StateIndex ai = a_run[i - 1];
        StateIndex bi = b_run[i - 1];
        b.add(ai, a, kBoth, ai, i);
        b.add(ai, bs, kBoth, bi, -i);
        b.add(bi, bs, kBoth, bi, -i);
        for (int j = 1; j <= k; j++) {
            b.add(bi, a, kBoth, a_run[j - 1], j, share);
        }
        b.add(bi, b.right_end(), kBoth, acc, 0);
    }
    b.set_initial(start);
    b.set_accepting(acc);
    return b.build();
}

namespace {

// The c*d*e* part with the k-way split over i, counter i*x + (1-i)*y - z. The split happens on
// the left endmarker, or on the first symbol when `split_on_first`. Status-dependent acceptance
// (zero_test) is used when the counter is not blind.
void add_eq3_part(MachineBuilder &b, StateIndex from, bool split_on_first, StateIndex acc, int k, bool zero_test) {
    const SymbolIndex c = b.symbol('c');
    const SymbolIndex d = b.symbol('d');
    const SymbolIndex e = b.symbol('e');
    std::vector<StateIndex> cs, ds, es;
    for (int i = 1; i <= k; i++) {
        cs.push_back(b.add_state("c" + std::to_string(i)));
        ds.push_back(b.add_state("d" + std::to_string(i)));
        es.push_back(b.add_state("e" + std::to_string(i)));
    }
    const Amplitude share = fraction(1, k);
    const std::optional<CounterStatus> final_status = zero_test ? std::optional(Z) : kBoth;
    for (int i = 1; i <= k; i++) {
        StateIndex ci = cs[i - 1], di = ds[i - 1], ei = es[i - 1];
        if (split_on_first) {
            b.add(from, c, kBoth, ci, i, share);
            b.add(from, d, kBoth, di, 1 - i, share);
            b.add(from, e, kBoth, ei, -1, share);
        } else {
            b.add(from, b.left_end(), kBoth, ci, 0, share);
        }
        b.add(ci, c, kBoth, ci, i);
        b.add(ci, d, kBoth, di, 1 - i);
        b.add(ci, e, kBoth, ei, -1);
        b.add(di, d, kBoth, di, 1 - i);
        b.add(di, e, kBoth, ei, -1);
        b.add(ei, e, kBoth, ei, -1);
        for (StateIndex q : {ci, di, ei}) {
            b.add(q, b.right_end(), final_status, acc, 0);
        }
    }
}

// Deterministic recognizer of the complement of EQ* over {a,b}, entered at `start`.
void add_complement_part(MachineBuilder &b, const std::string &prefix, StateIndex start) {
    const SymbolIndex a = b.symbol('a');
    const SymbolIndex bs = b.symbol('b');
    StateIndex a_run = b.add_state(prefix + "a_run");
    StateIndex b_run = b.add_state(prefix + "b_run");
    StateIndex member = b.add_state(prefix + "member");
    StateIndex nonmember = b.add_state(prefix + "nonmember");
    b.add(start, a, kBoth, a_run, 1);
    b.add(start, bs, kBoth, nonmember, 0);
    b.add(a_run, a, kBoth, a_run, 1);
    b.add(a_run, bs, kBoth, b_run, -1);
    b.add(a_run, b.right_end(), kBoth, nonmember, 0);
    b.add(b_run, bs, NZ, b_run, -1);
    b.add(b_run, bs, Z, nonmember, 0);
    b.add(b_run, a, Z, a_run, 1);
    b.add(b_run, a, NZ, nonmember, 0);
    b.add(b_run, b.right_end(), Z, member, 0);
    b.add(b_run, b.right_end(), NZ, nonmember, 0);
    b.add(nonmember, a, kBoth, nonmember, 0);
    b.add(nonmember, bs, kBoth, nonmember, 0);
    b.add(nonmember, b.right_end(), kBoth, nonmember, 0);
    b.set_accepting(nonmember);
}

}  // namespace

CounterMachine build_eq3_p1bca(int k) {
    if (k < kZooMinK || k > kZooMaxK) {
        throw std::invalid_argument("k must lie in 2..9");
    }
    MachineBuilder b("eq3-p1bca-k" + std::to_string(k), MachineClass::p1bca, "cde", k);
    StateIndex start = b.add_state("start");
    StateIndex acc = b.add_state("acc");
    add_eq3_part(b, start, false, acc, k, false);
    b.set_initial(start);
    b.set_accepting(acc);
    return b.build();
}

CounterMachine build_eqstar_complement_d1ca() {
    MachineBuilder b("eq-star-complement-d1ca", MachineClass::d1ca, "ab");
    StateIndex start = b.add_state("s");
    b.add(start, b.left_end(), kBoth, start, 0);
    add_complement_part(b, "", start);
    b.add(start, b.right_end(), kBoth, b.state("member"), 0);
    b.set_initial(start);
    return b.build();
}

CounterMachine build_L_p1ca(int k) {
    if (k < kZooMinK || k > kZooMaxK) {
        throw std::invalid_argument("k must lie in 2..9");
    }
    MachineBuilder b("lang-L-p1ca-k" + std::to_string(k), MachineClass::p1ca, "abcde", k);
    StateIndex start = b.add_state("start");
    StateIndex acc = b.add_state("acc");
    b.add(start, b.left_end(), kBoth, start, 0);
    b.add(start, b.right_end(), kBoth, acc, 0);
    add_complement_part(b, "x_", start);
    add_eq3_part(b, start, true, acc, k, true);
    b.set_initial(start);
    b.set_accepting(acc);
    return b.build();
}

std::vector<std::string> zoo_families() {
    return {"m1",
            "m2",
            "xoreq-q1ca",
            "onenone-lv",
            "onenone-lv-t<t>",
            "eq-star-p1bca-k<k>",
            "eq3-p1bca-k<k>",
            "eq-star-complement-d1ca",
            "lang-L-p1ca-k<k>"};
}

namespace {

std::optional<int> numeric_suffix(std::string_view name, std::string_view prefix, int lo, int hi) {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) {
        return std::nullopt;
    }
    std::string_view digits = name.substr(prefix.size());
    if (digits.front() == '0') {
        return std::nullopt;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value < lo || value > hi) {
        return std::nullopt;
    }
    return value;
}

ClaimedBounds exact_bounds() {
    return {1, 0, 0, std::nullopt, std::nullopt};
}

ClaimedBounds one_sided_bounds(int k) {
    return {1, make_rational(1, k), 0, std::nullopt, std::nullopt};
}

ZooEntry onenone_entry(CounterMachine m, int t, std::string problem) {
    Rational miss = power(make_rational(2, 3), static_cast<unsigned>(t));
    Rational success = 1 - miss;
    std::string name = m.name();
    return {name, std::move(m), std::move(problem), {success, 0, miss, Rational(0), success},
            {DecisionRule::Kind::las_vegas}};
}

}  // namespace

std::optional<ZooEntry> find_zoo(std::string_view name) {
    const DecisionRule exact{DecisionRule::Kind::exact};
    const DecisionRule threshold{DecisionRule::Kind::threshold};
    if (name == "m1") {
        return ZooEntry{"m1", build_m1(), "eq-ac", exact_bounds(), exact};
    }
    if (name == "m2") {
        return ZooEntry{"m2", build_m2(), "eq-bd", exact_bounds(), exact};
    }
    if (name == "xoreq-q1ca") {
        return ZooEntry{"xoreq-q1ca", build_xoreq_q1ca(), "xor-eq", exact_bounds(), exact};
    }
    if (name == "onenone-lv") {
        return onenone_entry(build_onenone_lv(), 1, "one-none");
    }
    if (auto t = numeric_suffix(name, "onenone-lv-t", 1, kZooMaxT)) {
        return onenone_entry(build_onenone_lv_t(*t), *t, "one-none-t" + std::to_string(*t));
    }
    if (auto k = numeric_suffix(name, "eq-star-p1bca-k", kZooMinK, kZooMaxK)) {
        return ZooEntry{std::string(name), build_eqstar_p1bca(*k), "eq-star", one_sided_bounds(*k), threshold};
    }
    if (auto k = numeric_suffix(name, "eq3-p1bca-k", kZooMinK, kZooMaxK)) {
        return ZooEntry{std::string(name), build_eq3_p1bca(*k), "eq3", one_sided_bounds(*k), threshold};
    }
    if (name == "eq-star-complement-d1ca") {
        return ZooEntry{"eq-star-complement-d1ca", build_eqstar_complement_d1ca(), "eq-star-complement",
                        exact_bounds(), exact};
    }
    if (auto k = numeric_suffix(name, "lang-L-p1ca-k", kZooMinK, kZooMaxK)) {
        return ZooEntry{std::string(name), build_L_p1ca(*k), "lang-L", one_sided_bounds(*k), threshold};
    }
    return std::nullopt;
}

std::vector<ZooEntry> zoo_representatives() {
    std::vector<ZooEntry> out;
    for (std::string_view name : {"m1", "m2", "xoreq-q1ca", "onenone-lv", "onenone-lv-t2", "eq-star-p1bca-k3",
                                  "eq3-p1bca-k3", "eq-star-complement-d1ca", "lang-L-p1ca-k3"}) {
        out.push_back(*find_zoo(name));
    }
    return out;
}

}  // namespace counterlab
