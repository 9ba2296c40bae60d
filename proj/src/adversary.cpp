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

#include "counterlab/adversary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "counterlab/classical.hpp"
#include "counterlab/engine.hpp"

namespace counterlab {

namespace {

struct Move {
    StateIndex target;
    int delta;
};

// Entries of the key as seen by the classical engine: absent keys and the sink go to the sink.
std::vector<Move> moves(const CounterMachine &m, StateIndex q, SymbolIndex symbol, CounterStatus status) {
    std::vector<Move> out;
    if (q != m.sink()) {
        for (const Transition &t : m.row(q, symbol, status)) {
            if (sgn(t.weight.real().rational_part()) != 0) {
                out.push_back({t.target, t.delta});
            }
        }
    }
    if (out.empty()) {
        out.push_back({m.sink(), 0});
    }
    return out;
}

Move deterministic_move(const CounterMachine &m, StateIndex q, SymbolIndex symbol, CounterStatus status) {
    return moves(m, q, symbol, status).front();
}

void require_deterministic(const CounterMachine &m, std::string_view operation) {
    if (!is_deterministic(m.machine_class()) || is_quantum(m.machine_class())) {
        throw std::invalid_argument(std::string(operation) + " needs a deterministic machine, got " +
                                    std::string(to_string(m.machine_class())));
    }
}

}  // namespace

CycleProfile analyze_cycle(const CounterMachine &m, const Configuration &start, SymbolIndex sigma) {
    require_deterministic(m, "analyze_cycle");
    if (sigma >= m.alphabet().extended_size()) {
        throw std::invalid_argument("symbol index outside the extended alphabet");
    }
    const std::size_t states = m.num_states() + 1;
    std::vector<Configuration> configs{start};
    for (std::size_t i = 0; i < 2 * states; i++) {
        const Configuration &c = configs.back();
        if (sgn(c.counter) == 0) {
            throw AdversaryError("counter reached zero");
        }
        Move mv = deterministic_move(m, c.state, sigma, CounterStatus::nonzero);
        configs.push_back({mv.target, c.counter + mv.delta});
    }
    std::map<StateIndex, std::size_t> first_seen;
    for (std::size_t n2 = 0; n2 < configs.size(); n2++) {
        auto [it, fresh] = first_seen.emplace(configs[n2].state, n2);
        if (!fresh) {
            std::size_t n1 = it->second;
            CycleProfile profile;
            profile.entry = n1;
            profile.period = n2 - n1;
            profile.difference = configs[n2].counter - configs[n1].counter;
            for (std::size_t i = n1; i < n2; i++) {
                profile.cycle_states.push_back(configs[i].state);
            }
            return profile;
        }
    }
    throw AdversaryError("no repeated state within 2|Q| steps");
}

std::vector<SigmaClass> sigma_partition(const CounterMachine &m, SymbolIndex sigma) {
    require_deterministic(m, "sigma_partition");
    if (sigma >= m.alphabet().extended_size()) {
        throw std::invalid_argument("symbol index outside the extended alphabet");
    }
    std::map<StateIndex, SigmaClass> classes;
    for (StateIndex q = 0; q <= m.sink(); q++) {
        std::map<StateIndex, std::size_t> seen;
        std::vector<StateIndex> walk;
        StateIndex p = q;
        while (seen.emplace(p, walk.size()).second) {
            walk.push_back(p);
            p = deterministic_move(m, p, sigma, CounterStatus::nonzero).target;
        }
        std::vector<StateIndex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen[p]), walk.end());
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        SigmaClass &cls = classes[cycle.front()];
        if (cls.cycle.empty()) {
            cls.cycle = cycle;
            cls.period = cycle.size();
            for (StateIndex s : cycle) {
                cls.difference += deterministic_move(m, s, sigma, CounterStatus::nonzero).delta;
            }
        }
        cls.states.push_back(q);
    }
    std::vector<SigmaClass> out;
    for (auto &[id, cls] : classes) {
        out.push_back(std::move(cls));
    }
    return out;
}

namespace {

using SmallConfig = std::pair<StateIndex, long>;

SmallConfig feed(const CounterMachine &m, SmallConfig c, SymbolIndex symbol, std::size_t times = 1) {
    for (std::size_t i = 0; i < times; i++) {
        Move mv = deterministic_move(m, c.first, symbol, status_of(c.second));
        c = {mv.target, c.second + mv.delta};
    }
    return c;
}

struct Prefix {
    int a;
    int b;
};

std::string prefix_string(const Prefix &p) {
    return std::string(static_cast<std::size_t>(p.a), '0') + "#" + std::string(static_cast<std::size_t>(p.b), '0') +
           "#";
}

std::optional<std::pair<Prefix, Prefix>> find_collision(const CounterMachine &m, int n) {
    const SymbolIndex zero = *m.alphabet().index_of('0');
    const SymbolIndex hash = *m.alphabet().index_of('#');
    std::map<std::pair<int, int>, SmallConfig> reached;
    SmallConfig after_a = feed(m, {m.initial(), 0}, Alphabet::left_end);
    after_a = feed(m, after_a, zero, 2);
    for (int a = 2; a < n; a += 2) {
        SmallConfig c = feed(m, after_a, hash);
        c = feed(m, c, zero, 2);
        for (int b = 2; b < n; b += 2) {
            reached[{a, b}] = feed(m, c, hash);
            c = feed(m, c, zero, 2);
        }
        after_a = feed(m, after_a, zero, 2);
    }
    std::vector<Prefix> order;
    for (const auto &[key, config] : reached) {
        order.push_back({key.first, key.second});
    }
    std::sort(order.begin(), order.end(), [](const Prefix &x, const Prefix &y) {
        return std::pair(x.a + x.b, x.b) < std::pair(y.a + y.b, y.b);
    });
    std::map<SmallConfig, Prefix> owner;
    for (const Prefix &p : order) {
        auto [it, fresh] = owner.emplace(reached[{p.a, p.b}], p);
        if (!fresh) {
            return std::pair(it->second, p);
        }
    }
    return std::nullopt;
}

std::pair<int, int> split_offset(int value) {
    int first = std::max(0, value);
    return {first, first - value};
}

// Completes the two colliding prefixes so that the first becomes a yes-instance and the second
// a no-instance, with a common suffix.
std::optional<std::pair<XorEqTuple, XorEqTuple>> complete(const Prefix &p, const Prefix &q, int n) {
    const int bound = 2 * n;
    if (p.a != q.a) {
        const int base = (p.b + q.b + p.a - q.a) / 2;
        for (int l1 = 0; l1 <= bound; l1++) {
            for (int l2 = 0; l2 <= bound; l2++) {
                int d = base + (l1 - l2);
                if (d < 2 || d % 2 != 0 || d == p.b || d == q.b) {
                    continue;
                }
                auto [k1, k2] = split_offset(d - p.b - (l1 - l2));
                XorEqTuple first{p.a, p.b, p.a, d, k1, k2, l1, l2};
                XorEqTuple second{q.a, q.b, p.a, d, k1, k2, l1, l2};
                return std::pair(first, second);
            }
        }
        return std::nullopt;
    }
    const int half = (p.b - q.b) / 2;
    for (int k1 = 0; k1 <= bound; k1++) {
        for (int k2 = 0; k2 <= bound; k2++) {
            int c = p.a + half + (k1 - k2);
            if (c < 2 || c % 2 != 0 || c == p.a) {
                continue;
            }
            auto [l1, l2] = split_offset(c - p.a - (k1 - k2));
            XorEqTuple first{p.a, p.b, c, p.b, k1, k2, l1, l2};
            XorEqTuple second{q.a, q.b, c, p.b, k1, k2, l1, l2};
            return std::pair(first, second);
        }
    }
    return std::nullopt;
}

}  // namespace

FoolingPair fool_xoreq_d1ca(const CounterMachine &m, int n, int ceiling) {
    require_deterministic(m, "fool_xoreq_d1ca");
    if (!m.alphabet().index_of('0') || !m.alphabet().index_of('#') || m.alphabet().size() != 2) {
        throw std::invalid_argument("fool_xoreq_d1ca needs the alphabet {0,#}");
    }
    for (int bound = std::max(n, 4);; bound *= 2) {
        bound = std::min(bound, ceiling);
        if (auto hit = find_collision(m, bound)) {
            const auto &[p, q] = *hit;
            auto tuples = complete(p, q, bound);
            if (!tuples) {
                throw AdversaryError("no suffix satisfies the promise for the colliding prefixes");
            }
            FoolingPair pair;
            pair.first_prefix = prefix_string(p);
            pair.second_prefix = prefix_string(q);
            pair.same_first_block = p.a == q.a;
            pair.first_tuple = tuples->first;
            pair.second_tuple = tuples->second;
            pair.first = xoreq_string(pair.first_tuple);
            pair.second = xoreq_string(pair.second_tuple);
            pair.first_label = classify_xoreq(pair.first);
            pair.second_label = classify_xoreq(pair.second);
            pair.first_verdict = run(m, pair.first);
            pair.second_verdict = run(m, pair.second);
            if (pair.first_label != Label::yes || pair.second_label != Label::no ||
                !(pair.first_verdict == pair.second_verdict)) {
                throw AdversaryError("fooling pair failed verification");
            }
            return pair;
        }
        if (bound >= ceiling) {
            throw AdversaryError("no configuration collision below the ceiling " + std::to_string(ceiling));
        }
    }
}

std::string_view to_string(RefutationKind kind) {
    return kind == RefutationKind::accepts_member ? "accepts a member of EQ*" : "rejects a pumped non-member";
}

std::string default_pump_witness(const CounterMachine &m) {
    std::size_t n = m.num_states() + 1;
    return std::string(n, 'a') + std::string(n, 'b');
}

namespace {

struct PathSearch {
    const CounterMachine &m;
    const std::vector<SymbolIndex> &tape;
    std::size_t budget;
    std::size_t nodes = 0;
    std::set<std::tuple<std::size_t, StateIndex, long>> accepting_subtrees;
    std::vector<std::size_t> choices;

    bool rejects(const SmallConfig &c) const {
        return !(m.is_accepting(c.first) && c.second == 0);
    }

    // Depth-first search for a rejecting continuation from tape position i.
    bool find(std::size_t i, SmallConfig c) {
        if (++nodes > budget) {
            throw AdversaryError("path enumeration exceeded the node budget of " + std::to_string(budget));
        }
        if (i == tape.size()) {
            return rejects(c);
        }
        auto key = std::tuple(i, c.first, c.second);
        if (accepting_subtrees.contains(key)) {
            return false;
        }
        auto options = moves(m, c.first, tape[i], status_of(c.second));
        for (std::size_t k = 0; k < options.size(); k++) {
            choices.push_back(k);
            if (find(i + 1, {options[k].target, c.second + options[k].delta})) {
                return true;
            }
            choices.pop_back();
        }
        accepting_subtrees.insert(key);
        return false;
    }
};

// Follows the given branch choices; nullopt if a choice is not available.
std::optional<ComputationPath> replay(const CounterMachine &m, const std::vector<SymbolIndex> &tape,
                                      const std::vector<std::size_t> &choices) {
    if (choices.size() != tape.size()) {
        return std::nullopt;
    }
    ComputationPath path{Configuration{m.initial(), 0}};
    for (std::size_t i = 0; i < tape.size(); i++) {
        const Configuration &c = path.back();
        auto options = moves(m, c.state, tape[i], status_of(c.counter));
        if (choices[i] >= options.size()) {
            return std::nullopt;
        }
        path.push_back({options[choices[i]].target, c.counter + options[choices[i]].delta});
    }
    return path;
}

}  // namespace

PumpRecord pump_u1bca(const CounterMachine &m, std::string_view w, std::size_t node_budget) {
    if (m.machine_class() != MachineClass::u1bca) {
        throw std::invalid_argument("pump_u1bca needs a u1bca machine, got " + std::string(to_string(m.machine_class())));
    }
    if (!m.alphabet().index_of('a') || !m.alphabet().index_of('b') || m.alphabet().size() != 2) {
        throw std::invalid_argument("pump_u1bca needs the alphabet {a,b}");
    }
    const std::size_t n1 = w.find_first_not_of('a') == std::string_view::npos ? w.size() : w.find_first_not_of('a');
    if (w.empty() || !classify_eqstar(w) || n1 <= m.num_states()) {
        throw std::invalid_argument("witness must be a member of EQ* whose first a-block is longer than |Q|");
    }
    PumpRecord record;
    record.witness = std::string(w);
    record.witness_verdict = run(m, w);
    if (record.witness_verdict.accept == 1) {
        record.kind = RefutationKind::accepts_member;
        return record;
    }

    const auto tape = encode_tape(m.alphabet(), w);
    PathSearch search{m, tape, node_budget, 0, {}, {}};
    if (!search.find(0, {m.initial(), 0})) {
        throw AdversaryError("no rejecting path found although the acceptance probability is below 1");
    }
    record.kind = RefutationKind::pumped_pair;
    record.rejecting_path = *replay(m, tape, search.choices);

    // path[1 + t] is the configuration after the left endmarker and a^t.
    std::map<StateIndex, std::size_t> seen;
    for (std::size_t t2 = 0; t2 <= n1; t2++) {
        auto [it, fresh] = seen.emplace(record.rejecting_path[1 + t2].state, t2);
        if (!fresh) {
            record.t = it->second;
            record.t2 = t2;
            break;
        }
    }
    if (record.t2 == 0) {
        throw AdversaryError("no repeated state in the first block");
    }
    record.segment_difference = record.rejecting_path[1 + record.t2].counter - record.rejecting_path[1 + record.t].counter;

    const std::size_t gap = record.t2 - record.t;
    const std::string rest(w.substr(n1));
    record.pumped_once = std::string(n1 + gap, 'a') + rest;
    record.pumped_twice = std::string(n1 + 2 * gap, 'a') + rest;

    const auto &choices = search.choices;
    const auto segment_begin = choices.begin() + static_cast<std::ptrdiff_t>(1 + record.t);
    const auto segment_end = choices.begin() + static_cast<std::ptrdiff_t>(1 + record.t2);
    for (std::size_t copies : {1, 2}) {
        const std::string &pumped = copies == 1 ? record.pumped_once : record.pumped_twice;
        std::vector<std::size_t> pumped_choices(choices.begin(), segment_end);
        for (std::size_t i = 0; i < copies; i++) {
            pumped_choices.insert(pumped_choices.end(), segment_begin, segment_end);
        }
        pumped_choices.insert(pumped_choices.end(), segment_end, choices.end());
        auto path = replay(m, encode_tape(m.alphabet(), pumped), pumped_choices);
        if (!path) {
            throw AdversaryError("pumped path failed to replay");
        }
        const Configuration &last = path->back();
        bool rejected = !(m.is_accepting(last.state) && sgn(last.counter) == 0);
        if (rejected && classify_eqstar_complement(pumped)) {
            record.refuted_input = pumped;
            record.refuting_path = std::move(*path);
            return record;
        }
    }
    throw AdversaryError("neither pumped path rejects");
}

DecisionRule default_decision_rule(MachineClass cls) {
    if (is_las_vegas(cls)) {
        return {DecisionRule::Kind::las_vegas};
    }
    if (cls == MachineClass::n1bca) {
        return {DecisionRule::Kind::nondeterministic};
    }
    if (cls == MachineClass::u1bca) {
        return {DecisionRule::Kind::universal};
    }
    if (is_quantum(cls) || is_deterministic(cls)) {
        return {DecisionRule::Kind::exact};
    }
    return {DecisionRule::Kind::threshold};
}

std::optional<Misclassification> brute_refute(const CounterMachine &m, const std::vector<LabeledInstance> &instances,
                                              const DecisionRule &rule) {
    std::vector<std::string> inputs;
    inputs.reserve(instances.size());
    for (const LabeledInstance &instance : instances) {
        inputs.push_back(instance.input);
    }
    std::vector<Verdict> verdicts = evaluate_batch(m, inputs);
    for (std::size_t i = 0; i < instances.size(); i++) {
        if (!decision_correct(rule, instances[i].label, verdicts[i])) {
            return Misclassification{i, instances[i], verdicts[i]};
        }
    }
    return std::nullopt;
}

std::optional<Misclassification> brute_refute(const CounterMachine &m, std::string_view problem, std::size_t n,
                                              const DecisionRule &rule) {
    return brute_refute(m, generate(problem, n), rule);
}

}  // namespace counterlab
