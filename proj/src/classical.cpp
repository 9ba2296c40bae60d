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

#include "counterlab/classical.hpp"

#include <algorithm>
#include <random>

#include "prefix_runner.hpp"

namespace counterlab {

namespace {

const Transition kSinkLoop{0, 0, 1};

void require_classical(const CounterMachine &m) {
    if (is_quantum(m.machine_class())) {
        throw EngineError("quantum machine '" + m.name() + "' passed to the classical engine");
    }
}

// Entries for one configuration; absent keys and the sink itself loop on the sink.
std::span<const Transition> effective_row(const CounterMachine &m, StateIndex q, SymbolIndex symbol,
                                          CounterStatus status) {
    if (q != m.sink()) {
        auto row = m.row(q, symbol, status);
        if (!row.empty()) {
            return row;
        }
    }
    return {&kSinkLoop, 1};
}

StateIndex effective_target(const CounterMachine &m, const Transition &t) {
    return &t == &kSinkLoop ? m.sink() : t.target;
}

bool counter_condition_met(const CounterMachine &m, const Configuration &c, AcceptanceRule rule) {
    bool zero_needed = rule == AcceptanceRule::zero_counter ||
                       (rule == AcceptanceRule::class_default && is_blind(m.machine_class()));
    return !zero_needed || sgn(c.counter) == 0;
}

Outcome classify_config(const CounterMachine &m, const Configuration &c, AcceptanceRule rule) {
    bool counter_ok = counter_condition_met(m, c, rule);
    if (m.is_accepting(c.state) && counter_ok) {
        return Outcome::accept;
    }
    if (is_las_vegas(m.machine_class()) && m.is_neutral(c.state) && counter_ok) {
        return Outcome::dontknow;
    }
    return Outcome::reject;
}

}  // namespace

ConfigDistribution ConfigDistribution::point(Configuration c) {
    ConfigDistribution d;
    d.entries_.emplace_back(std::move(c), Rational(1));
    return d;
}

ConfigDistribution ConfigDistribution::from_unsorted(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) { return x.first < y.first; });
    ConfigDistribution d;
    d.entries_.reserve(entries.size());
    for (Entry &e : entries) {
        if (!d.entries_.empty() && d.entries_.back().first == e.first) {
            d.entries_.back().second += e.second;
        } else {
            d.entries_.push_back(std::move(e));
        }
    }
    std::erase_if(d.entries_, [](const Entry &e) { return sgn(e.second) == 0; });
    return d;
}

Rational ConfigDistribution::total() const {
    Rational sum = 0;
    for (const Entry &e : entries_) {
        sum += e.second;
    }
    return sum;
}

Rational ConfigDistribution::weight(const Configuration &c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry &e, const Configuration &key) { return e.first < key; });
    if (it != entries_.end() && it->first == c) {
        return it->second;
    }
    return 0;
}

ConfigDistribution initial_distribution(const CounterMachine &m) {
    require_classical(m);
    return ConfigDistribution::point(Configuration{m.initial(), 0});
}

ConfigDistribution step(const CounterMachine &m, const ConfigDistribution &d, SymbolIndex symbol) {
    require_classical(m);
    if (symbol >= m.alphabet().extended_size()) {
        throw InputError("symbol index " + std::to_string(symbol) + " outside the extended alphabet");
    }
    std::vector<ConfigDistribution::Entry> out;
    out.reserve(d.size() * 2);
    for (const auto &[c, w] : d.entries()) {
        for (const Transition &t : effective_row(m, c.state, symbol, status_of(c.counter))) {
            const Rational &p = t.weight.real().rational_part();
            if (sgn(p) == 0) {
                continue;
            }
            Configuration next{effective_target(m, t), c.counter};
            if (t.delta != 0) {
                next.counter += t.delta;
            }
            if (p == 1) {
                out.emplace_back(std::move(next), w);
            } else {
                out.emplace_back(std::move(next), w * p);
            }
        }
    }
    return ConfigDistribution::from_unsorted(std::move(out));
}

Verdict read_verdict(const CounterMachine &m, const ConfigDistribution &d, AcceptanceRule rule) {
    Verdict v{0, 0, 0};
    for (const auto &[c, w] : d.entries()) {
        switch (classify_config(m, c, rule)) {
            case Outcome::accept:
                v.accept += w;
                break;
            case Outcome::dontknow:
                v.dontknow += w;
                break;
            default:
                v.reject += w;
        }
    }
    return v;
}

RunTrace trace(const CounterMachine &m, std::string_view w, bool retain_steps) {
    auto tape = encode_tape(m.alphabet(), w);
    RunTrace result;
    ConfigDistribution d = initial_distribution(m);
    for (SymbolIndex s : tape) {
        d = step(m, d, s);
        result.step_count++;
        if (retain_steps) {
            result.steps.push_back(d);
        }
    }
    result.verdict = read_verdict(m, d);
    return result;
}

Verdict run(const CounterMachine &m, std::string_view w, AcceptanceRule rule) {
    auto tape = encode_tape(m.alphabet(), w);
    ConfigDistribution d = initial_distribution(m);
    for (SymbolIndex s : tape) {
        d = step(m, d, s);
    }
    return read_verdict(m, d, rule);
}

bool decide_mode(const CounterMachine &m, std::string_view w) {
    MachineClass cls = m.machine_class();
    if (cls != MachineClass::n1bca && cls != MachineClass::u1bca) {
        throw EngineError("decide_mode needs an n1bca or u1bca machine, got " + std::string(to_string(cls)));
    }
    Verdict v = run(m, w);
    if (cls == MachineClass::n1bca) {
        return sgn(v.accept) > 0;
    }
    return v.accept == 1;
}

Outcome sample_run(const CounterMachine &m, std::string_view w, std::uint64_t seed) {
    require_classical(m);
    auto tape = encode_tape(m.alphabet(), w);
    std::mt19937_64 rng(seed);
    const Rational scale(Integer(1) << 53);
    Configuration c{m.initial(), 0};
    for (SymbolIndex s : tape) {
        auto row = effective_row(m, c.state, s, status_of(c.counter));
        const Transition *chosen = &row.back();
        if (row.size() > 1) {
            Rational u(Integer(static_cast<unsigned long>(rng() >> 11)));
            u /= scale;
            Rational cumulative = 0;
            for (const Transition &t : row) {
                cumulative += t.weight.real().rational_part();
                if (u < cumulative) {
                    chosen = &t;
                    break;
                }
            }
        }
        c.state = effective_target(m, *chosen);
        c.counter += chosen->delta;
    }
    return classify_config(m, c, AcceptanceRule::class_default);
}

std::vector<Verdict> run_batch(const CounterMachine &m, std::span<const std::string> inputs, AcceptanceRule rule) {
    require_classical(m);
    ConfigDistribution start = initial_distribution(m);
    return detail::run_sharing_prefixes(
        m.alphabet(), inputs, start,
        [&](const ConfigDistribution &d, SymbolIndex s) { return step(m, d, s); },
        [&](const ConfigDistribution &d) { return read_verdict(m, d, rule); });
}

}  // namespace counterlab
