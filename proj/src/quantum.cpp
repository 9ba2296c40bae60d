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

#include "counterlab/quantum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prefix_runner.hpp"

namespace counterlab {

namespace {

void require_quantum(const CounterMachine &m) {
    if (!is_quantum(m.machine_class())) {
        throw EngineError("classical machine '" + m.name() + "' passed to the quantum engine");
    }
}

// A configuration with a machine-word counter, enough for the finite unitarity window.
using SmallConfig = std::pair<StateIndex, long>;
using SparseVector = std::vector<std::pair<SmallConfig, Amplitude>>;

Amplitude inner_product(const SparseVector &x, const SparseVector &y) {
    // Both vectors are sorted by configuration.
    Amplitude sum;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            sum += i->second.conj() * j->second;
            ++i;
            ++j;
        }
    }
    return sum;
}

std::string describe(const CounterMachine &m, const SmallConfig &c) {
    return "(" + m.state_name(c.first) + ", " + std::to_string(c.second) + ")";
}

// Checks orthonormality of a family of sparse vectors, comparing only vectors with a common
// support element (all others are orthogonal by construction).
std::vector<UnitarityViolation> orthonormality(const CounterMachine &m, const std::string &symbol,
                                               const std::vector<std::pair<SmallConfig, SparseVector>> &family) {
    std::vector<UnitarityViolation> out;
    std::map<SmallConfig, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < family.size(); i++) {
        for (const auto &[key, amp] : family[i].second) {
            holders[key].push_back(i);
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto &[key, list] : holders) {
        for (std::size_t a = 0; a < list.size(); a++) {
            for (std::size_t b = a + 1; b < list.size(); b++) {
                pairs.emplace(list[a], list[b]);
            }
        }
    }
    for (std::size_t i = 0; i < family.size(); i++) {
        Amplitude norm = inner_product(family[i].second, family[i].second);
        if (!(norm == Amplitude(1))) {
            out.push_back({symbol, describe(m, family[i].first), describe(m, family[i].first), norm});
        }
    }
    for (const auto &[i, j] : pairs) {
        Amplitude ip = inner_product(family[i].second, family[j].second);
        if (!ip.is_zero()) {
            out.push_back({symbol, describe(m, family[i].first), describe(m, family[j].first), ip});
        }
    }
    return out;
}

SparseVector column(const CounterMachine &m, StateIndex q, long v, SymbolIndex symbol) {
    SparseVector col;
    for (const Transition &t : m.row(q, symbol, status_of(v))) {
        col.push_back({{t.target, v + t.delta}, t.weight});
    }
    std::sort(col.begin(), col.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return col;
}

}  // namespace

StateVector StateVector::basis(Configuration c) {
    StateVector psi;
    psi.entries_.emplace_back(std::move(c), Amplitude(1));
    return psi;
}

StateVector StateVector::from_unsorted(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) { return x.first < y.first; });
    StateVector psi;
    psi.entries_.reserve(entries.size());
    for (Entry &e : entries) {
        if (!psi.entries_.empty() && psi.entries_.back().first == e.first) {
            psi.entries_.back().second += e.second;
        } else {
            psi.entries_.push_back(std::move(e));
        }
    }
    std::erase_if(psi.entries_, [](const Entry &e) { return e.second.is_zero(); });
    return psi;
}

Amplitude StateVector::amplitude(const Configuration &c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry &e, const Configuration &key) { return e.first < key; });
    if (it != entries_.end() && it->first == c) {
        return it->second;
    }
    return Amplitude();
}

QSqrt2 StateVector::squared_norm() const {
    QSqrt2 sum;
    for (const Entry &e : entries_) {
        sum += e.second.norm_squared();
    }
    return sum;
}

StateVector initial_state(const CounterMachine &m) {
    require_quantum(m);
    return StateVector::basis(Configuration{m.initial(), 0});
}

StateVector evolve(const CounterMachine &m, const StateVector &psi, SymbolIndex symbol) {
    require_quantum(m);
    if (symbol >= m.alphabet().extended_size()) {
        throw InputError("symbol index " + std::to_string(symbol) + " outside the extended alphabet");
    }
    std::vector<StateVector::Entry> out;
    out.reserve(psi.size() * 2);
    for (const auto &[c, a] : psi.entries()) {
        for (const Transition &t : m.row(c.state, symbol, status_of(c.counter))) {
            Configuration next{t.target, c.counter};
            if (t.delta != 0) {
                next.counter += t.delta;
            }
            out.emplace_back(std::move(next), a * t.weight);
        }
    }
    return StateVector::from_unsorted(std::move(out));
}

Verdict measure(const CounterMachine &m, const StateVector &psi) {
    QSqrt2 accept;
    for (const auto &[c, a] : psi.entries()) {
        if (m.is_accepting(c.state)) {
            accept += a.norm_squared();
        }
    }
    if (!accept.is_rational()) {
        throw MeasurementError("accepting probability " + to_string(accept) + " is not rational");
    }
    Verdict v;
    v.accept = accept.rational_part();
    v.reject = 1 - v.accept;
    v.dontknow = 0;
    return v;
}

Verdict run_quantum(const CounterMachine &m, std::string_view w) {
    auto tape = encode_tape(m.alphabet(), w);
    StateVector psi = initial_state(m);
    for (SymbolIndex s : tape) {
        psi = evolve(m, psi, s);
    }
    return measure(m, psi);
}

std::vector<Verdict> run_quantum_batch(const CounterMachine &m, std::span<const std::string> inputs) {
    StateVector start = initial_state(m);
    return detail::run_sharing_prefixes(
        m.alphabet(), inputs, start, [&](const StateVector &psi, SymbolIndex s) { return evolve(m, psi, s); },
        [&](const StateVector &psi) { return measure(m, psi); });
}

UnitarityReport check_unitarity(const CounterMachine &m, SymbolIndex symbol) {
    require_quantum(m);
    const long step = m.max_step();
    const long column_window = 2 * step + 1;
    const long row_window = 3 * step + 1;
    const std::string name = m.alphabet().name(symbol);
    UnitarityReport report;

    std::vector<std::pair<SmallConfig, SparseVector>> columns;
    for (StateIndex q = 0; q < m.num_states(); q++) {
        for (long v = -column_window; v <= column_window; v++) {
            columns.push_back({{q, v}, column(m, q, v, symbol)});
        }
    }
    report.isometry_violations = orthonormality(m, name, columns);

    // Row (q', u) holds the coefficient of source (q, v) for every v within maxstep of u.
    std::map<SmallConfig, SparseVector> rows;
    for (StateIndex q = 0; q < m.num_states(); q++) {
        for (long u = -row_window; u <= row_window; u++) {
            rows[{q, u}];
        }
    }
    for (StateIndex q = 0; q < m.num_states(); q++) {
        for (long v = -row_window - step; v <= row_window + step; v++) {
            for (const auto &[target, amp] : column(m, q, v, symbol)) {
                auto it = rows.find(target);
                if (it != rows.end()) {
                    it->second.push_back({{q, v}, amp});
                }
            }
        }
    }
    std::vector<std::pair<SmallConfig, SparseVector>> row_family;
    row_family.reserve(rows.size());
    for (auto &[key, entries] : rows) {
        std::sort(entries.begin(), entries.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        row_family.push_back({key, std::move(entries)});
    }
    report.coisometry_violations = orthonormality(m, name, row_family);
    return report;
}

UnitarityReport check_unitarity(const CounterMachine &m) {
    UnitarityReport total;
    for (SymbolIndex s = 0; s < m.alphabet().extended_size(); s++) {
        UnitarityReport r = check_unitarity(m, s);
        total.isometry_violations.insert(total.isometry_violations.end(), r.isometry_violations.begin(),
                                         r.isometry_violations.end());
        total.coisometry_violations.insert(total.coisometry_violations.end(), r.coisometry_violations.begin(),
                                           r.coisometry_violations.end());
    }
    return total;
}

}  // namespace counterlab
