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

#ifndef COUNTERLAB_ZOO_HPP
#define COUNTERLAB_ZOO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/machine.hpp"
#include "counterlab/problems.hpp"

namespace counterlab {

/// Bounds a zoo machine claims over its problem. Optional reject bounds are used by the
/// Las Vegas machines.
struct ClaimedBounds {
    Rational min_accept_yes;
    Rational max_accept_no;
    Rational max_dontknow;
    std::optional<Rational> max_reject_yes;
    std::optional<Rational> min_reject_no;
};

struct ZooEntry {
    std::string name;
    CounterMachine machine;
    std::string problem;
    ClaimedBounds bounds;
    DecisionRule rule;
};

inline constexpr int kZooMinK = 2;
inline constexpr int kZooMaxK = 9;
inline constexpr int kZooMaxT = 32;

/// Two reversible deterministic copies each: unprimed start q1_1 / q2_1, primed start
/// q1p_1 / q2p_1 with inverted output.
CounterMachine build_m1();
CounterMachine build_m2();
CounterMachine build_xoreq_q1ca();
CounterMachine build_onenone_lv();
CounterMachine build_onenone_lv_t(int t);
CounterMachine build_eqstar_p1bca(int k);
CounterMachine build_eq3_p1bca(int k);
CounterMachine build_eqstar_complement_d1ca();
CounterMachine build_L_p1ca(int k);

/// Family names with <t>/<k> placeholders, in listing order.
std::vector<std::string> zoo_families();

/// Resolves a concrete name such as "eq-star-p1bca-k3". nullopt for unknown names or
/// parameters out of range.
std::optional<ZooEntry> find_zoo(std::string_view name);

/// One representative per family (k=3, t=2) plus the parameterless entries.
std::vector<ZooEntry> zoo_representatives();

}  // namespace counterlab

#endif
