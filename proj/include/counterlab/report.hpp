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

#ifndef COUNTERLAB_REPORT_HPP
#define COUNTERLAB_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "counterlab/adversary.hpp"
#include "counterlab/zoo.hpp"

namespace counterlab {

struct InstanceRecord {
    std::string input;
    Label label = Label::outside_promise;
    Verdict verdict;
};

/// Exact aggregates over the records; a field is empty when no record of that label exists.
struct BatchSummary {
    std::optional<Rational> min_accept_on_yes;
    std::optional<Rational> max_accept_on_no;
    std::optional<Rational> max_dontknow;
    std::optional<Rational> max_reject_on_yes;
    std::optional<Rational> min_reject_on_no;
    std::optional<std::size_t> worst_case;  // record index with the largest error mass
    std::size_t yes_count = 0;
    std::size_t no_count = 0;
};

struct BatchReport {
    std::string problem;
    std::string machine;
    std::size_t max_n = 0;
    std::vector<InstanceRecord> records;
    BatchSummary summary;
};

BatchSummary summarize(const std::vector<InstanceRecord> &records);

/// Evaluates every instance exactly and aggregates the results.
BatchReport make_batch_report(const CounterMachine &m, const std::string &problem,
                              const std::vector<LabeledInstance> &instances, std::size_t max_n);

/// True iff every claimed bound holds on the summary (bounds on an empty side hold vacuously).
bool bounds_hold(const BatchSummary &summary, const ClaimedBounds &bounds);

// JSON renderings: one object, sorted keys, rationals as "p/q" strings.
std::string to_json(const BatchReport &report);
std::string to_json(const FoolingPair &pair);
std::string to_json(const CounterMachine &m, const PumpRecord &record);
std::string to_json(const std::optional<Misclassification> &result, const std::string &problem, std::size_t max_n);

}  // namespace counterlab

#endif
