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

#include "counterlab/report.hpp"

#include <json.hpp>

#include "counterlab/engine.hpp"

namespace counterlab {

namespace {

using nlohmann::json;

json rational_or_null(const std::optional<Rational> &r) {
    return r ? json(to_fraction(*r)) : json(nullptr);
}

json verdict_json(const Verdict &v) {
    return {{"accept", to_fraction(v.accept)}, {"reject", to_fraction(v.reject)}, {"dontknow", to_fraction(v.dontknow)}};
}

json path_json(const CounterMachine &m, const ComputationPath &path) {
    json out = json::array();
    for (const Configuration &c : path) {
        out.push_back({{"state", m.state_name(c.state)}, {"counter", c.counter.get_str()}});
    }
    return out;
}

json tuple_json(const XorEqTuple &t) {
    return {{"a", t.a},   {"b", t.b},   {"c", t.c},   {"d", t.d},
            {"k1", t.k1}, {"k2", t.k2}, {"l1", t.l1}, {"l2", t.l2}};
}

void keep_min(std::optional<Rational> &slot, const Rational &value) {
    if (!slot || value < *slot) {
        slot = value;
    }
}

void keep_max(std::optional<Rational> &slot, const Rational &value) {
    if (!slot || value > *slot) {
        slot = value;
    }
}

std::string render(const json &j) {
    return j.dump(2) + "\n";
}

}  // namespace

BatchSummary summarize(const std::vector<InstanceRecord> &records) {
    BatchSummary s;
    std::optional<Rational> worst_error;
    for (std::size_t i = 0; i < records.size(); i++) {
        const InstanceRecord &r = records[i];
        if (r.label == Label::outside_promise) {
            continue;
        }
        const Verdict &v = r.verdict;
        keep_max(s.max_dontknow, v.dontknow);
        Rational error;
        if (r.label == Label::yes) {
            s.yes_count++;
            keep_min(s.min_accept_on_yes, v.accept);
            keep_max(s.max_reject_on_yes, v.reject);
            error = 1 - v.accept;
        } else {
            s.no_count++;
            keep_max(s.max_accept_on_no, v.accept);
            keep_min(s.min_reject_on_no, v.reject);
            error = 1 - v.reject;
        }
        if (!worst_error || error > *worst_error) {
            worst_error = error;
            s.worst_case = i;
        }
    }
    return s;
}

BatchReport make_batch_report(const CounterMachine &m, const std::string &problem,
                              const std::vector<LabeledInstance> &instances, std::size_t max_n) {
    std::vector<std::string> inputs;
    inputs.reserve(instances.size());
    for (const LabeledInstance &instance : instances) {
        inputs.push_back(instance.input);
    }
    std::vector<Verdict> verdicts = evaluate_batch(m, inputs);
    BatchReport report{problem, m.name(), max_n, {}, {}};
    report.records.reserve(instances.size());
    for (std::size_t i = 0; i < instances.size(); i++) {
        report.records.push_back({instances[i].input, instances[i].label, verdicts[i]});
    }
    report.summary = summarize(report.records);
    return report;
}

bool bounds_hold(const BatchSummary &s, const ClaimedBounds &b) {
    bool ok = true;
    if (s.min_accept_on_yes) {
        ok = ok && *s.min_accept_on_yes >= b.min_accept_yes;
    }
    if (s.max_accept_on_no) {
        ok = ok && *s.max_accept_on_no <= b.max_accept_no;
    }
    if (s.max_dontknow) {
        ok = ok && *s.max_dontknow <= b.max_dontknow;
    }
    if (s.max_reject_on_yes && b.max_reject_yes) {
        ok = ok && *s.max_reject_on_yes <= *b.max_reject_yes;
    }
    if (s.min_reject_on_no && b.min_reject_no) {
        ok = ok && *s.min_reject_on_no >= *b.min_reject_no;
    }
    return ok;
}

std::string to_json(const BatchReport &report) {
    json instances = json::array();
    for (const InstanceRecord &r : report.records) {
        json item = verdict_json(r.verdict);
        item["input"] = r.input;
        item["label"] = std::string(to_string(r.label));
        instances.push_back(std::move(item));
    }
    const BatchSummary &s = report.summary;
    json worst = nullptr;
    if (s.worst_case) {
        const InstanceRecord &r = report.records[*s.worst_case];
        worst = {{"input", r.input}, {"label", std::string(to_string(r.label))}};
    }
    json summary = {{"min_accept_on_yes", rational_or_null(s.min_accept_on_yes)},
                    {"max_accept_on_no", rational_or_null(s.max_accept_on_no)},
                    {"max_dontknow", rational_or_null(s.max_dontknow)},
                    {"max_reject_on_yes", rational_or_null(s.max_reject_on_yes)},
                    {"min_reject_on_no", rational_or_null(s.min_reject_on_no)},
                    {"worst_case", worst},
                    {"counts", {{"yes", s.yes_count}, {"no", s.no_count}}}};
    return render({{"problem", report.problem},
                   {"machine", report.machine},
                   {"max_n", report.max_n},
                   {"instances", std::move(instances)},
                   {"summary", std::move(summary)}});
}

std::string to_json(const FoolingPair &pair) {
    auto side = [](const std::string &prefix, const XorEqTuple &t, const std::string &input, Label label,
                   const Verdict &v) {
        return json{{"prefix", prefix},
                    {"tuple", tuple_json(t)},
                    {"input", input},
                    {"label", std::string(to_string(label))},
                    {"verdict", verdict_json(v)}};
    };
    return render({{"case", pair.same_first_block ? "a=a'" : "a!=a'"},
                   {"first", side(pair.first_prefix, pair.first_tuple, pair.first, pair.first_label,
                                  pair.first_verdict)},
                   {"second", side(pair.second_prefix, pair.second_tuple, pair.second, pair.second_label,
                                   pair.second_verdict)}});
}

std::string to_json(const CounterMachine &m, const PumpRecord &r) {
    json j = {{"type", std::string(to_string(r.kind))},
              {"witness", r.witness},
              {"witness_verdict", verdict_json(r.witness_verdict)}};
    if (r.kind == RefutationKind::pumped_pair) {
        j["rejecting_path"] = path_json(m, r.rejecting_path);
        j["t"] = r.t;
        j["t2"] = r.t2;
        j["segment_difference"] = r.segment_difference.get_str();
        j["pumped_once"] = r.pumped_once;
        j["pumped_twice"] = r.pumped_twice;
        j["refuted_input"] = r.refuted_input;
        j["refuting_path"] = path_json(m, r.refuting_path);
    }
    return render(j);
}

std::string to_json(const std::optional<Misclassification> &result, const std::string &problem, std::size_t max_n) {
    json j = {{"problem", problem}, {"max_n", max_n}, {"misclassification", nullptr}};
    if (result) {
        json item = verdict_json(result->verdict);
        item["index"] = result->index;
        item["input"] = result->instance.input;
        item["label"] = std::string(to_string(result->instance.label));
        j["misclassification"] = std::move(item);
    }
    return render(j);
}

}  // namespace counterlab
