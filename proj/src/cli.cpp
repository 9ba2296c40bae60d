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

#include "counterlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "counterlab/adversary.hpp"
#include "counterlab/classical.hpp"
#include "counterlab/dsl.hpp"
#include "counterlab/engine.hpp"
#include "counterlab/quantum.hpp"
#include "counterlab/report.hpp"
#include "counterlab/validation.hpp"
#include "counterlab/zoo.hpp"

namespace counterlab {

namespace {

// Carries an exit code out of a command.
struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kExitIo, "cannot read '" + path + "'"};
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw Failure{kExitIo, "cannot write '" + path + "'"};
    }
}

CounterMachine load_machine(const std::string &path) {
    ParseResult result = parse(read_file(path));
    if (!result.ok()) {
        std::string message;
        for (const ParseDiagnostic &d : result.diagnostics) {
            if (d.severity == Severity::error) {
                message += (message.empty() ? "" : "\n") + path + ":" + to_string(d);
            }
        }
        throw Failure{kExitInvalid, message};
    }
    return *result.machine;
}

ZooEntry load_zoo(const std::string &name) {
    auto entry = find_zoo(name);
    if (!entry) {
        throw Failure{kExitInvalid, "unknown zoo machine '" + name + "'"};
    }
    return *entry;
}

int cmd_validate(const std::string &path, std::ostream &out) {
    ParseResult result = parse(read_file(path));
    if (!result.ok()) {
        for (const ParseDiagnostic &d : result.diagnostics) {
            out << path << ":" << to_string(d) << "\n";
        }
        return kExitInvalid;
    }
    std::vector<Violation> violations = validate(*result.machine);
    if (!violations.empty()) {
        for (const Violation &v : violations) {
            out << v.locus << ": " << v.message << "\n";
        }
        return kExitInvalid;
    }
    out << "OK\n";
    return kExitOk;
}

int cmd_run(const std::string &path, const std::string &input, bool sample, std::optional<std::uint64_t> seed,
            std::ostream &out) {
    CounterMachine m = load_machine(path);
    if (sample) {
        if (!seed) {
            throw Failure{kExitInvalid, "--sample needs an explicit --seed"};
        }
        if (is_quantum(m.machine_class())) {
            throw Failure{kExitInvalid, "--sample is only available for classical machines"};
        }
        out << to_string(sample_run(m, input, *seed)) << "\n";
        return kExitOk;
    }
    out << to_string(evaluate(m, input)) << "\n";
    return kExitOk;
}

std::vector<LabeledInstance> instances_for(const std::string &problem, std::size_t max_n) {
    if (!find_problem(problem)) {
        throw Failure{kExitInvalid, "unknown problem '" + problem + "'"};
    }
    try {
        return generate(problem, max_n);
    } catch (const std::invalid_argument &e) {
        throw Failure{kExitInvalid, e.what()};
    }
}

int cmd_batch(const std::string &path, const std::string &zoo_name, std::string problem, std::size_t max_n,
              const std::string &out_path, std::ostream &out, std::ostream &err) {
    if (path.empty() == zoo_name.empty()) {
        throw Failure{kExitInvalid, "give either a machine file or --zoo <name>"};
    }
    std::optional<ZooEntry> entry;
    CounterMachine m = zoo_name.empty() ? load_machine(path) : (entry = load_zoo(zoo_name))->machine;
    if (problem.empty()) {
        if (!entry) {
            throw Failure{kExitInvalid, "--problem is required for a machine file"};
        }
        problem = entry->problem;
    }
    BatchReport report = make_batch_report(m, problem, instances_for(problem, max_n), max_n);
    write_output(out_path, to_json(report), out);
    const BatchSummary &s = report.summary;
    auto show = [](const std::optional<Rational> &r) { return r ? to_fraction(*r) : std::string("none"); };
    std::ostream &log = out_path.empty() ? err : out;
    log << "instances=" << report.records.size() << " min_accept_on_yes=" << show(s.min_accept_on_yes)
        << " max_accept_on_no=" << show(s.max_accept_on_no) << " max_dontknow=" << show(s.max_dontknow) << "\n";
    if (entry && entry->problem == problem) {
        bool hold = bounds_hold(s, entry->bounds);
        log << "claimed bounds " << (hold ? "hold" : "violated") << "\n";
        return hold ? kExitOk : kExitInvalid;
    }
    return kExitOk;
}

CounterMachine load_for_adversary(const std::string &path) {
    if (path.rfind("zoo:", 0) == 0) {
        return load_zoo(path.substr(4)).machine;
    }
    return load_machine(path);
}

int cmd_adversary(const std::string &mode, const std::string &path, const std::string &problem,
                  std::optional<std::size_t> max_n, const std::string &input, const std::string &rule_name,
                  std::ostream &out) {
    CounterMachine m = load_for_adversary(path);
    try {
        if (mode == "fool-xoreq") {
            FoolingPair pair = fool_xoreq_d1ca(m, max_n ? static_cast<int>(*max_n) : kFoolStartBound);
            out << to_json(pair);
            return kExitOk;
        }
        if (mode == "pump-u1bca") {
            PumpRecord record = pump_u1bca(m, input.empty() ? default_pump_witness(m) : input);
            out << to_json(m, record);
            return kExitOk;
        }
        if (problem.empty() || !max_n) {
            throw Failure{kExitInvalid, "brute needs --problem and --max-n"};
        }
        DecisionRule rule = default_decision_rule(m.machine_class());
        if (!rule_name.empty()) {
            auto kind = parse_decision_kind(rule_name);
            if (!kind) {
                throw Failure{kExitInvalid, "unknown decision rule '" + rule_name + "'"};
            }
            rule.kind = *kind;
        }
        auto result = brute_refute(m, instances_for(problem, *max_n), rule);
        out << to_json(result, problem, *max_n);
        return result ? kExitOk : kExitExhausted;
    } catch (const std::invalid_argument &e) {
        throw Failure{kExitInvalid, e.what()};
    } catch (const AdversaryError &e) {
        throw Failure{kExitExhausted, e.what()};
    }
}

int cmd_zoo(const std::string &action, const std::string &name, const std::string &out_path, std::ostream &out) {
    if (action == "list") {
        for (const std::string &family : zoo_families()) {
            out << family << "\n";
        }
        return kExitOk;
    }
    if (name.empty()) {
        throw Failure{kExitInvalid, "zoo emit needs a machine name"};
    }
    write_output(out_path, emit(load_zoo(name).machine), out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact simulation and adversary tools for one-counter automata", "counterlab"};
    app.require_subcommand(1);

    std::string file;
    auto *validate_cmd = app.add_subcommand("validate", "Check a .cma file, including unitarity for q1ca");
    validate_cmd->add_option("file", file, "Machine file")->required();

    std::string input;
    bool sample = false;
    std::optional<std::uint64_t> seed;
    auto *run_cmd = app.add_subcommand("run", "Print the exact verdict on one input");
    run_cmd->add_option("file", file, "Machine file")->required();
    run_cmd->add_option("--input", input, "Input word (may be empty)")->required();
    run_cmd->add_flag("--sample", sample, "Sample one computation path instead");
    run_cmd->add_option("--seed", seed, "Seed for --sample");

    std::string zoo_name, problem, out_path;
    std::optional<std::size_t> max_n;
    auto *batch_cmd = app.add_subcommand("batch", "Run every instance of a problem up to a size bound");
    batch_cmd->add_option("file", file, "Machine file");
    batch_cmd->add_option("--zoo", zoo_name, "Use a zoo machine instead of a file");
    batch_cmd->add_option("--problem", problem, "Problem name");
    batch_cmd->add_option("--max-n", max_n, "Size bound")->required();
    batch_cmd->add_option("--out", out_path, "Report path (stdout when omitted)");

    std::string mode, rule_name;
    auto *adversary_cmd = app.add_subcommand("adversary", "Search for a refutation of a machine");
    adversary_cmd->add_option("mode", mode, "fool-xoreq, pump-u1bca or brute")
        ->required()
        ->check(CLI::IsMember({"fool-xoreq", "pump-u1bca", "brute"}));
    adversary_cmd->add_option("file", file, "Machine file, or zoo:<name>")->required();
    adversary_cmd->add_option("--problem", problem, "Problem for brute");
    adversary_cmd->add_option("--max-n", max_n, "Size bound (brute) or starting prefix bound (fool-xoreq)");
    adversary_cmd->add_option("--input", input, "Witness for pump-u1bca");
    adversary_cmd->add_option("--rule", rule_name, "Decision rule for brute");

    std::string action, name;
    auto *zoo_cmd = app.add_subcommand("zoo", "List or emit zoo machines");
    zoo_cmd->add_option("action", action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
    zoo_cmd->add_option("name", name, "Zoo machine name");
    zoo_cmd->add_option("--out", out_path, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(file, out);
        }
        if (run_cmd->parsed()) {
            return cmd_run(file, input, sample, seed, out);
        }
        if (batch_cmd->parsed()) {
            return cmd_batch(file, zoo_name, problem, *max_n, out_path, out, err);
        }
        if (adversary_cmd->parsed()) {
            return cmd_adversary(mode, file, problem, max_n, input, rule_name, out);
        }
        return cmd_zoo(action, name, out_path, out);
    } catch (const Failure &f) {
        err << f.message << "\n";
        return f.code;
    } catch (const InputError &e) {
        err << e.what() << "\n";
        return kExitInvalid;
    } catch (const EngineError &e) {
        err << e.what() << "\n";
        return kExitInvalid;
    } catch (const MeasurementError &e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace counterlab
