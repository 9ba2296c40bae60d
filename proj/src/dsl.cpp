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

#include "counterlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace counterlab {

std::string to_string(const ParseDiagnostic &d) {
    return std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
           (d.severity == Severity::error ? "error" : "warning") + ": " + d.message;
}

namespace {

// Recursive descent over a weight expression.
class AmplitudeReader {
   public:
    explicit AmplitudeReader(std::string_view text) : text_(text) {
    }

    std::optional<Amplitude> read() {
        auto value = expr();
        skip_blanks();
        if (!value || pos_ != text_.size()) {
            return std::nullopt;
        }
        return value;
    }

   private:
    void skip_blanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    bool peek(char c) {
        skip_blanks();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool peek_word(std::string_view word) {
        skip_blanks();
        return text_.substr(pos_, word.size()) == word;
    }

    std::optional<Amplitude> expr() {
        bool negative = false;
        if (peek('-') || peek('+')) {
            negative = text_[pos_] == '-';
            pos_++;
        }
        auto total = unit();
        if (!total) {
            return std::nullopt;
        }
        if (negative) {
            *total = -*total;
        }
        while (peek('+') || peek('-')) {
            bool minus = text_[pos_] == '-';
            pos_++;
            auto next = unit();
            if (!next) {
                return std::nullopt;
            }
            if (minus) {
                *total -= *next;
            } else {
                *total += *next;
            }
        }
        return total;
    }

    std::optional<Amplitude> unit() {
        if (peek('i') && !peek_word("i2")) {
            pos_++;
            return Amplitude(QSqrt2(), QSqrt2(1));
        }
        auto value = group();
        if (!value) {
            return std::nullopt;
        }
        if (peek('i')) {
            pos_++;
            return *value * Amplitude(QSqrt2(), QSqrt2(1));
        }
        return value;
    }

    std::optional<Amplitude> group() {
        if (peek('(')) {
            pos_++;
            auto inner = expr();
            if (!inner || !peek(')')) {
                return std::nullopt;
            }
            pos_++;
            return inner;
        }
        if (peek_word("r2")) {
            pos_ += 2;
            return Amplitude(QSqrt2(0, 1));
        }
        auto q = rational();
        if (!q) {
            return std::nullopt;
        }
        if (peek_word("r2")) {
            pos_ += 2;
            return Amplitude(QSqrt2(0, *q));
        }
        return Amplitude(*q);
    }

    std::optional<Rational> rational() {
        skip_blanks();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
        if (pos_ < text_.size() && text_[pos_] == '/') {
            pos_++;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_++;
            }
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::string_view trim(std::string_view s, std::size_t *offset = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) {
        b++;
    }
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        e--;
    }
    if (offset != nullptr) {
        *offset += b;
    }
    return s.substr(b, e - b);
}

std::vector<Token> split_blanks(std::string_view line, std::size_t base_column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), base_column + start});
        }
    }
    return out;
}

// Splits on `sep`, keeping trimmed fields with their columns.
std::vector<Token> split_fields(std::string_view text, char sep, std::size_t base_column) {
    std::vector<Token> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::size_t offset = start;
        std::string_view field = trim(raw, &offset);
        out.push_back({field, base_column + offset});
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\'';
    });
}

struct PendingTransition {
    std::size_t line;
    Token from, symbol, status, to, delta;
    std::optional<Token> weight;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {
    }

    ParseResult run() {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            std::string_view line = text_.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            line_no++;
            handle_line(line_no, line);
            if (end == std::string_view::npos) {
                break;
            }
            pos = end + 1;
        }
        finish(line_no);
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        bool failed = std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                                  [](const ParseDiagnostic &d) { return d.severity == Severity::error; });
        if (!failed && machine_) {
            result.machine = std::move(machine_);
        }
        return result;
    }

   private:
    void error(std::size_t line, std::size_t column, std::size_t length, std::string message) {
        diagnostics_.push_back({{line, std::max<std::size_t>(column, 1), std::max<std::size_t>(length, 1)},
                                Severity::error,
                                std::move(message)});
    }
    void error(std::size_t line, const Token &t, std::string message) {
        error(line, t.column, t.text.size(), std::move(message));
    }

    void handle_line(std::size_t line_no, std::string_view line) {
        for (std::size_t i = 0; i < line.size(); i++) {
            unsigned char c = static_cast<unsigned char>(line[i]);
            if (c >= 0x80 || (c < 0x20 && c != '\t')) {
                error(line_no, i + 1, 1, "lexical error: unexpected character");
                return;
            }
        }
        std::size_t offset = 0;
        std::string_view body = trim(line, &offset);
        if (body.empty() || body.front() == '#') {
            return;
        }
        auto words = split_blanks(line, 1);
        Token directive = words.front();
        std::vector<Token> args(words.begin() + 1, words.end());
        if (directive.text == "trans") {
            handle_trans(line_no, line, directive);
            return;
        }
        static const std::set<std::string_view> known{"machine", "class",   "alphabet", "states",
                                                      "initial", "accept",  "neutral",  "maxstep"};
        if (!known.count(directive.text)) {
            error(line_no, directive, "unknown directive '" + std::string(directive.text) + "'");
            return;
        }
        if (seen_.count(std::string(directive.text))) {
            error(line_no, directive, "duplicate directive '" + std::string(directive.text) + "'");
            return;
        }
        seen_[std::string(directive.text)] = {line_no, args, directive};
    }

    void handle_trans(std::size_t line_no, std::string_view line, const Token &directive) {
        std::size_t rest_start = directive.column - 1 + directive.text.size();
        std::string_view rest = line.substr(rest_start);
        std::size_t arrow = rest.find("->");
        if (arrow == std::string_view::npos) {
            error(line_no, directive, "expected '->' in transition");
            return;
        }
        auto left = split_fields(rest.substr(0, arrow), ',', rest_start + 1);
        std::string_view right = rest.substr(arrow + 2);
        std::size_t right_col = rest_start + arrow + 3;
        std::optional<Token> weight;
        std::size_t at = right.find('@');
        if (at != std::string_view::npos) {
            std::size_t offset = at + 1;
            std::string_view w = trim(right.substr(at + 1), &offset);
            weight = Token{w, right_col + offset};
            right = right.substr(0, at);
        }
        auto rhs = split_fields(right, ',', right_col);
        if (left.size() != 3 || rhs.size() != 2) {
            error(line_no, directive, "transition must read '<state> , <sym> , <status> -> <state> , <delta>'");
            return;
        }
        for (const Token &t : {left[0], left[1], left[2], rhs[0], rhs[1]}) {
            if (t.text.empty()) {
                error(line_no, t.column, 1, "empty transition field");
                return;
            }
        }
        if (weight && weight->text.empty()) {
            error(line_no, weight->column, 1, "empty weight after '@'");
            return;
        }
        pending_.push_back({line_no, left[0], left[1], left[2], rhs[0], rhs[1], weight});
    }

    const std::vector<Token> *require(std::string_view name, std::size_t last_line) {
        auto it = seen_.find(std::string(name));
        if (it == seen_.end()) {
            error(last_line, 1, 1, "missing '" + std::string(name) + "' directive");
            return nullptr;
        }
        return &it->second.args;
    }

    std::optional<StateIndex> lookup_state(const MachineBuilder &b, std::size_t line, const Token &t) {
        if (!is_identifier(t.text)) {
            error(line, t, "lexical error: invalid identifier '" + std::string(t.text) + "'");
            return std::nullopt;
        }
        auto q = b.find_state(t.text);
        if (!q) {
            error(line, t, "undeclared state '" + std::string(t.text) + "'");
        }
        return q;
    }

    void finish(std::size_t last_line) {
        auto *name = require("machine", last_line);
        auto *cls_args = require("class", last_line);
        auto *alphabet_args = require("alphabet", last_line);
        auto *state_args = require("states", last_line);
        auto *initial_args = require("initial", last_line);
        if (!name || !cls_args || !alphabet_args || !state_args || !initial_args) {
            return;
        }
        std::size_t name_line = seen_["machine"].line;
        if (name->size() != 1 || !is_identifier((*name)[0].text)) {
            error(name_line, seen_["machine"].directive, "machine needs exactly one identifier");
            return;
        }
        const DirectiveLine &cls_line = seen_["class"];
        if (cls_args->size() != 1) {
            error(cls_line.line, cls_line.directive, "class needs exactly one value");
            return;
        }
        auto cls = parse_machine_class((*cls_args)[0].text);
        if (!cls) {
            error(cls_line.line, (*cls_args)[0], "unknown class '" + std::string((*cls_args)[0].text) + "'");
            return;
        }
        const DirectiveLine &alpha_line = seen_["alphabet"];
        std::string symbols;
        for (const Token &t : *alphabet_args) {
            if (t.text.size() != 1 || t.text == "," || t.text == "LEND" || t.text == "REND") {
                error(alpha_line.line, t, "alphabet symbols must be single characters other than ','");
                return;
            }
            if (symbols.find(t.text[0]) != std::string::npos) {
                error(alpha_line.line, t, "duplicate alphabet symbol '" + std::string(t.text) + "'");
                return;
            }
            symbols.push_back(t.text[0]);
        }
        if (symbols.empty()) {
            error(alpha_line.line, alpha_line.directive, "alphabet needs at least one symbol");
            return;
        }
        int max_step = 1;
        if (seen_.count("maxstep")) {
            const DirectiveLine &ms = seen_["maxstep"];
            if (ms.args.size() != 1 || !parse_int(ms.args[0].text, max_step) || max_step < 1) {
                error(ms.line, ms.directive, "maxstep needs one integer >= 1");
                return;
            }
        }
        MachineBuilder b(std::string((*name)[0].text), *cls, symbols, max_step);
        const DirectiveLine &states_line = seen_["states"];
        if (state_args->empty()) {
            error(states_line.line, states_line.directive, "states needs at least one identifier");
            return;
        }
        for (const Token &t : *state_args) {
            if (!is_identifier(t.text)) {
                error(states_line.line, t, "lexical error: invalid identifier '" + std::string(t.text) + "'");
                return;
            }
            if (b.find_state(t.text)) {
                error(states_line.line, t, "duplicate state '" + std::string(t.text) + "'");
                return;
            }
            b.add_state(std::string(t.text));
        }
        const DirectiveLine &init_line = seen_["initial"];
        if (initial_args->size() != 1) {
            error(init_line.line, init_line.directive, "initial needs exactly one state");
            return;
        }
        auto q0 = lookup_state(b, init_line.line, (*initial_args)[0]);
        if (!q0) {
            return;
        }
        b.set_initial(*q0);
        bool ok = true;
        if (seen_.count("accept")) {
            for (const Token &t : seen_["accept"].args) {
                auto q = lookup_state(b, seen_["accept"].line, t);
                ok = ok && q.has_value();
                if (q) {
                    b.set_accepting(*q);
                }
            }
        }
        if (seen_.count("neutral")) {
            for (const Token &t : seen_["neutral"].args) {
                auto q = lookup_state(b, seen_["neutral"].line, t);
                ok = ok && q.has_value();
                if (q) {
                    b.set_neutral(*q);
                }
            }
        }
        std::set<std::tuple<StateIndex, SymbolIndex, int, StateIndex, int>> keys;
        for (const PendingTransition &p : pending_) {
            ok = add_transition(b, *cls, p, keys) && ok;
        }
        if (!ok) {
            return;
        }
        CounterMachine machine = b.build();
        for (const Violation &v : validate_machine(machine)) {
            SourceSpan span = locate(machine, v.locus);
            diagnostics_.push_back({span, Severity::error, v.locus + ": " + v.message});
        }
        machine_ = std::move(machine);
    }

    static bool parse_int(std::string_view s, int &out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    }

    bool add_transition(MachineBuilder &b, MachineClass cls, const PendingTransition &p,
                        std::set<std::tuple<StateIndex, SymbolIndex, int, StateIndex, int>> &keys) {
        auto from = lookup_state(b, p.line, p.from);
        auto to = lookup_state(b, p.line, p.to);
        if (!from || !to) {
            return false;
        }
        SymbolIndex symbol;
        if (p.symbol.text == "LEND") {
            symbol = b.left_end();
        } else if (p.symbol.text == "REND") {
            symbol = b.right_end();
        } else if (p.symbol.text.size() == 1 && b.alphabet().index_of(p.symbol.text[0])) {
            symbol = *b.alphabet().index_of(p.symbol.text[0]);
        } else {
            error(p.line, p.symbol, "undeclared symbol '" + std::string(p.symbol.text) + "'");
            return false;
        }
        std::optional<CounterStatus> status;
        if (p.status.text == "Z") {
            status = CounterStatus::zero;
        } else if (p.status.text == "NZ") {
            status = CounterStatus::nonzero;
        } else if (p.status.text != "*") {
            error(p.line, p.status, "status must be Z, NZ or *");
            return false;
        }
        if (status && is_blind(cls)) {
            error(p.line, p.status, "blind machine cannot branch on status");
            return false;
        }
        int delta = 0;
        if (!parse_int(p.delta.text, delta)) {
            error(p.line, p.delta, "invalid delta '" + std::string(p.delta.text) + "'");
            return false;
        }
        Amplitude weight = 1;
        if (p.weight) {
            auto parsed = parse_amplitude(p.weight->text);
            if (!parsed) {
                error(p.line, *p.weight, "malformed amplitude '" + std::string(p.weight->text) + "'");
                return false;
            }
            if (!is_quantum(cls)) {
                if (!parsed->is_real_rational()) {
                    error(p.line, *p.weight, "weight '" + std::string(p.weight->text) + "' is not a rational");
                    return false;
                }
                const Rational &w = parsed->real().rational_part();
                if (sgn(w) < 0 || w > 1) {
                    error(p.line, *p.weight, "weight " + to_compact(w) + " outside [0,1]");
                    return false;
                }
            }
            weight = *parsed;
        }
        for (CounterStatus s : {CounterStatus::zero, CounterStatus::nonzero}) {
            if (status && *status != s) {
                continue;
            }
            auto key = std::make_tuple(*from, symbol, static_cast<int>(s), *to, delta);
            if (!keys.insert(key).second) {
                error(p.line, p.from.column, 1, "duplicate transition key");
                return false;
            }
            row_lines_.emplace(std::make_tuple(*from, symbol, static_cast<int>(s)), p.line);
        }
        b.add(*from, symbol, status, *to, delta, weight);
        return true;
    }

    SourceSpan locate(const CounterMachine &m, const std::string &locus) const {
        for (const auto &[key, line] : row_lines_) {
            auto [q, s, st] = key;
            std::string prefix = "(" + m.state_name(q) + ", " + m.alphabet().name(s);
            if (locus.rfind(prefix, 0) == 0) {
                return {line, 1, 5};
            }
        }
        auto it = seen_.find("machine");
        return {it == seen_.end() ? 1 : it->second.line, 1, 1};
    }

    struct DirectiveLine {
        std::size_t line = 1;
        std::vector<Token> args;
        Token directive{};
    };

    std::string_view text_;
    std::vector<ParseDiagnostic> diagnostics_;
    std::map<std::string, DirectiveLine> seen_;
    std::vector<PendingTransition> pending_;
    std::map<std::tuple<StateIndex, SymbolIndex, int>, std::size_t> row_lines_;
    std::optional<CounterMachine> machine_;
};

}  // namespace

std::optional<Amplitude> parse_amplitude(std::string_view text) {
    return AmplitudeReader(text).read();
}

std::string format_weight(const Amplitude &weight) {
    if (weight.is_real_rational()) {
        return to_compact(weight.real().rational_part());
    }
    return to_string(weight);
}

ParseResult parse(std::string_view text) {
    return Parser(text).run();
}

std::string emit(const CounterMachine &m) {
    std::ostringstream out;
    out << "machine " << m.name() << "\n";
    out << "class " << to_string(m.machine_class()) << "\n";
    out << "alphabet";
    for (char c : m.alphabet().symbols()) {
        out << ' ' << c;
    }
    out << "\nstates";
    for (StateIndex q = 0; q < m.num_states(); q++) {
        out << ' ' << m.state_name(q);
    }
    out << "\ninitial " << m.state_name(m.initial()) << "\naccept";
    for (StateIndex q : m.accepting_states()) {
        out << ' ' << m.state_name(q);
    }
    out << "\n";
    if (is_las_vegas(m.machine_class()) || !m.neutral_states().empty()) {
        out << "neutral";
        for (StateIndex q : m.neutral_states()) {
            out << ' ' << m.state_name(q);
        }
        out << "\n";
    }
    out << "maxstep " << m.max_step() << "\n";
    bool deterministic = is_deterministic(m.machine_class());
    auto write_row = [&](StateIndex q, SymbolIndex s, std::string_view status, std::span<const Transition> row) {
        for (const Transition &t : row) {
            out << "trans " << m.state_name(q) << " , " << m.alphabet().name(s) << " , " << status << " -> "
                << m.state_name(t.target) << " , " << t.delta;
            if (!(deterministic && t.weight == Amplitude(1))) {
                out << " @ " << format_weight(t.weight);
            }
            out << "\n";
        }
    };
    for (StateIndex q = 0; q < m.num_states(); q++) {
        for (SymbolIndex s = 0; s < m.alphabet().extended_size(); s++) {
            auto z = m.row(q, s, CounterStatus::zero);
            auto nz = m.row(q, s, CounterStatus::nonzero);
            if (std::ranges::equal(z, nz)) {
                write_row(q, s, "*", z);
            } else {
                write_row(q, s, "Z", z);
                write_row(q, s, "NZ", nz);
            }
        }
    }
    return out.str();
}

}  // namespace counterlab
