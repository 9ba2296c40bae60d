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

// Reading and writing the line-oriented `.cma` machine format.
//
//   machine <id>
//   class <d1ca|d1bca|p1ca|p1bca|n1bca|u1bca|q1ca|lv-p1ca|lv-p1bca>
//   alphabet <sym>+
//   states <id>+
//   initial <id>
//   accept <id>*
//   neutral <id>*
//   maxstep <int>
//   trans <state> , <sym|LEND|REND> , <Z|NZ|*> -> <state> , <delta> [@ <weight>]
//
// A line whose first non-blank character is `#` is a comment.

#ifndef COUNTERLAB_DSL_HPP
#define COUNTERLAB_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/machine.hpp"

namespace counterlab {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 1;
};

enum class Severity { error, warning };

struct ParseDiagnostic {
    SourceSpan span;
    Severity severity = Severity::error;
    std::string message;
};

/// "line:col: error: message".
std::string to_string(const ParseDiagnostic &d);

struct ParseResult {
    std::optional<CounterMachine> machine;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const {
        return machine.has_value();
    }
};

/// Parses `.cma` text. On success the machine passes validate_machine.
ParseResult parse(std::string_view text);

/// Canonical `.cma` rendering; parse(emit(m)) == m.
std::string emit(const CounterMachine &m);

/// Evaluates a weight expression such as "1/3", "-1/2 r2" or "(1/2 + 1/2 r2) - (1) i".
std::optional<Amplitude> parse_amplitude(std::string_view text);

/// Canonical text of a weight; classical machines print plain rationals.
std::string format_weight(const Amplitude &weight);

}  // namespace counterlab

#endif
