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

#ifndef COUNTERLAB_CORE_HPP
#define COUNTERLAB_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "counterlab/amplitude.hpp"
#include "counterlab/rational.hpp"

namespace counterlab {

enum class MachineClass { d1ca, d1bca, p1ca, p1bca, n1bca, u1bca, q1ca, lv_p1ca, lv_p1bca };

/// DSL spelling, e.g. "lv-p1bca".
std::string_view to_string(MachineClass cls);
std::optional<MachineClass> parse_machine_class(std::string_view text);

bool is_blind(MachineClass cls);
bool is_deterministic(MachineClass cls);
bool is_las_vegas(MachineClass cls);
bool is_quantum(MachineClass cls);

enum class CounterStatus : std::uint8_t { zero = 0, nonzero = 1 };

CounterStatus status_of(const Integer &counter);
inline CounterStatus status_of(long counter) {
    return counter == 0 ? CounterStatus::zero : CounterStatus::nonzero;
}
/// "Z" or "NZ".
std::string_view to_string(CounterStatus status);

using StateIndex = std::uint32_t;
using SymbolIndex = std::uint32_t;

struct Configuration {
    StateIndex state = 0;
    Integer counter;

    friend bool operator==(const Configuration &x, const Configuration &y) {
        return x.state == y.state && x.counter == y.counter;
    }
    friend bool operator<(const Configuration &x, const Configuration &y) {
        if (x.state != y.state) {
            return x.state < y.state;
        }
        return cmp(x.counter, y.counter) < 0;
    }
};

struct Verdict {
    Rational accept;
    Rational reject;
    Rational dontknow;

    friend bool operator==(const Verdict &x, const Verdict &y) {
        return x.accept == y.accept && x.reject == y.reject && x.dontknow == y.dontknow;
    }
};

/// `accept=p/q reject=r/s dontknow=u/v`.
std::string to_string(const Verdict &v);

enum class Outcome { accept, reject, dontknow };
std::string_view to_string(Outcome outcome);

/// Input alphabet: single printable characters, in declaration order.
/// Symbol indices: 0 is the left endmarker, 1..|Sigma| the input symbols, |Sigma|+1 the right endmarker.
class Alphabet {
   public:
    Alphabet() = default;
    /// Throws std::invalid_argument on duplicates, blanks or ','.
    explicit Alphabet(std::string symbols);

    static constexpr SymbolIndex left_end = 0;
    SymbolIndex right_end() const {
        return static_cast<SymbolIndex>(symbols_.size() + 1);
    }
    std::size_t size() const {
        return symbols_.size();
    }
    std::size_t extended_size() const {
        return symbols_.size() + 2;
    }
    const std::string &symbols() const {
        return symbols_;
    }
    std::optional<SymbolIndex> index_of(char c) const;
    /// Throws std::out_of_range for endmarkers or unknown indices.
    char symbol(SymbolIndex index) const;
    /// "LEND", "REND" or the symbol itself.
    std::string name(SymbolIndex index) const;

    friend bool operator==(const Alphabet &x, const Alphabet &y) {
        return x.symbols_ == y.symbols_;
    }

   private:
    std::string symbols_;
};

/// Raised when an input string contains a character outside the alphabet.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an engine is handed a machine of the wrong class.
class EngineError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Encodes raw input as the endmarked tape LEND raw REND.
std::vector<SymbolIndex> encode_tape(const Alphabet &alphabet, std::string_view raw);

}  // namespace counterlab

#endif
