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

#include "counterlab/core.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace counterlab {

namespace {

constexpr std::array<std::pair<MachineClass, std::string_view>, 9> kClassNames{{
    {MachineClass::d1ca, "d1ca"},
    {MachineClass::d1bca, "d1bca"},
    {MachineClass::p1ca, "p1ca"},
    {MachineClass::p1bca, "p1bca"},
    {MachineClass::n1bca, "n1bca"},
    {MachineClass::u1bca, "u1bca"},
    {MachineClass::q1ca, "q1ca"},
    {MachineClass::lv_p1ca, "lv-p1ca"},
    {MachineClass::lv_p1bca, "lv-p1bca"},
}};

std::string inner_string(const QSqrt2 &x) {
    const Rational &a = x.rational_part();
    const Rational &b = x.sqrt2_part();
    if (sgn(b) == 0) {
        return to_compact(a);
    }
    if (sgn(a) == 0) {
        return to_compact(b) + " r2";
    }
    Rational magnitude = abs(b);
    return to_compact(a) + (sgn(b) < 0 ? " - " : " + ") + to_compact(magnitude) + " r2";
}

}  // namespace

std::string_view to_string(MachineClass cls) {
    for (const auto &[c, name] : kClassNames) {
        if (c == cls) {
            return name;
        }
    }
    return "?";
}

std::optional<MachineClass> parse_machine_class(std::string_view text) {
    for (const auto &[c, name] : kClassNames) {
        if (name == text) {
            return c;
        }
    }
    return std::nullopt;
}

bool is_blind(MachineClass cls) {
    switch (cls) {
        case MachineClass::d1bca:
        case MachineClass::p1bca:
        case MachineClass::n1bca:
        case MachineClass::u1bca:
        case MachineClass::lv_p1bca:
            return true;
        default:
            return false;
    }
}

bool is_deterministic(MachineClass cls) {
    return cls == MachineClass::d1ca || cls == MachineClass::d1bca;
}

bool is_las_vegas(MachineClass cls) {
    return cls == MachineClass::lv_p1ca || cls == MachineClass::lv_p1bca;
}

bool is_quantum(MachineClass cls) {
    return cls == MachineClass::q1ca;
}

CounterStatus status_of(const Integer &counter) {
    return sgn(counter) == 0 ? CounterStatus::zero : CounterStatus::nonzero;
}

std::string_view to_string(CounterStatus status) {
    return status == CounterStatus::zero ? "Z" : "NZ";
}

std::string to_string(const Verdict &v) {
    return "accept=" + to_fraction(v.accept) + " reject=" + to_fraction(v.reject) + " dontknow=" +
           to_fraction(v.dontknow);
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::accept:
            return "accept";
        case Outcome::reject:
            return "reject";
        default:
            return "dontknow";
    }
}

std::string to_string(const QSqrt2 &x) {
    if (sgn(x.rational_part()) == 0 || sgn(x.sqrt2_part()) == 0) {
        return inner_string(x);
    }
    return "(" + inner_string(x) + ")";
}

std::string to_string(const Amplitude &x) {
    if (x.imag().is_zero()) {
        return to_string(x.real());
    }
    std::string imag = "(" + inner_string(x.imag()) + ") i";
    if (x.real().is_zero()) {
        return imag;
    }
    return to_string(x.real()) + " + " + imag;
}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); i++) {
        unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (!std::isgraph(c) || c == ',') {
            throw std::invalid_argument(std::string("invalid alphabet symbol '") + symbols_[i] + "'");
        }
        if (symbols_.find(symbols_[i]) != i) {
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        }
    }
}

std::optional<SymbolIndex> Alphabet::index_of(char c) const {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos) {
        return std::nullopt;
    }
    return static_cast<SymbolIndex>(pos + 1);
}

char Alphabet::symbol(SymbolIndex index) const {
    if (index == left_end || index >= right_end()) {
        throw std::out_of_range("not an input symbol index");
    }
    return symbols_[index - 1];
}

std::string Alphabet::name(SymbolIndex index) const {
    if (index == left_end) {
        return "LEND";
    }
    if (index == right_end()) {
        return "REND";
    }
    return std::string(1, symbol(index));
}

std::vector<SymbolIndex> encode_tape(const Alphabet &alphabet, std::string_view raw) {
    std::vector<SymbolIndex> tape;
    tape.reserve(raw.size() + 2);
    tape.push_back(Alphabet::left_end);
    for (char c : raw) {
        auto index = alphabet.index_of(c);
        if (!index) {
            throw InputError(std::string("input symbol '") + c + "' is not in the alphabet");
        }
        tape.push_back(*index);
    }
    tape.push_back(alphabet.right_end());
    return tape;
}

}  // namespace counterlab
