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

#include "counterlab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace counterlab {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction(const Rational &q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact(const Rational &q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return to_fraction(q);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        return std::nullopt;
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0) {
        return std::nullopt;
    }
    Rational q(num, den);
    q.canonicalize();
    if (negative) {
        q = -q;
    }
    return q;
}

Rational power(const Rational &base, unsigned exponent) {
    Rational result = 1;
    for (unsigned i = 0; i < exponent; i++) {
        result *= base;
    }
    return result;
}

}  // namespace counterlab
