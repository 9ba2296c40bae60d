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

#ifndef COUNTERLAB_RATIONAL_HPP
#define COUNTERLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace counterlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(long num, long den = 1);

/// "p/q" in lowest terms, always with a denominator ("1/1", "0/1").
std::string to_fraction(const Rational &q);

/// Like to_fraction but integers print without "/1".
std::string to_compact(const Rational &q);

/// Parses "p", "-p", "p/q" or "-p/q". Returns nullopt on malformed text or q = 0.
std::optional<Rational> parse_rational(std::string_view text);

/// base^exponent for a small nonnegative exponent.
Rational power(const Rational &base, unsigned exponent);

}  // namespace counterlab

#endif
