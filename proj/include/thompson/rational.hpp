// Copyright 2026 The thompson-gradients Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thompson {

/// Exact rational number; always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p", "p/q". Throws InvalidArgument on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// Always "p/q", even for integers ("3/1", "0/1").
std::string to_fraction_string(const Rational& value);

/// Exact test for value == base^k with k an integer (possibly negative).
bool is_integer_power(const Rational& value, int base);

/// Checked 64-bit arithmetic; overflow raises ResourceLimit.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace thompson
