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

#include "thompson/rational.hpp"

#include <cctype>

#include "thompson/error.hpp"

namespace thompson {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ArityMismatch: return "arity mismatch";
    case ErrorCode::ZeroCharacter: return "zero character";
    case ErrorCode::ConjectureRequired: return "conjecture required";
    case ErrorCode::ResourceLimit: return "resource limit";
    case ErrorCode::Precondition: return "precondition violated";
    case ErrorCode::InvariantViolation: return "invariant violation";
    case ErrorCode::ChainExhausted: return "chain exhausted";
    case ErrorCode::SeriesTooShort: return "series too short";
  }
  return "unknown error";
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    fail(ErrorCode::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
  BigInt d = parse_integer(den);
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational out(parse_integer(num), d);
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer_power(const Rational& value, int base) {
  if (value <= 0 || base < 2) return false;
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  // At most one of num, den differs from 1 for a power of base.
  if (num != 1 && den != 1) return false;
  BigInt rest = num != 1 ? num : den;
  while (rest != 1) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(base)) == 0)
      return false;
    rest /= base;
  }
  return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::ResourceLimit, "64-bit overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::ResourceLimit, "64-bit overflow");
  return out;
}

}  // namespace thompson
