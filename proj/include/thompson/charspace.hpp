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

// Characters Hom(G, R) = R^n, the character sphere, and Sigma-invariant
// membership for G = F_{n,inf}.
//
//   Sigma^1(G)^c = { [chi_1], [chi_2] }
//   Sigma^2(G)^c = conv{ [chi_1], [chi_2] } = { (r2 - r1, r2, ..., r2) : r1, r2 >= 0 }
//   Sigma^m(G) = Sigma^2(G) for every m >= 2 when n = 2; for n >= 3 and m >= 3
//   this is only known under an explicit assumption (assume_conjecture).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thompson/rational.hpp"
#include "thompson/words.hpp"

namespace thompson {

class Character {
 public:
  Character(int arity, std::vector<Rational> values);

  static Character zero(int arity);

  int arity() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  /// chi(x_i) for any generator index, using chi(x_{i+n-1}) = chi(x_i), i >= 1.
  const Rational& at_generator(GeneratorIndex index) const;

  bool is_zero() const;

  Character operator+(const Character& other) const;
  Character scaled(const Rational& factor) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::vector<Rational> values_;
};

/// Comma-separated rationals, e.g. "-1,0" or "1/2,3".
Character parse_character(int arity, std::string_view text);

/// A point [chi] of the character sphere. The stored representative has
/// first nonzero coordinate equal to +1 or -1.
class SpherePoint {
 public:
  explicit SpherePoint(const Character& chi);

  const Character& representative() const noexcept { return rep_; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
  friend bool operator<(const SpherePoint& a, const SpherePoint& b);

 private:
  Character rep_;
};

Character chi1(int arity);
Character chi2(int arity);

Rational evaluate(const Character& chi, const GroupWord& word);

bool in_sigma1(const Character& chi);

/// m = 1 defers to in_sigma1. For m >= 2 tests the complement of the wedge
/// spanned by chi_1, chi_2. Throws ConjectureRequired when n >= 3, m >= 3 and
/// assume_conjecture is false.
bool in_sigma_m(const Character& chi, int m, bool assume_conjecture = false);

/// True iff [chi] lies in the closed wedge conv{[chi_1],[chi_2]}.
bool in_sigma2_complement(const Character& chi);

struct FinitenessReport {
  bool finitely_generated = false;
  /// nullopt means "infinity" (type F_m for every m).
  std::optional<int> max_certified_type;
  /// A vanishing character outside Sigma^{max+1}; present exactly when the
  /// type was pinned down (the subgroup is F_max but not F_{max+1}).
  std::optional<Character> witness;
  bool assumed_conjecture = false;
  /// False when the decision stopped at m_max or at the conjecture boundary
  /// without a witness; max_certified_type is then only a lower bound.
  bool complete = true;
};

/// Finiteness type of N = pi^-1(L) where L is the subgroup of Z^n = G/G'
/// spanned by `generators` (any rank). N is F_m iff every nonzero character
/// vanishing on L lies in Sigma^m.
FinitenessReport kernel_finiteness(int arity, std::span<const std::vector<std::int64_t>> generators,
                                   int m_max = 16, bool assume_conjecture = false);

/// Rank over Q of a list of integer vectors of length `columns`.
std::size_t rational_rank(std::span<const std::vector<std::int64_t>> rows, std::size_t columns);

}  // namespace thompson
