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

// Automorphisms phi and mu of F_{n,inf} acting on characters.
//
//   phi(x_0) = x_0, phi(x_i) = x_{i+1} (i >= 1)   -> matrix A
//   mu(x_0) = x_0^-1, mu_0(x_i) = x_{delta(i)} x_0^-1  -> matrix C
//
// Only the induced action on Hom(G, R) is modelled; mu is not realized on
// words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "thompson/charspace.hpp"
#include "thompson/words.hpp"

namespace thompson {

/// Square integer matrix acting on character value vectors.
class CharacterMatrix {
 public:
  CharacterMatrix(int arity, std::vector<std::int64_t> row_major);

  static CharacterMatrix identity(int arity);

  int arity() const noexcept { return arity_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const {
    return entries_[row * static_cast<std::size_t>(arity_) + col];
  }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  CharacterMatrix operator*(const CharacterMatrix& rhs) const;
  CharacterMatrix transposed() const;
  CharacterMatrix power(unsigned k) const;
  Rational determinant() const;

  friend bool operator==(const CharacterMatrix&, const CharacterMatrix&) = default;

 private:
  int arity_;
  std::vector<std::int64_t> entries_;
};

/// delta on {1, ..., n-1}: swaps i <-> n-i-2 for 1 <= i <= n-3 and
/// n-1 <-> n-2. Entry 0 is unused. For n = 2 the map is the identity.
std::vector<int> delta_from_swaps(int arity);

/// delta(i) = rho_0^{-i-1}(n-1), rho_0 the cycle (1, 2, ..., n-1).
std::vector<int> delta_from_cycle(int arity);

CharacterMatrix matrix_A(int arity);
CharacterMatrix matrix_C(int arity);

Character apply(const CharacterMatrix& m, const Character& chi);

/// Least k in [1, cap] with m^k = I.
std::optional<int> order_of(const CharacterMatrix& m, int cap);

/// phi^k on words; k must be >= 0.
GroupWord phi_on_word(const GroupWord& word, int k);

/// rho_0 = A^{n-3} C rho for rho(x_0) = rho(x_{n-1}); checks rho_0(x_1) = 0.
Character reduction_identity_check(const Character& rho);

/// Closure of {p} under A, A^-1 and C, sorted. ResourceLimit beyond `cap` points.
std::vector<SpherePoint> d_orbit(const SpherePoint& p, std::size_t cap);

}  // namespace thompson
