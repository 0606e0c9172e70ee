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

// Cell counts r(H, j) of K(H,1) complexes and the bounds derived from them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thompson/lattices.hpp"

namespace thompson {

/// r(j) = a * j + b for every j >= from.
struct AffineTail {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::size_t from = 0;

  std::int64_t operator()(std::size_t j) const;
  friend bool operator==(const AffineTail&, const AffineTail&) = default;
};

/// Explicit counts r(0..len-1) plus an optional affine rule beyond. Without
/// a tail the vector is truncated: entries past the explicit part are unknown.
class CellVector {
 public:
  /// Validates counts[0] >= 1, nonnegativity and tail consistency.
  CellVector(std::vector<std::int64_t> counts, std::optional<AffineTail> tail);

  /// Zero beyond the given counts.
  static CellVector finite(std::vector<std::int64_t> counts);
  /// Unknown beyond the given counts.
  static CellVector truncated(std::vector<std::int64_t> counts);

  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  const std::optional<AffineTail>& tail() const noexcept { return tail_; }

  std::optional<std::int64_t> at(std::size_t j) const;
  /// Throws Precondition when r(j) is unknown.
  std::int64_t value(std::size_t j) const;
  /// r(0..m); throws Precondition when any entry is unknown.
  std::vector<std::int64_t> materialize(std::size_t m) const;

  friend bool operator==(const CellVector&, const CellVector&) = default;

 private:
  struct Unchecked {};
  CellVector(Unchecked, std::vector<std::int64_t> counts, std::optional<AffineTail> tail)
      : counts_(std::move(counts)), tail_(tail) {}

  std::vector<std::int64_t> counts_;
  std::optional<AffineTail> tail_;
};

/// r(B, j) = r(T, j) + r(T, j-1).
CellVector hnn_cells(const CellVector& base);

/// r(j) = sum_{i<=j} rN(i) rQ(j-i). Quadratic growth has no affine tail; the
/// result is then truncated after r(truncation).
CellVector stack_cells(const CellVector& fibre, const CellVector& quotient,
                       std::size_t truncation = 16);

/// r(j) = sum_v rV(j) + sum_e rE(j-1). Needs at least one vertex.
CellVector graph_of_groups_cells(std::span<const CellVector> vertices,
                                 std::span<const CellVector> edges);

/// (1, 2, 2, 2, ...).
CellVector thompson_f_complex();

/// The k-torus: C(k, j).
CellVector binomial_cells(int k);

/// (1, 1, 1, ...), the cells used for a finite cyclic quotient.
CellVector constant_one_cells();

enum class FCase { ContainsM, ConjugateContainsM, Recursive };

const char* to_string(FCase c) noexcept;

struct SubgroupCells {
  CellVector cells;
  FCase case_tag;
};

/// n = 2 only. Case tests: e_1 in L, then (1,-1) in L, otherwise recurse once
/// through H cap M.
SubgroupCells cells_for_subgroup_F(const SubgroupLattice& lattice, std::size_t truncation = 16);

/// Alternating sum sum_{i<=m} (-1)^{m-i} r(i). InvariantViolation if negative.
std::int64_t chi_m(const CellVector& cells, std::size_t m);

struct DeficiencyBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// lower = 1 - r0 + r1 - r2, upper = n.
DeficiencyBounds deficiency_bounds(const CellVector& cells, int arity);

/// constant, or constant + d0 when plus_d0.
struct GeneratorBound {
  std::int64_t constant = 0;
  bool plus_d0 = false;

  std::string render() const;
  friend bool operator==(const GeneratorBound&, const GeneratorBound&) = default;
};

enum class BoundCase { ContainsM, ConjugateContainsM, Recursive, ContainsMGeneral, GenericD0 };

const char* to_string(BoundCase c) noexcept;

struct BoundReport {
  GeneratorBound d_upper;
  BoundCase case_tag = BoundCase::GenericD0;
  std::optional<std::int64_t> def_lower;  // needs a cell vector (n = 2)
  std::int64_t def_upper = 0;
  std::vector<std::int64_t> chi_values;   // chi_0 .. chi_max_m, n = 2 only
};

BoundReport d_bound(const SubgroupLattice& lattice, std::size_t max_chi_m = 2);

}  // namespace thompson
