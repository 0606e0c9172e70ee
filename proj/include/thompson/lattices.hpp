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

// Finite-index subgroups G' <= H <= G = F_{n,inf} as full-rank sublattices
// L of G/G' = Z^n, stored in row Hermite normal form: upper triangular,
// positive pivots, entries above each pivot reduced into [0, pivot).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "thompson/charspace.hpp"

namespace thompson {

using IntVector = std::vector<std::int64_t>;

class SubgroupLattice {
 public:
  /// Hermite normal form of the lattice spanned by `rows` (any number of
  /// rows, each of length n). Throws InvalidArgument on rank < n.
  static SubgroupLattice from_rows(int arity, std::span<const IntVector> rows);

  int arity() const noexcept { return arity_; }
  /// Row-major n x n HNF basis.
  const std::vector<std::int64_t>& basis() const noexcept { return basis_; }
  std::int64_t entry(std::size_t row, std::size_t col) const {
    return basis_[row * static_cast<std::size_t>(arity_) + col];
  }
  std::vector<IntVector> rows() const;

  bool contains(std::span<const std::int64_t> v) const;

  friend bool operator==(const SubgroupLattice&, const SubgroupLattice&) = default;
  friend auto operator<=>(const SubgroupLattice&, const SubgroupLattice&) = default;

 private:
  SubgroupLattice(int arity, std::vector<std::int64_t> basis)
      : arity_(arity), basis_(std::move(basis)) {}

  int arity_;
  std::vector<std::int64_t> basis_;
};

SubgroupLattice hnf(int arity, std::span<const IntVector> rows);

/// [G : H] = |det|.
std::int64_t index(const SubgroupLattice& lattice);

/// Least alpha > 0 with x_0^alpha in H, i.e. alpha * e_0 in L.
std::int64_t alpha(const SubgroupLattice& lattice);

/// A lattice written in the abelianization of M = <x_1, ..., x_n>, with
/// coordinate k standing for the image of x_{k+1}.
struct MLattice {
  SubgroupLattice lattice;
};

/// Image of H cap M in M/M'. Since x_n is conjugate to x_1, M/M' -> G/G'
/// sends e_k -> e_{k+1} (k < n-1) and e_{n-1} -> e_1; H cap M is the
/// preimage of L.
MLattice intersect_with_M(const SubgroupLattice& lattice);

/// theta: M -> G, x_i -> x_{i-1}. In the coordinates above this is the
/// identity on vectors.
SubgroupLattice theta_shift(const MLattice& lattice);

/// rho = (chi restricted to M) o theta^-1, i.e. rho(x_i) = chi(x_{i+1}).
Character restrict_character(const Character& chi);

/// Every HNF lattice with 1 <= index <= max_index, each once, in a fixed
/// order. ResourceLimit when more than `cap` lattices would be produced.
std::vector<SubgroupLattice> enumerate_subgroups(int arity, std::int64_t max_index,
                                                 std::size_t cap = 5'000'000);

struct ChainSpec {
  enum class Kind { Scaling, Coordinate, Explicit };

  Kind kind = Kind::Scaling;
  int arity = 2;
  std::int64_t prime = 2;  // base p for Scaling / Coordinate
  std::vector<SubgroupLattice> terms;  // Explicit only

  static ChainSpec scaling(int arity, std::int64_t p);
  static ChainSpec coordinate(int arity, std::int64_t p);
  static ChainSpec explicit_list(std::vector<SubgroupLattice> terms);
};

/// "scaling:p", "coordinate:p" or "explicit:<rows>;<rows>;..." where each
/// <rows> is a comma-separated row-major matrix.
ChainSpec parse_chain(int arity, std::string_view text);

/// Term s (s >= 0). Scaling: p^s Z^n. Coordinate: p^s Z + Z^{n-1}.
SubgroupLattice chain_term(const ChainSpec& spec, int s);

/// Parses a comma-separated row-major list of integers into rows of length n.
std::vector<IntVector> parse_rows(int arity, std::string_view text);

}  // namespace thompson
