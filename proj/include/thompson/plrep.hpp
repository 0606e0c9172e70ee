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

// F_{n,inf} as piecewise-linear homeomorphisms of [0,1] with slopes n^k and
// n-adic breakpoints. Used as an independent oracle for the word problem.
//
// Products act right-to-left: the word a b evaluates to a o b.

#include <vector>

#include "thompson/rational.hpp"
#include "thompson/words.hpp"

namespace thompson {

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

class PLMap {
 public:
  static PLMap identity(int arity);

  /// Validates endpoints (0,0) and (1,1), strict monotonicity and power-of-n
  /// slopes, then drops collinear interior breakpoints.
  PLMap(int arity, std::vector<Breakpoint> points);

  int arity() const noexcept { return arity_; }
  const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }

  Rational operator()(const Rational& t) const;
  Rational preimage(const Rational& t) const;

  /// Slope of each segment, left to right.
  std::vector<Rational> slopes() const;

  bool is_identity() const noexcept { return points_.size() == 2; }

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  struct Trusted {};
  PLMap(int arity, std::vector<Breakpoint> points, Trusted);

  friend PLMap compose(const PLMap&, const PLMap&);
  friend PLMap invert_map(const PLMap&);

  int arity_;
  std::vector<Breakpoint> points_;
};

/// The map of x_i. For i = k(n-1) + r (0 <= r < n-1) it is x_r conjugated
/// into [1 - n^-k, 1].
PLMap generator_map(int arity, GeneratorIndex index);

/// f o g.
PLMap compose(const PLMap& f, const PLMap& g);

PLMap invert_map(const PLMap& f);

PLMap evaluate_word(const GroupWord& word);

bool maps_equal(const PLMap& f, const PLMap& g);

}  // namespace thompson
