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

// Word arithmetic in F_{n,inf} = < x_0, x_1, ... | x_j^-1 x_i x_j = x_{i+n-1}, i > j >.
//
// Words are rewritten by pushing small indices to the left:
//   x_i^e  x_j^d  ->  x_j^d x_{i+n-1}^e      (i > j)
//   x_j^-1 x_i    ->  x_{i+n-1} x_j^-1       (i > j)
//   x_a^-1 x_b^-1 ->  x_{b+n-1}^-1 x_a^-1    (b > a)
// together with free cancellation. Every word reaches a seminormal form
//   x_{p_1} ... x_{p_k} x_{q_1}^-1 ... x_{q_l}^-1,  p non-decreasing, q non-increasing.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

using GeneratorIndex = std::uint32_t;

struct Letter {
  GeneratorIndex index = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
 public:
  explicit GroupWord(int arity);
  GroupWord(int arity, std::vector<Letter> letters);

  static GroupWord generator(int arity, GeneratorIndex index, int exponent = 1);

  int arity() const noexcept { return arity_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Free concatenation, no rewriting.
  GroupWord concat(const GroupWord& other) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  int arity_;
  std::vector<Letter> letters_;
};

class SeminormalForm {
 public:
  explicit SeminormalForm(int arity);
  SeminormalForm(int arity, std::vector<GeneratorIndex> positive,
                 std::vector<GeneratorIndex> negative);

  int arity() const noexcept { return arity_; }
  /// Non-decreasing indices of the positive letters.
  const std::vector<GeneratorIndex>& positive() const noexcept { return positive_; }
  /// Non-increasing indices of the inverse letters, in word order.
  const std::vector<GeneratorIndex>& negative() const noexcept { return negative_; }
  bool empty() const noexcept { return positive_.empty() && negative_.empty(); }

  GroupWord to_word() const;

  friend bool operator==(const SeminormalForm&, const SeminormalForm&) = default;

 private:
  friend class Rewriter;
  int arity_;
  std::vector<GeneratorIndex> positive_;
  std::vector<GeneratorIndex> negative_;
};

struct RewriteLimits {
  /// Generator indices above this raise ResourceLimit.
  std::uint64_t max_index = std::uint64_t{1} << 16;
};

/// Parses "x0 x1^-1 x3^2". Empty / whitespace-only text is the identity.
GroupWord parse_word(int arity, std::string_view text);

std::string to_string(const GroupWord& word);
std::string to_string(const SeminormalForm& form);

SeminormalForm rewrite_to_seminormal(const GroupWord& word,
                                     const RewriteLimits& limits = {});

SeminormalForm multiply(const SeminormalForm& u, const SeminormalForm& v,
                        const RewriteLimits& limits = {});

GroupWord invert(const GroupWord& word);

/// Exponent-sum vector in G/G' = Z^n; x_i (i >= 1) folds onto
/// coordinate 1 + (i-1) mod (n-1).
std::vector<std::int64_t> abelianize(const GroupWord& word);

/// Coordinate of G/G' that x_i maps to.
std::size_t abelian_coordinate(int arity, GeneratorIndex index);

/// Seminormal form with every removable pair x_i ... x_i^-1 across the middle
/// eliminated. A pair is removable when no letter strictly between them has
/// index in [i+1, i+n-1]; removal lowers the enclosed indices by n-1.
SeminormalForm reduce(const SeminormalForm& form);

SeminormalForm normal_form(const GroupWord& word, const RewriteLimits& limits = {});

bool are_equal(const GroupWord& u, const GroupWord& v,
               const RewriteLimits& limits = {});

}  // namespace thompson
