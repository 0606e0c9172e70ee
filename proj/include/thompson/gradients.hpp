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

// Rank, deficiency and chi_m gradients along chains of finite-index
// subgroups, reported as exact rational intervals per chain term.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thompson/complexes.hpp"
#include "thompson/lattices.hpp"
#include "thompson/rational.hpp"

namespace thompson {

enum class GradientKind { RG, DG, CHI };

/// upper = constant + d0_coefficient * d0. The coefficient is zero unless the
/// bound depends on the unknown d0.
struct GradientRow {
  int s = 0;
  std::int64_t index = 1;
  Rational lower;
  Rational upper;
  Rational upper_d0;

  bool symbolic() const { return upper_d0 != 0; }
  std::string render_upper() const;
};

struct GradientSeries {
  GradientKind kind = GradientKind::RG;
  std::size_t m = 0;  // CHI only
  std::vector<GradientRow> rows;
};

/// Rows for s = 0..steps. Explicit chains default to all of their terms.
GradientSeries rank_gradient_series(const ChainSpec& spec, std::optional<int> steps = std::nullopt,
                                    std::optional<std::int64_t> d0 = std::nullopt);
GradientSeries deficiency_gradient_series(const ChainSpec& spec,
                                          std::optional<int> steps = std::nullopt);
GradientSeries chi_m_gradient_series(const ChainSpec& spec, std::size_t m,
                                     std::optional<int> steps = std::nullopt);

struct Certificate {
  bool certified = false;
  std::optional<int> first_s;  // every row from here on has max(|lower|, |upper|) <= eps
};

/// Symbolic rows never certify. SeriesTooShort on an empty series.
Certificate certify_convergence(const GradientSeries& series, const Rational& eps);

}  // namespace thompson
