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

#include "thompson/gradients.hpp"

#include <cstdlib>

#include "thompson/error.hpp"

namespace thompson {

namespace {

std::vector<SubgroupLattice> chain_terms(const ChainSpec& spec, std::optional<int> steps) {
  int last = 0;
  if (steps) {
    require(*steps >= 0, ErrorCode::InvalidArgument, "steps must be >= 0");
    last = *steps;
  } else if (spec.kind == ChainSpec::Kind::Explicit) {
    last = static_cast<int>(spec.terms.size()) - 1;
  } else {
    last = 10;
  }
  std::vector<SubgroupLattice> terms;
  for (int s = 0; s <= last; ++s) {
    terms.push_back(chain_term(spec, s));
    if (s > 0 && index(terms[static_cast<std::size_t>(s)]) <= index(terms[static_cast<std::size_t>(s - 1)]))
      fail(ErrorCode::InvalidArgument, "chain indices must increase strictly");
  }
  return terms;
}

// Index 1 is F itself with its own complex; proper subgroups use the case counts.
CellVector cells_for_term(const SubgroupLattice& l) {
  if (index(l) == 1) return thompson_f_complex();
  return cells_for_subgroup_F(l).cells;
}

void require_n2(const ChainSpec& spec) {
  require(spec.arity == 2, ErrorCode::ArityMismatch, "explicit cell counts need n = 2");
}

}  // namespace

std::string GradientRow::render_upper() const {
  if (!symbolic()) return to_fraction_string(upper);
  const Rational numerator = upper / upper_d0;
  const Rational denominator = 1 / upper_d0;
  return "(" + numerator.get_str() + "+d0)/" + denominator.get_str();
}

GradientSeries rank_gradient_series(const ChainSpec& spec, std::optional<int> steps,
                                    std::optional<std::int64_t> d0) {
  if (d0) require(*d0 >= 1, ErrorCode::InvalidArgument, "d0 must be >= 1");
  GradientSeries series{GradientKind::RG, 0, {}};
  const auto terms = chain_terms(spec, steps);
  for (std::size_t s = 0; s < terms.size(); ++s) {
    const std::int64_t idx = index(terms[s]);
    GeneratorBound d{spec.arity, false};
    if (idx != 1) d = d_bound(terms[s], 0).d_upper;
    GradientRow row{static_cast<int>(s), idx, Rational(0), Rational(d.constant - 1, idx), Rational(0)};
    row.upper.canonicalize();
    if (d.plus_d0) {
      if (d0) {
        row.upper += Rational(*d0, idx);
        row.upper.canonicalize();
      } else {
        row.upper_d0 = Rational(1, idx);
        row.upper_d0.canonicalize();
      }
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

GradientSeries deficiency_gradient_series(const ChainSpec& spec, std::optional<int> steps) {
  require_n2(spec);
  GradientSeries series{GradientKind::DG, 0, {}};
  const auto terms = chain_terms(spec, steps);
  for (std::size_t s = 0; s < terms.size(); ++s) {
    const std::int64_t idx = index(terms[s]);
    const DeficiencyBounds b = deficiency_bounds(cells_for_term(terms[s]), spec.arity);
    GradientRow row{static_cast<int>(s), idx, Rational(b.lower, idx), Rational(b.upper, idx), Rational(0)};
    row.lower.canonicalize();
    row.upper.canonicalize();
    series.rows.push_back(std::move(row));
  }
  return series;
}

GradientSeries chi_m_gradient_series(const ChainSpec& spec, std::size_t m, std::optional<int> steps) {
  require_n2(spec);
  GradientSeries series{GradientKind::CHI, m, {}};
  const auto terms = chain_terms(spec, steps);
  for (std::size_t s = 0; s < terms.size(); ++s) {
    const std::int64_t idx = index(terms[s]);
    GradientRow row{static_cast<int>(s), idx, Rational(0),
                    Rational(chi_m(cells_for_term(terms[s]), m), idx), Rational(0)};
    row.upper.canonicalize();
    series.rows.push_back(std::move(row));
  }
  return series;
}

Certificate certify_convergence(const GradientSeries& series, const Rational& eps) {
  require(!series.rows.empty(), ErrorCode::SeriesTooShort, "cannot certify an empty series");
  require(eps >= 0, ErrorCode::InvalidArgument, "epsilon must be >= 0");
  Certificate cert;
  for (auto it = series.rows.rbegin(); it != series.rows.rend(); ++it) {
    if (it->symbolic() || abs(it->lower) > eps || abs(it->upper) > eps) break;
    cert.first_s = it->s;
  }
  cert.certified = cert.first_s.has_value();
  return cert;
}

}  // namespace thompson
