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

#include "thompson/charspace.hpp"

#include <algorithm>
#include <sstream>

#include "thompson/error.hpp"

namespace thompson {

Character::Character(int arity, std::vector<Rational> values) : values_(std::move(values)) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  require(static_cast<int>(values_.size()) == arity, ErrorCode::ArityMismatch,
          "character needs exactly n values");
}

Character Character::zero(int arity) {
  return Character(arity, std::vector<Rational>(static_cast<std::size_t>(std::max(arity, 0))));
}

const Rational& Character::at_generator(GeneratorIndex index) const {
  return values_[abelian_coordinate(arity(), index)];
}

bool Character::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

Character Character::operator+(const Character& other) const {
  require(arity() == other.arity(), ErrorCode::ArityMismatch, "characters have different arity");
  std::vector<Rational> out(values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.values_[i];
  return Character(arity(), std::move(out));
}

Character Character::scaled(const Rational& factor) const {
  std::vector<Rational> out(values_);
  for (Rational& v : out) v *= factor;
  return Character(arity(), std::move(out));
}

Character parse_character(int arity, std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(values.size()) != arity)
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(arity) +
                                         " character values, got " +
                                         std::to_string(values.size()));
  return Character(arity, std::move(values));
}

namespace {

Character normalized(const Character& chi) {
  require(!chi.is_zero(), ErrorCode::ZeroCharacter, "the zero character has no sphere point");
  for (const Rational& v : chi.values())
    if (v != 0) return chi.scaled(1 / abs(Rational(v)));
  fail(ErrorCode::InvariantViolation, "unreachable");
}

}  // namespace

SpherePoint::SpherePoint(const Character& chi) : rep_(normalized(chi)) {}

bool operator<(const SpherePoint& a, const SpherePoint& b) {
  const auto& x = a.rep_.values();
  const auto& y = b.rep_.values();
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Character chi1(int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  std::vector<Rational> v(static_cast<std::size_t>(arity));
  v[0] = -1;
  return Character(arity, std::move(v));
}

Character chi2(int arity) {
  return Character(arity, std::vector<Rational>(static_cast<std::size_t>(arity), Rational(1)));
}

Rational evaluate(const Character& chi, const GroupWord& word) {
  require(chi.arity() == word.arity(), ErrorCode::ArityMismatch,
          "character and word have different arity");
  const std::vector<std::int64_t> ab = abelianize(word);
  Rational out = 0;
  for (std::size_t i = 0; i < ab.size(); ++i)
    out += chi.values()[i] * static_cast<long>(ab[i]);
  return out;
}

bool in_sigma1(const Character& chi) {
  const SpherePoint p(chi);
  return !(p == SpherePoint(chi1(chi.arity())) || p == SpherePoint(chi2(chi.arity())));
}

bool in_sigma2_complement(const Character& chi) {
  require(!chi.is_zero(), ErrorCode::ZeroCharacter, "the zero character has no sphere point");
  const auto& v = chi.values();
  const Rational& b = v[1];
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] != b) return false;
  return b >= 0 && v[0] <= b;
}

bool in_sigma_m(const Character& chi, int m, bool assume_conjecture) {
  require(m >= 1, ErrorCode::InvalidArgument, "m must be >= 1");
  require(!chi.is_zero(), ErrorCode::ZeroCharacter, "the zero character has no sphere point");
  if (m == 1) return in_sigma1(chi);
  if (m >= 3 && chi.arity() >= 3 && !assume_conjecture)
    fail(ErrorCode::ConjectureRequired,
         "Sigma^m for n >= 3 and m >= 3 is only known under the conjectural description; "
         "pass assume_conjecture to use it");
  return !in_sigma2_complement(chi);
}

std::size_t rational_rank(std::span<const std::vector<std::int64_t>> rows, std::size_t columns) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    require(r.size() == columns, ErrorCode::InvalidArgument, "row has the wrong length");
    std::vector<Rational> q(columns);
    for (std::size_t j = 0; j < columns; ++j) q[j] = static_cast<long>(r[j]);
    m.push_back(std::move(q));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t j = col; j < columns; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

FinitenessReport kernel_finiteness(int arity, std::span<const std::vector<std::int64_t>> generators,
                                   int m_max, bool assume_conjecture) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  require(m_max >= 1, ErrorCode::InvalidArgument, "m_max must be >= 1");
  const auto n = static_cast<std::size_t>(arity);
  FinitenessReport report;

  // No nonzero character vanishes on a full-rank L: N has finite index in G.
  if (rational_rank(generators, n) == n) {
    report.finitely_generated = true;
    return report;
  }

  // Sigma^1: does chi_1 or chi_2 vanish on L?
  const bool chi1_vanishes =
      std::all_of(generators.begin(), generators.end(), [](const auto& u) { return u[0] == 0; });
  const bool chi2_vanishes = std::all_of(generators.begin(), generators.end(), [](const auto& u) {
    std::int64_t s = 0;
    for (std::int64_t x : u) s = checked_add(s, x);
    return s == 0;
  });
  if (chi1_vanishes || chi2_vanishes) {
    report.max_certified_type = 0;
    report.witness = chi1_vanishes ? chi1(arity) : chi2(arity);
    return report;
  }
  report.finitely_generated = true;
  if (m_max < 2) {
    report.max_certified_type = 1;
    report.complete = false;
    return report;
  }

  // Sigma^2: the complement lies in the plane {(a, b, ..., b)}. A point of that
  // plane vanishes on u iff a*u_0 + b*(u_1 + ... + u_{n-1}) = 0.
  std::vector<std::vector<std::int64_t>> plane_rows;
  for (const auto& u : generators) {
    std::int64_t tail = 0;
    for (std::size_t i = 1; i < n; ++i) tail = checked_add(tail, u[i]);
    plane_rows.push_back({u[0], tail});
  }
  const std::size_t plane_rank = rational_rank(plane_rows, 2);
  if (plane_rank == 0)
    fail(ErrorCode::InvariantViolation, "chi_1 and chi_2 vanish but were not detected");
  if (plane_rank == 1) {
    const auto row = *std::find_if(plane_rows.begin(), plane_rows.end(),
                                   [](const auto& r) { return r[0] != 0 || r[1] != 0; });
    for (int sign : {1, -1}) {
      const Rational a = static_cast<long>(sign * row[1]);
      const Rational b = static_cast<long>(-sign * row[0]);
      if (b >= 0 && a <= b) {
        std::vector<Rational> values(n, b);
        values[0] = a;
        report.max_certified_type = 1;
        report.witness = Character(arity, std::move(values));
        return report;
      }
    }
  }

  // Outside the wedge. For n = 2 Sigma^m = Sigma^2 for all m.
  if (arity == 2) return report;
  if (assume_conjecture) {
    report.assumed_conjecture = true;
    return report;
  }
  report.max_certified_type = 2;
  report.complete = false;
  return report;
}

}  // namespace thompson
