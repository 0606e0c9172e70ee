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

#include "thompson/complexes.hpp"

#include <algorithm>
#include <functional>

#include "thompson/error.hpp"

namespace thompson {

namespace {

// Same shape as CellVector without its invariants; shifted edge terms start at 0.
struct Seq {
  std::vector<std::int64_t> counts;
  std::optional<AffineTail> tail;

  std::optional<std::int64_t> at(std::size_t j) const {
    if (j < counts.size()) return counts[j];
    if (tail && j >= tail->from) return (*tail)(j);
    return std::nullopt;
  }
};

Seq as_seq(const CellVector& v) { return Seq{v.counts(), v.tail()}; }

bool is_zero_tail(const std::optional<AffineTail>& t) { return t && t->a == 0 && t->b == 0; }

// Explicit entries 0..len-1 plus tail, stopping at the first unknown entry.
Seq build(std::size_t len, const std::optional<AffineTail>& tail,
          const std::function<std::optional<std::int64_t>(std::size_t)>& value) {
  Seq out{{}, tail};
  for (std::size_t j = 0; j < len; ++j) {
    auto v = value(j);
    if (!v) {
      out.tail.reset();
      break;
    }
    out.counts.push_back(*v);
  }
  return out;
}

Seq add(const Seq& x, const Seq& y) {
  std::optional<AffineTail> tail;
  if (x.tail && y.tail)
    tail = AffineTail{checked_add(x.tail->a, y.tail->a), checked_add(x.tail->b, y.tail->b),
                      std::max(x.tail->from, y.tail->from)};
  std::size_t len = std::max(x.counts.size(), y.counts.size());
  if (tail) len = std::max(len, tail->from);
  return build(len, tail, [&](std::size_t j) -> std::optional<std::int64_t> {
    auto a = x.at(j);
    auto b = y.at(j);
    if (!a || !b) return std::nullopt;
    return checked_add(*a, *b);
  });
}

Seq shift(const Seq& x) {
  Seq out{{0}, std::nullopt};
  out.counts.insert(out.counts.end(), x.counts.begin(), x.counts.end());
  if (x.tail) out.tail = AffineTail{x.tail->a, checked_add(x.tail->b, -x.tail->a), x.tail->from + 1};
  return out;
}

std::optional<std::int64_t> convolve_at(const Seq& n, const Seq& q, std::size_t j) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i <= j; ++i) {
    auto a = n.at(i);
    auto b = q.at(j - i);
    if (!a || !b) return std::nullopt;
    sum = checked_add(sum, checked_mul(*a, *b));
  }
  return sum;
}

std::int64_t sum_below(const Seq& x, std::size_t end) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < end; ++k) s = checked_add(s, *x.at(k));
  return s;
}

// Tail of finite * affine: sum_{k<jF} F(k) (a (j-k) + b).
AffineTail finite_times_affine(const Seq& finite, const AffineTail& t) {
  const std::size_t support = finite.tail->from;
  std::int64_t b = 0;
  for (std::size_t k = 0; k < support; ++k) {
    const std::int64_t fk = *finite.at(k);
    b = checked_add(b, checked_mul(fk, checked_add(t.b, checked_mul(-t.a, static_cast<std::int64_t>(k)))));
  }
  const std::size_t from = support + t.from == 0 ? 0 : support + t.from - 1;
  return AffineTail{checked_mul(t.a, sum_below(finite, support)), b, from};
}

}  // namespace

std::int64_t AffineTail::operator()(std::size_t j) const {
  return checked_add(checked_mul(a, static_cast<std::int64_t>(j)), b);
}

CellVector::CellVector(std::vector<std::int64_t> counts, std::optional<AffineTail> tail)
    : counts_(std::move(counts)), tail_(tail) {
  require(!counts_.empty() && counts_[0] >= 1, ErrorCode::InvalidArgument,
          "a cell vector needs r(0) >= 1");
  for (std::int64_t c : counts_)
    require(c >= 0, ErrorCode::InvalidArgument, "cell counts must be nonnegative");
  if (tail_) {
    require(tail_->from <= counts_.size(), ErrorCode::InvalidArgument,
            "tail must start inside the explicit counts");
    for (std::size_t j = tail_->from; j < counts_.size(); ++j)
      require(counts_[j] == (*tail_)(j), ErrorCode::InvalidArgument,
              "tail disagrees with explicit counts");
    require(tail_->a >= 0 && (*tail_)(std::max(tail_->from, counts_.size())) >= 0,
            ErrorCode::InvalidArgument, "tail must stay nonnegative");
  }
}

CellVector CellVector::finite(std::vector<std::int64_t> counts) {
  const std::size_t len = counts.size();
  return CellVector(std::move(counts), AffineTail{0, 0, len});
}

CellVector CellVector::truncated(std::vector<std::int64_t> counts) {
  return CellVector(std::move(counts), std::nullopt);
}

std::optional<std::int64_t> CellVector::at(std::size_t j) const {
  if (j < counts_.size()) return counts_[j];
  if (tail_ && j >= tail_->from) return (*tail_)(j);
  return std::nullopt;
}

std::int64_t CellVector::value(std::size_t j) const {
  auto v = at(j);
  if (!v) fail(ErrorCode::Precondition, "r(" + std::to_string(j) + ") lies beyond the truncation");
  return *v;
}

std::vector<std::int64_t> CellVector::materialize(std::size_t m) const {
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j <= m; ++j) out.push_back(value(j));
  return out;
}

CellVector graph_of_groups_cells(std::span<const CellVector> vertices,
                                 std::span<const CellVector> edges) {
  require(!vertices.empty(), ErrorCode::InvalidArgument, "graph of groups needs a vertex");
  Seq total = as_seq(vertices.front());
  for (std::size_t v = 1; v < vertices.size(); ++v) total = add(total, as_seq(vertices[v]));
  for (const CellVector& e : edges) total = add(total, shift(as_seq(e)));
  return CellVector(std::move(total.counts), total.tail);
}

CellVector hnn_cells(const CellVector& base) {
  const CellVector one[] = {base};
  return graph_of_groups_cells(one, one);
}

CellVector stack_cells(const CellVector& fibre, const CellVector& quotient, std::size_t truncation) {
  const Seq n = as_seq(fibre);
  const Seq q = as_seq(quotient);
  std::optional<AffineTail> tail;
  if (n.tail && q.tail) {
    if (is_zero_tail(q.tail)) {
      tail = finite_times_affine(q, *n.tail);
    } else if (is_zero_tail(n.tail)) {
      tail = finite_times_affine(n, *q.tail);
    } else if (n.tail->a == 0 && q.tail->a == 0) {
      // Constant tails cN, cQ: the middle band contributes cN cQ per step.
      const std::int64_t cn = n.tail->b;
      const std::int64_t cq = q.tail->b;
      const auto jn = static_cast<std::int64_t>(n.tail->from);
      const auto jq = static_cast<std::int64_t>(q.tail->from);
      const std::int64_t cc = checked_mul(cn, cq);
      std::int64_t b = checked_mul(cq, sum_below(n, n.tail->from));
      b = checked_add(b, checked_mul(cn, sum_below(q, q.tail->from)));
      b = checked_add(b, checked_mul(cc, 1 - jn - jq));
      tail = AffineTail{cc, b, static_cast<std::size_t>(std::max<std::int64_t>(jn + jq - 1, 0))};
    }
  }
  std::size_t len = std::max(n.counts.size(), q.counts.size());
  if (tail)
    len = std::max(len, tail->from);
  else
    len = std::max(len, truncation + 1);
  Seq out = build(len, tail, [&](std::size_t j) { return convolve_at(n, q, j); });
  return CellVector(std::move(out.counts), out.tail);
}

CellVector thompson_f_complex() { return CellVector({1, 2}, AffineTail{0, 2, 1}); }

CellVector binomial_cells(int k) {
  require(k >= 0, ErrorCode::InvalidArgument, "torus dimension must be >= 0");
  std::vector<std::int64_t> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] = checked_add(next[j], row[j]);
      next[j + 1] = checked_add(next[j + 1], row[j]);
    }
    row = std::move(next);
  }
  return CellVector::finite(std::move(row));
}

CellVector constant_one_cells() { return CellVector({1}, AffineTail{0, 1, 0}); }

const char* to_string(FCase c) noexcept {
  switch (c) {
    case FCase::ContainsM: return "case1";
    case FCase::ConjugateContainsM: return "case2";
    case FCase::Recursive: return "case3";
  }
  return "?";
}

SubgroupCells cells_for_subgroup_F(const SubgroupLattice& lattice, std::size_t truncation) {
  require(lattice.arity() == 2, ErrorCode::ArityMismatch, "explicit cell counts need n = 2");
  const std::int64_t e1[] = {0, 1};
  const std::int64_t twisted[] = {1, -1};
  if (lattice.contains(e1)) return {hnn_cells(thompson_f_complex()), FCase::ContainsM};
  if (lattice.contains(twisted)) return {hnn_cells(thompson_f_complex()), FCase::ConjugateContainsM};

  const SubgroupLattice t = theta_shift(intersect_with_M(lattice));
  const SubgroupCells inner = cells_for_subgroup_F(t, truncation);
  if (inner.case_tag == FCase::Recursive)
    fail(ErrorCode::InvariantViolation, "H cap M did not reduce to case 1 or 2");
  const CellVector b = hnn_cells(inner.cells);
  return {stack_cells(b, constant_one_cells(), truncation), FCase::Recursive};
}

std::int64_t chi_m(const CellVector& cells, std::size_t m) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    const std::int64_t r = cells.value(i);
    sum = checked_add(sum, (m - i) % 2 == 0 ? r : -r);
  }
  if (sum < 0)
    fail(ErrorCode::InvariantViolation,
         "negative alternating sum " + std::to_string(sum) + " at m = " + std::to_string(m));
  return sum;
}

DeficiencyBounds deficiency_bounds(const CellVector& cells, int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  const std::int64_t lower =
      checked_add(checked_add(1 - cells.value(0), cells.value(1)), -cells.value(2));
  return {lower, arity};
}

std::string GeneratorBound::render() const {
  return plus_d0 ? std::to_string(constant) + "+d0" : std::to_string(constant);
}

const char* to_string(BoundCase c) noexcept {
  switch (c) {
    case BoundCase::ContainsM: return "case1";
    case BoundCase::ConjugateContainsM: return "case2";
    case BoundCase::Recursive: return "case3";
    case BoundCase::ContainsMGeneral: return "M-contained";
    case BoundCase::GenericD0: return "generic-d0";
  }
  return "?";
}

BoundReport d_bound(const SubgroupLattice& lattice, std::size_t max_chi_m) {
  const int n = lattice.arity();
  BoundReport report;
  report.def_upper = n;
  if (n == 2) {
    const SubgroupCells sc = cells_for_subgroup_F(lattice);
    report.d_upper = {sc.cells.value(1), false};
    switch (sc.case_tag) {
      case FCase::ContainsM: report.case_tag = BoundCase::ContainsM; break;
      case FCase::ConjugateContainsM: report.case_tag = BoundCase::ConjugateContainsM; break;
      case FCase::Recursive: report.case_tag = BoundCase::Recursive; break;
    }
    report.def_lower = deficiency_bounds(sc.cells, n).lower;
    for (std::size_t m = 0; m <= max_chi_m; ++m) report.chi_values.push_back(chi_m(sc.cells, m));
    return report;
  }
  bool contains_m = true;
  for (int i = 1; i < n; ++i) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    contains_m = contains_m && lattice.contains(e);
  }
  if (contains_m) {
    report.d_upper = {1 + n, false};
    report.case_tag = BoundCase::ContainsMGeneral;
  } else {
    report.d_upper = {n + 2, true};
    report.case_tag = BoundCase::GenericD0;
  }
  return report;
}

}  // namespace thompson
