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

#include <doctest.h>

#include "thompson/complexes.hpp"
#include "thompson/error.hpp"

using namespace thompson;

namespace {

using Counts = std::vector<std::int64_t>;

SubgroupLattice lat(int n, const char* rows) { return SubgroupLattice::from_rows(n, parse_rows(n, rows)); }

Counts case3(std::size_t m) {
  Counts c{1, 5};
  for (std::size_t j = 2; j <= m; ++j) c.push_back(8 * static_cast<std::int64_t>(j) - 4);
  return c;
}

Counts case12(std::size_t m) {
  Counts c{1, 3};
  for (std::size_t j = 2; j <= m; ++j) c.push_back(4);
  return c;
}

// Direct convolution on materialized prefixes.
Counts convolve(const Counts& a, const Counts& b, std::size_t m) {
  Counts out(m + 1, 0);
  for (std::size_t j = 0; j <= m; ++j)
    for (std::size_t i = 0; i <= j; ++i) out[j] += a[i] * b[j - i];
  return out;
}

}  // namespace

TEST_CASE("cell vector construction") {
  CHECK_THROWS_AS(CellVector({0, 1}, std::nullopt), Error);
  CHECK_THROWS_AS(CellVector({}, std::nullopt), Error);
  CHECK_THROWS_AS(CellVector({1, -1}, std::nullopt), Error);
  CHECK_THROWS_AS(CellVector({1, 2, 3}, AffineTail{0, 2, 1}), Error);
  CHECK_THROWS_AS(CellVector({1}, AffineTail{0, 1, 3}), Error);
  CHECK_THROWS_AS(CellVector({1}, AffineTail{-1, 5, 1}), Error);
  const CellVector t = CellVector::truncated({1, 2});
  CHECK(t.at(1) == 2);
  CHECK_FALSE(t.at(2));
  CHECK_THROWS_AS(t.value(2), Error);
  CHECK(CellVector::finite({1, 2}).at(7) == 0);
  CHECK(thompson_f_complex().materialize(4) == Counts{1, 2, 2, 2, 2});
}

TEST_CASE("hnn_cells") {
  CHECK(hnn_cells(thompson_f_complex()).materialize(5) == case12(5));
  CHECK(hnn_cells(hnn_cells(thompson_f_complex())).materialize(5) == Counts{1, 4, 7, 8, 8, 8});
  CHECK(hnn_cells(CellVector::finite({1})).materialize(3) == Counts{1, 1, 0, 0});
  const CellVector tr = hnn_cells(CellVector::truncated({1, 2, 2}));
  CHECK(tr.counts() == Counts{1, 3, 4});
  CHECK_FALSE(tr.tail());
}

TEST_CASE("stack_cells") {
  const CellVector b = hnn_cells(hnn_cells(thompson_f_complex()));
  const CellVector h = stack_cells(b, constant_one_cells());
  CHECK(h.materialize(4) == Counts{1, 5, 12, 20, 28});
  // partial sums of r(B, i)
  const Counts bm = b.materialize(30);
  std::int64_t run = 0;
  for (std::size_t j = 0; j <= 30; ++j) {
    run += bm[j];
    CHECK(h.value(j) == run);
  }
  for (int k = 0; k <= 6; ++k) {
    const CellVector torus = binomial_cells(k);
    CHECK(stack_cells(CellVector::finite({1}), torus) == torus);
    CHECK(stack_cells(torus, CellVector::finite({1})).materialize(8) == torus.materialize(8));
  }
  CHECK(binomial_cells(4).materialize(5) == Counts{1, 4, 6, 4, 1, 0});
  // T^2 x T^3 = T^5
  CHECK(stack_cells(binomial_cells(2), binomial_cells(3)).materialize(6) == binomial_cells(5).materialize(6));
  // constant x constant, affine x finite and affine x affine against direct convolution
  const CellVector c1({1, 3}, AffineTail{0, 4, 2});
  const CellVector c2({2, 1, 7}, AffineTail{0, 2, 3});
  const CellVector lin({1, 2}, AffineTail{3, -1, 1});
  for (const auto& [x, y] : {std::pair{c1, c2}, std::pair{c2, c1}, std::pair{lin, binomial_cells(3)},
                             std::pair{binomial_cells(2), lin}, std::pair{lin, c1}}) {
    const CellVector s = stack_cells(x, y, 20);
    CHECK(s.materialize(20) == convolve(x.materialize(20), y.materialize(20), 20));
  }
  CHECK(stack_cells(c1, c2).tail());
  CHECK(stack_cells(lin, binomial_cells(3)).tail());
  CHECK_FALSE(stack_cells(lin, c1, 20).tail());
  CHECK(stack_cells(lin, c1, 20).counts().size() == 21);
}

TEST_CASE("graph_of_groups_cells") {
  const CellVector f = thompson_f_complex();
  const CellVector one[] = {f};
  CHECK(graph_of_groups_cells(one, one) == hnn_cells(f));
  const CellVector two[] = {CellVector::finite({1, 1}), CellVector::finite({1, 1})};
  const CellVector edge[] = {CellVector::finite({1})};
  CHECK(graph_of_groups_cells(two, edge).materialize(3) == Counts{2, 3, 0, 0});
  CHECK(graph_of_groups_cells(two, {}).materialize(2) == Counts{2, 2, 0});
  CHECK_THROWS_AS(graph_of_groups_cells({}, edge), Error);
}

TEST_CASE("cells_for_subgroup_F examples") {
  const auto c1 = cells_for_subgroup_F(lat(2, "2,0,0,1"));
  CHECK(c1.case_tag == FCase::ContainsM);
  CHECK(c1.cells.materialize(3) == case12(3));
  const auto c2 = cells_for_subgroup_F(lat(2, "1,1,1,-1"));
  CHECK(c2.case_tag == FCase::ConjugateContainsM);
  CHECK(c2.cells.materialize(3) == case12(3));
  const auto c3 = cells_for_subgroup_F(lat(2, "2,0,0,2"));
  CHECK(c3.case_tag == FCase::Recursive);
  CHECK(c3.cells.materialize(4) == Counts{1, 5, 12, 20, 28});
  CHECK_THROWS_AS(cells_for_subgroup_F(lat(3, "1,0,0,0,1,0,0,0,1")), Error);
}

TEST_CASE("A2 pipeline over every sublattice of index <= 100") {
  for (const SubgroupLattice& l : enumerate_subgroups(2, 100)) {
    const auto c = cells_for_subgroup_F(l);
    const std::int64_t e1[] = {0, 1};
    const std::int64_t tw[] = {1, -1};
    const bool simple = l.contains(e1) || l.contains(tw);
    CHECK((c.case_tag != FCase::Recursive) == simple);
    CHECK(c.cells.materialize(16) == (simple ? case12(16) : case3(16)));
    for (std::size_t m = 0; m <= 16; ++m) CHECK(chi_m(c.cells, m) >= 0);
  }
}

TEST_CASE("chi_m") {
  CHECK(chi_m(CellVector::truncated({1, 5, 12}), 2) == 8);
  CHECK(chi_m(CellVector::truncated({1, 3, 4}), 2) == 2);
  CHECK(chi_m(CellVector::finite({1}), 0) == 1);
  CHECK_THROWS_AS(chi_m(CellVector::truncated({1, 5, 3}), 2), Error);
  CHECK_THROWS_AS(chi_m(CellVector::truncated({1, 5}), 2), Error);
  // case 3 closed form: chi_m = 4m for m >= 1
  const auto c3 = cells_for_subgroup_F(lat(2, "2,0,0,2")).cells;
  for (std::size_t m = 1; m <= 16; ++m) CHECK(chi_m(c3, m) == 4 * static_cast<std::int64_t>(m));
  const auto c1 = hnn_cells(thompson_f_complex());
  for (std::size_t m = 1; m <= 16; ++m) CHECK(chi_m(c1, m) == 2);
}

TEST_CASE("deficiency bounds") {
  const auto a = deficiency_bounds(CellVector::truncated({1, 5, 12}), 2);
  CHECK(a.lower == -7);
  CHECK(a.upper == 2);
  const auto b = deficiency_bounds(CellVector::truncated({1, 3, 4}), 2);
  CHECK(b.lower == -1);
  CHECK(b.upper == 2);
  const auto c = deficiency_bounds(thompson_f_complex(), 2);
  CHECK(c.lower == 0);
  CHECK(c.upper == 2);
  CHECK_THROWS_AS(deficiency_bounds(CellVector::truncated({1, 3}), 2), Error);
  for (const SubgroupLattice& l : enumerate_subgroups(2, 30)) {
    const auto d = deficiency_bounds(cells_for_subgroup_F(l).cells, 2);
    CHECK(d.lower <= d.upper);
  }
}

TEST_CASE("d_bound") {
  const auto r = d_bound(lat(2, "2,0,0,2"));
  CHECK(r.d_upper == GeneratorBound{5, false});
  CHECK(r.case_tag == BoundCase::Recursive);
  CHECK(r.def_lower == -7);
  CHECK(r.def_upper == 2);
  CHECK(r.chi_values == Counts{1, 4, 8});
  CHECK(d_bound(lat(2, "3,0,0,1")).d_upper.constant == 3);
  const auto m3 = d_bound(lat(3, "2,0,0,0,1,0,0,0,1"));
  CHECK(m3.d_upper == GeneratorBound{4, false});
  CHECK(m3.case_tag == BoundCase::ContainsMGeneral);
  const auto g3 = d_bound(lat(3, "2,0,0,0,2,0,0,0,2"));
  CHECK(g3.d_upper == GeneratorBound{5, true});
  CHECK(g3.d_upper.render() == "5+d0");
  CHECK(g3.case_tag == BoundCase::GenericD0);
  CHECK_FALSE(g3.def_lower);
  CHECK(g3.def_upper == 3);
  for (int n = 3; n <= 5; ++n)
    for (const SubgroupLattice& l : enumerate_subgroups(n, 6)) {
      const auto b = d_bound(l);
      if (b.d_upper.plus_d0)
        CHECK(b.d_upper.constant == n + 2);
      else
        CHECK(b.d_upper.constant == n + 1);
    }
}
