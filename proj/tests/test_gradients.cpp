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

#include "thompson/error.hpp"
#include "thompson/gradients.hpp"

using namespace thompson;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

long pow4(int s) {
  long v = 1;
  for (int k = 0; k < s; ++k) v *= 4;
  return v;
}

}  // namespace

TEST_CASE("rank gradient, scaling(2), n = 2") {
  const auto g = rank_gradient_series(ChainSpec::scaling(2, 2), 10);
  REQUIRE(g.rows.size() == 11);
  CHECK(g.rows[0].index == 1);
  CHECK(g.rows[0].upper == 1);
  CHECK(g.rows[3].upper == q(1, 16));
  for (int s = 1; s <= 10; ++s) {
    const auto& r = g.rows[static_cast<std::size_t>(s)];
    CHECK(r.index == pow4(s));
    CHECK(r.lower == 0);
    CHECK(r.upper == q(4, pow4(s)));
  }
  CHECK_FALSE(certify_convergence(g, 0).certified);
  const auto c = certify_convergence(g, q(1, 1000));
  CHECK(c.certified);
  CHECK(c.first_s == 6);
}

TEST_CASE("deficiency gradient") {
  const auto g = deficiency_gradient_series(ChainSpec::scaling(2, 2), 10);
  CHECK(g.rows[0].lower == 0);
  CHECK(g.rows[0].upper == 2);
  CHECK(g.rows[3].lower == q(-7, 64));
  CHECK(g.rows[3].upper == q(2, 64));
  Rational prev = 100;
  for (const auto& r : g.rows) {
    CHECK(r.lower <= r.upper);
    const Rational width = std::max(Rational(abs(r.lower)), Rational(abs(r.upper)));
    CHECK(width <= prev);
    prev = width;
  }
  // max(|lower|, |upper|) = 7/4^s drops below 1/10 at s = 4.
  CHECK(certify_convergence(g, q(1, 10)).first_s == 4);
  CHECK(certify_convergence(g, q(1, 1000)).first_s == 7);
  CHECK_THROWS_AS(deficiency_gradient_series(ChainSpec::scaling(3, 2), 3), Error);
}

TEST_CASE("chi_m gradient") {
  const auto g = chi_m_gradient_series(ChainSpec::scaling(2, 2), 2, 10);
  CHECK(g.rows[2].upper == q(1, 2));
  for (int s = 1; s <= 10; ++s) CHECK(g.rows[static_cast<std::size_t>(s)].upper == q(8, pow4(s)));
  const auto g0 = chi_m_gradient_series(ChainSpec::scaling(2, 2), 0, 6);
  for (const auto& r : g0.rows) {
    CHECK(r.upper == q(1, r.index));
    CHECK(r.lower == 0);
  }
  for (std::size_t m = 0; m <= 16; ++m)
    for (const auto& r : chi_m_gradient_series(ChainSpec::scaling(2, 3), m, 5).rows) CHECK(r.upper >= 0);
}

TEST_CASE("symbolic rows for n >= 3") {
  const auto g = rank_gradient_series(ChainSpec::scaling(3, 2), 3);
  CHECK(g.rows[0].upper == 2);
  CHECK_FALSE(g.rows[0].symbolic());
  CHECK(g.rows[1].symbolic());
  CHECK(g.rows[1].render_upper() == "(4+d0)/8");
  CHECK_FALSE(certify_convergence(g, 1).certified);
  const auto fixed = rank_gradient_series(ChainSpec::scaling(3, 2), 3, 6);
  CHECK(fixed.rows[1].upper == q(10, 8));
  CHECK(fixed.rows[3].upper == q(10, 512));
  // coordinate chains keep M inside H: d <= n + 1
  const auto co = rank_gradient_series(ChainSpec::coordinate(3, 2), 4);
  for (std::size_t s = 1; s < co.rows.size(); ++s) CHECK(co.rows[s].upper == q(3, co.rows[s].index));
  CHECK_THROWS_AS(rank_gradient_series(ChainSpec::scaling(3, 2), 3, 0), Error);
}

TEST_CASE("explicit chains need not be nested") {
  const ChainSpec spec = parse_chain(2, "explicit:1,0,0,1;2,0,0,1;1,1,0,3;2,0,0,2;5,0,0,1");
  const auto g = deficiency_gradient_series(spec);
  REQUIRE(g.rows.size() == 5);
  CHECK(g.rows[2].index == 3);
  CHECK(g.rows[3].lower == q(-7, 4));
  CHECK(g.rows[4].lower == q(-1, 5));
  const ChainSpec bad = parse_chain(2, "explicit:2,0,0,1;1,1,0,2");
  CHECK_THROWS_AS(deficiency_gradient_series(bad), Error);
  CHECK_THROWS_AS(deficiency_gradient_series(spec, 7), Error);
}

TEST_CASE("certify_convergence") {
  GradientSeries zero{GradientKind::DG, 0, {}};
  CHECK_THROWS_AS(certify_convergence(zero, q(1, 10)), Error);
  for (int s = 0; s < 4; ++s) zero.rows.push_back({s, 1L << (2 * s), 0, 0, 0});
  const auto c = certify_convergence(zero, 0);
  CHECK(c.certified);
  CHECK(c.first_s == 0);
  CHECK_THROWS_AS(certify_convergence(zero, -1), Error);
}
