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

#include <random>

#include "thompson/error.hpp"
#include "thompson/plrep.hpp"

using namespace thompson;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

bool denominator_is_power(const Rational& x, int n) {
  mpz_class d = x.get_den();
  mpz_class g;
  while ((g = gcd(d, mpz_class(n))) > 1) d /= g;
  return d == 1;
}

PLMap random_map(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> idx(0, 5);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters;
  for (int k = 0; k < 6; ++k) letters.push_back({static_cast<GeneratorIndex>(idx(rng)), sign(rng) ? 1 : -1});
  return evaluate_word(GroupWord(n, std::move(letters)));
}

}  // namespace

TEST_CASE("validating constructor") {
  CHECK_NOTHROW(PLMap(2, {{q(0), q(0)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(1), q(1)}}));
  CHECK_THROWS_AS(PLMap(2, {{q(0), q(0)}, {q(1, 2), q(1, 3)}, {q(1), q(1)}}), Error);
  CHECK_THROWS_AS(PLMap(2, {{q(0), q(1, 2)}, {q(1), q(1)}}), Error);
  CHECK_THROWS_AS(PLMap(2, {{q(0), q(0)}, {q(1, 2), q(1, 2)}, {q(1, 2), q(3, 4)}, {q(1), q(1)}}), Error);
  CHECK_THROWS_AS(PLMap(3, {{q(0), q(0)}, {q(1, 2), q(1, 4)}, {q(1), q(1)}}), Error);
  // collinear interior points are dropped
  CHECK(PLMap(2, {{q(0), q(0)}, {q(1, 2), q(1, 2)}, {q(1), q(1)}}).is_identity());
}

TEST_CASE("generator maps") {
  for (int n = 2; n <= 4; ++n)
    for (GeneratorIndex i = 0; i <= 10; ++i) {
      const PLMap g = generator_map(n, i);
      CHECK_FALSE(g.is_identity());
      for (const Rational& s : g.slopes()) CHECK(is_integer_power(s, n));
      for (const Breakpoint& b : g.breakpoints()) {
        CHECK(denominator_is_power(b.x, n));
        CHECK(denominator_is_power(b.y, n));
      }
    }
  const PLMap x0 = generator_map(2, 0);
  const PLMap x1 = generator_map(2, 1);
  const PLMap x2 = generator_map(2, 2);
  CHECK(compose(invert_map(x0), compose(x1, x0)) == x2);
  CHECK(compose(x0, invert_map(x0)).is_identity());
  CHECK(compose(x1, x0) == compose(x0, x2));
  CHECK_FALSE(maps_equal(PLMap::identity(2), x0));
}

TEST_CASE("relations for 0 <= j < i <= 8") {
  for (int n = 2; n <= 4; ++n)
    for (GeneratorIndex i = 1; i <= 8; ++i)
      for (GeneratorIndex j = 0; j < i; ++j) {
        const GroupWord lhs(n, {{j, -1}, {i, 1}, {j, 1}});
        const GroupWord rhs = GroupWord::generator(n, i + static_cast<GeneratorIndex>(n) - 1);
        CHECK(maps_equal(evaluate_word(lhs), evaluate_word(rhs)));
      }
}

TEST_CASE("evaluation, inverse and point action") {
  CHECK(evaluate_word(GroupWord(3)).is_identity());
  CHECK(maps_equal(evaluate_word(parse_word(2, "x1 x0")), evaluate_word(parse_word(2, "x0 x2"))));
  CHECK(maps_equal(evaluate_word(parse_word(3, "x2 x1 x0")), evaluate_word(parse_word(3, "x0 x3 x6"))));
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const PLMap f = random_map(rng, n);
    CHECK(invert_map(invert_map(f)) == f);
    CHECK(compose(f, PLMap::identity(n)) == f);
    CHECK(compose(f, invert_map(f)).is_identity());
    const auto s = f.slopes();
    const auto si = invert_map(f).slopes();
    REQUIRE(s.size() == si.size());
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k] * si[k] == 1);
    for (long num = 0; num <= 16; ++num) {
      const Rational t0 = q(num, 16);
      CHECK(f.preimage(f(t0)) == t0);
    }
  }
  // word "a b" acts as a(b(t))
  const GroupWord ab = parse_word(2, "x0 x1");
  const Rational t0 = q(5, 8);
  CHECK(evaluate_word(ab)(t0) == generator_map(2, 0)(generator_map(2, 1)(t0)));
}

TEST_CASE("associativity and slope closure") {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const PLMap f = random_map(rng, n);
    const PLMap g = random_map(rng, n);
    const PLMap h = random_map(rng, n);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    for (const Rational& s : compose(f, g).slopes()) CHECK(is_integer_power(s, n));
  }
  CHECK_THROWS_AS(compose(generator_map(2, 0), generator_map(3, 0)), Error);
}
