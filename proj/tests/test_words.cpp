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
#include "thompson/words.hpp"

using namespace thompson;

namespace {

GroupWord random_word(std::mt19937& rng, int n, int max_len, int max_index) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(0, max_index);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters;
  const int l = len(rng);
  for (int k = 0; k < l; ++k)
    letters.push_back(Letter{static_cast<GeneratorIndex>(idx(rng)), sign(rng) ? 1 : -1});
  return GroupWord(n, std::move(letters));
}

// x_j^-1 x_i x_j x_{i+n-1}^-1 with i > j.
GroupWord random_relator(std::mt19937& rng, int n, int max_index) {
  std::uniform_int_distribution<int> idx(1, max_index);
  const int i = idx(rng);
  std::uniform_int_distribution<int> lower(0, i - 1);
  const auto j = static_cast<GeneratorIndex>(lower(rng));
  const auto ii = static_cast<GeneratorIndex>(i);
  return GroupWord(n, {{j, -1}, {ii, 1}, {j, 1}, {static_cast<GeneratorIndex>(i + n - 1), -1}});
}

GroupWord splice(const GroupWord& w, const GroupWord& r, std::size_t at) {
  std::vector<Letter> out(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), r.letters().begin(), r.letters().end());
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(at), w.letters().end());
  return GroupWord(w.arity(), std::move(out));
}

std::string nf(int n, const char* w) { return to_string(normal_form(parse_word(n, w))); }

}  // namespace

TEST_CASE("parsing and printing") {
  const GroupWord w = parse_word(3, "x0 x1^-1 x3^2");
  REQUIRE(w.letters().size() == 4);
  CHECK(to_string(w) == "x0 x1^-1 x3 x3");
  CHECK(parse_word(2, "   ").letters().empty());
  CHECK(to_string(parse_word(2, "x4^+1 x2^-2")) == "x4 x2^-1 x2^-1");
  CHECK(parse_word(2, "x0^0").letters().empty());
  CHECK_THROWS_AS(parse_word(2, "y1"), Error);
  CHECK_THROWS_AS(parse_word(2, "x"), Error);
  CHECK_THROWS_AS(parse_word(2, "x1^"), Error);
  CHECK_THROWS_AS(parse_word(2, "x-1"), Error);
  CHECK_THROWS_AS(parse_word(1, "x0"), Error);
}

TEST_CASE("rewrite_to_seminormal examples") {
  const auto a = rewrite_to_seminormal(parse_word(2, "x1 x0"));
  CHECK(a.positive() == std::vector<GeneratorIndex>{0, 2});
  CHECK(a.negative().empty());
  CHECK(rewrite_to_seminormal(parse_word(4, "x0 x0^-1")).positive().empty());
  CHECK(rewrite_to_seminormal(parse_word(4, "x0 x0^-1")).negative().empty());
  CHECK(rewrite_to_seminormal(parse_word(3, "x2 x1 x0")).positive() ==
        std::vector<GeneratorIndex>{0, 3, 6});
  CHECK(to_string(rewrite_to_seminormal(parse_word(2, "x0^-1 x1 x0"))) == "x2");
}

TEST_CASE("seminormal form invariants are enforced") {
  CHECK_THROWS_AS(SeminormalForm(2, {2, 1}, {}), Error);
  CHECK_THROWS_AS(SeminormalForm(2, {}, {1, 2}), Error);
  CHECK_NOTHROW(SeminormalForm(2, {1, 1, 3}, {4, 0}));
}

TEST_CASE("multiply") {
  const SeminormalForm x0(2, {0}, {});
  const SeminormalForm x0inv(2, {}, {0});
  CHECK(to_string(multiply(x0, x0inv)).empty());
  CHECK(multiply(SeminormalForm(2, {1}, {}), x0).positive() == std::vector<GeneratorIndex>{0, 2});
  const auto u = rewrite_to_seminormal(parse_word(2, "x0 x2^-1"));
  const auto v = rewrite_to_seminormal(parse_word(2, "x2 x0^-1"));
  CHECK(to_string(multiply(u, v)).empty());
  CHECK_THROWS_AS(multiply(SeminormalForm(2), SeminormalForm(3)), Error);
}

TEST_CASE("invert") {
  CHECK(to_string(invert(parse_word(2, "x0"))) == "x0^-1");
  CHECK(invert(GroupWord(2)).letters().empty());
  CHECK(to_string(invert(parse_word(2, "x0 x1^-1"))) == "x1 x0^-1");
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const GroupWord w = random_word(rng, 2 + t % 3, 10, 6);
    CHECK(are_equal(w.concat(invert(w)), GroupWord(w.arity())));
  }
}

TEST_CASE("abelianize") {
  CHECK(abelianize(parse_word(2, "x2")) == std::vector<std::int64_t>{0, 1});
  CHECK(abelianize(parse_word(2, "x0^2 x1^-1")) == std::vector<std::int64_t>{2, -1});
  CHECK(abelianize(parse_word(3, "x3")) == std::vector<std::int64_t>{0, 1, 0});
  for (int n = 2; n <= 5; ++n)
    for (GeneratorIndex i = 1; i <= 8; ++i)
      CHECK(abelianize(GroupWord::generator(n, i + static_cast<GeneratorIndex>(n) - 1)) ==
            abelianize(GroupWord::generator(n, i)));
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const GroupWord u = random_word(rng, n, 8, 6);
    const GroupWord v = random_word(rng, n, 8, 6);
    const auto prod = abelianize(multiply(rewrite_to_seminormal(u), rewrite_to_seminormal(v)).to_word());
    auto sum = abelianize(u);
    const auto av = abelianize(v);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += av[k];
    CHECK(prod == sum);
  }
}

TEST_CASE("are_equal examples") {
  CHECK(are_equal(parse_word(2, "x0^-1 x1 x0"), parse_word(2, "x2")));
  CHECK_FALSE(are_equal(parse_word(2, "x0"), parse_word(2, "x1")));
  CHECK_THROWS_AS(are_equal(parse_word(2, "x0"), parse_word(3, "x0")), Error);
}

TEST_CASE("full normal form removes straddling pairs") {
  // x_1 x_3 x_1^-1 = x_2 for n = 2: the pair on x_1 is removable.
  CHECK(nf(2, "x1 x3 x1^-1") == "x2");
  // x_1 x_2 x_1^-1 is reduced: x_2 blocks the pair.
  CHECK(nf(2, "x1 x2 x1^-1") == "x1 x2 x1^-1");
  CHECK(nf(3, "x1 x2 x4 x1^-1") == "x1 x2 x4 x1^-1");
  CHECK(nf(3, "x1 x3 x1^-1") == "x1 x3 x1^-1");
  CHECK(nf(3, "x1 x4 x1^-1") == "x2");
  CHECK(nf(3, "x1 x5 x1^-1") == "x3");
}

TEST_CASE("termination and soundness against the PL realization") {
  std::mt19937 rng(2026);
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + t % 3;
    const GroupWord w = random_word(rng, n, 20, 8);
    const SeminormalForm s = rewrite_to_seminormal(w);
    CHECK(maps_equal(evaluate_word(w), evaluate_word(s.to_word())));
    CHECK(maps_equal(evaluate_word(w), evaluate_word(normal_form(w).to_word())));
  }
}

TEST_CASE("normal form is idempotent and canonical") {
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const GroupWord w = random_word(rng, n, 10, 5);
    const SeminormalForm f = normal_form(w);
    CHECK(to_string(normal_form(f.to_word())) == to_string(f));
    const GroupWord w2 = splice(w, random_relator(rng, n, 5), w.letters().size() / 2);
    CHECK(to_string(normal_form(w2)) == to_string(f));
  }
}

TEST_CASE("word oracle equivalence with the PL realization") {
  std::mt19937 rng(12345);
  int agreed = 0;
  int equal_pairs = 0;
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 2;
    const GroupWord u = random_word(rng, n, 12, 4);
    GroupWord v = random_word(rng, n, 12, 4);
    if (t % 2 == 0) {
      v = splice(u, random_relator(rng, n, 3), u.letters().size() / 2);
      v = splice(v, invert(GroupWord(n, {{1, 1}})).concat(GroupWord(n, {{1, 1}})), 0);
    }
    const bool words = are_equal(u, v);
    const bool maps = maps_equal(evaluate_word(u), evaluate_word(v));
    agreed += words == maps ? 1 : 0;
    equal_pairs += maps ? 1 : 0;
  }
  CHECK(agreed == 2000);
  CHECK(equal_pairs >= 1000);
}

TEST_CASE("index cap") {
  RewriteLimits tight;
  tight.max_index = 6;
  CHECK_THROWS_AS(rewrite_to_seminormal(parse_word(2, "x5 x0 x0 x0"), tight), Error);
  CHECK_NOTHROW(rewrite_to_seminormal(parse_word(2, "x5 x0 x0 x0")));
}
