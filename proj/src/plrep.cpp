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

#include "thompson/plrep.hpp"

#include <algorithm>

#include "thompson/error.hpp"

namespace thompson {

namespace {

// Value at t of the polyline through `pts`, read as a function of the chosen
// coordinate. `pts` is strictly increasing in both coordinates.
template <class In, class Out>
Rational interpolate(const std::vector<Breakpoint>& pts, const Rational& t, In in, Out out) {
  require(t >= 0 && t <= 1, ErrorCode::InvalidArgument, "argument outside [0,1]");
  auto it = std::lower_bound(pts.begin(), pts.end(), t,
                             [&](const Breakpoint& p, const Rational& v) { return in(p) < v; });
  if (in(*it) == t) return out(*it);
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return out(lo) + (out(hi) - out(lo)) * (t - in(lo)) / (in(hi) - in(lo));
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Breakpoint> minimized(std::vector<Breakpoint> pts) {
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (out.size() >= 1 && k + 1 < pts.size() && collinear(out.back(), pts[k], pts[k + 1]))
      continue;
    out.push_back(std::move(pts[k]));
  }
  return out;
}

Rational power(int base, unsigned exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return Rational(p);
}

struct Interval {
  Rational lo, hi;
};

// Leaf k of the infinite right vine of n-ary carets; the caret at depth c
// covers [1 - n^-c, 1] and its first n-1 children are leaves.
Interval vine_leaf(int n, std::uint64_t k) {
  const unsigned depth = static_cast<unsigned>(k / static_cast<unsigned>(n - 1));
  const std::uint64_t r = k % static_cast<unsigned>(n - 1);
  const Rational base = 1 - 1 / power(n, depth);
  const Rational width = 1 / power(n, depth + 1);
  return {base + width * static_cast<unsigned long>(r),
          base + width * static_cast<unsigned long>(r + 1)};
}

}  // namespace

PLMap::PLMap(int arity, std::vector<Breakpoint> points, Trusted)
    : arity_(arity), points_(minimized(std::move(points))) {}

PLMap PLMap::identity(int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  return PLMap(arity, {{0, 0}, {1, 1}}, Trusted{});
}

PLMap::PLMap(int arity, std::vector<Breakpoint> points) : arity_(arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  require(points.size() >= 2, ErrorCode::InvalidArgument, "a PL map needs at least two breakpoints");
  require(points.front() == Breakpoint{0, 0} && points.back() == Breakpoint{1, 1},
          ErrorCode::InvalidArgument, "a PL map must run from (0,0) to (1,1)");
  for (std::size_t k = 1; k < points.size(); ++k) {
    const Rational dx = points[k].x - points[k - 1].x;
    const Rational dy = points[k].y - points[k - 1].y;
    require(dx > 0 && dy > 0, ErrorCode::InvalidArgument, "breakpoints must be strictly increasing");
    require(is_integer_power(dy / dx, arity), ErrorCode::InvalidArgument,
            "segment slope is not a power of n");
  }
  points_ = minimized(std::move(points));
}

Rational PLMap::operator()(const Rational& t) const {
  return interpolate(points_, t, [](const Breakpoint& p) -> const Rational& { return p.x; },
                     [](const Breakpoint& p) -> const Rational& { return p.y; });
}

Rational PLMap::preimage(const Rational& t) const {
  return interpolate(points_, t, [](const Breakpoint& p) -> const Rational& { return p.y; },
                     [](const Breakpoint& p) -> const Rational& { return p.x; });
}

std::vector<Rational> PLMap::slopes() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < points_.size(); ++k)
    out.push_back((points_[k].y - points_[k - 1].y) / (points_[k].x - points_[k - 1].x));
  return out;
}

PLMap generator_map(int arity, GeneratorIndex index) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  const int n = arity;
  const std::uint64_t i = index;
  const std::uint64_t per_level = static_cast<std::uint64_t>(n - 1);
  const std::uint64_t depth = i / per_level + 1;
  const std::uint64_t range_leaves = depth * per_level;  // vine leaves before the tail

  // Range tree: vine of `depth` carets with one extra caret on leaf i.
  // Domain tree: vine of `depth + 1` carets. Leaves are matched in order.
  std::vector<Rational> range_ends;
  for (std::uint64_t k = 0; k < range_leaves; ++k) {
    const Interval leaf = vine_leaf(n, k);
    if (k == i) {
      const Rational w = (leaf.hi - leaf.lo) / n;
      for (int c = 1; c <= n; ++c) range_ends.push_back(leaf.lo + w * c);
    } else {
      range_ends.push_back(leaf.hi);
    }
  }
  range_ends.push_back(1);

  std::vector<Rational> domain_ends;
  for (std::uint64_t k = 0; k < range_leaves + per_level; ++k)
    domain_ends.push_back(vine_leaf(n, k).hi);
  domain_ends.push_back(1);

  if (domain_ends.size() != range_ends.size())
    fail(ErrorCode::InvariantViolation, "generator tree pair has mismatched leaf counts");

  std::vector<Breakpoint> pts{{0, 0}};
  for (std::size_t k = 0; k < domain_ends.size(); ++k)
    pts.push_back({domain_ends[k], range_ends[k]});
  return PLMap(arity, std::move(pts));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  require(f.arity() == g.arity(), ErrorCode::ArityMismatch, "maps have different arity");
  const auto& fp = f.points_;
  const auto& gp = g.points_;
  // Sweep the middle coordinate: g's outputs merged with f's inputs.
  std::vector<Breakpoint> out;
  out.reserve(fp.size() + gp.size());
  std::size_t a = 0;  // into gp, by y
  std::size_t b = 0;  // into fp, by x
  while (a < gp.size() || b < fp.size()) {
    Rational mid;
    if (b == fp.size() || (a < gp.size() && gp[a].y < fp[b].x))
      mid = gp[a].y;
    else
      mid = fp[b].x;
    Rational x = (a < gp.size() && gp[a].y == mid) ? gp[a].x : g.preimage(mid);
    Rational z = (b < fp.size() && fp[b].x == mid) ? fp[b].y : f(mid);
    out.push_back({std::move(x), std::move(z)});
    if (a < gp.size() && gp[a].y == mid) ++a;
    if (b < fp.size() && fp[b].x == mid) ++b;
  }
  return PLMap(f.arity(), std::move(out), PLMap::Trusted{});
}

PLMap invert_map(const PLMap& f) {
  std::vector<Breakpoint> out;
  out.reserve(f.points_.size());
  for (const Breakpoint& p : f.points_) out.push_back({p.y, p.x});
  return PLMap(f.arity(), std::move(out), PLMap::Trusted{});
}

PLMap evaluate_word(const GroupWord& word) {
  PLMap acc = PLMap::identity(word.arity());
  for (const Letter& l : word.letters()) {
    PLMap g = generator_map(word.arity(), l.index);
    acc = compose(acc, l.exponent > 0 ? g : invert_map(g));
  }
  return acc;
}

bool maps_equal(const PLMap& f, const PLMap& g) {
  require(f.arity() == g.arity(), ErrorCode::ArityMismatch, "maps have different arity");
  return f.breakpoints() == g.breakpoints();
}

}  // namespace thompson
