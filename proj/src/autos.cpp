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

#include "thompson/autos.hpp"

#include <deque>
#include <limits>
#include <set>

#include "thompson/error.hpp"

namespace thompson {

CharacterMatrix::CharacterMatrix(int arity, std::vector<std::int64_t> row_major)
    : arity_(arity), entries_(std::move(row_major)) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  require(entries_.size() == static_cast<std::size_t>(arity) * static_cast<std::size_t>(arity),
          ErrorCode::InvalidArgument, "matrix must be n x n");
}

CharacterMatrix CharacterMatrix::identity(int arity) {
  const auto n = static_cast<std::size_t>(arity);
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return CharacterMatrix(arity, std::move(e));
}

CharacterMatrix CharacterMatrix::operator*(const CharacterMatrix& rhs) const {
  require(arity_ == rhs.arity_, ErrorCode::ArityMismatch, "matrix dimensions differ");
  const auto n = static_cast<std::size_t>(arity_);
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        e[i * n + j] = checked_add(e[i * n + j], checked_mul(a, rhs(k, j)));
    }
  return CharacterMatrix(arity_, std::move(e));
}

CharacterMatrix CharacterMatrix::transposed() const {
  const auto n = static_cast<std::size_t>(arity_);
  std::vector<std::int64_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = (*this)(i, j);
  return CharacterMatrix(arity_, std::move(e));
}

CharacterMatrix CharacterMatrix::power(unsigned k) const {
  CharacterMatrix out = identity(arity_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rational CharacterMatrix::determinant() const {
  const auto n = static_cast<std::size_t>(arity_);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>((*this)(i, j));
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

std::vector<int> delta_from_swaps(int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  const int n = arity;
  std::vector<int> delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = i;
  if (n == 2) return delta;  // the swap n-1 <-> n-2 would leave {1}
  for (int i = 1; i <= n - 3; ++i) delta[static_cast<std::size_t>(i)] = n - i - 2;
  delta[static_cast<std::size_t>(n - 1)] = n - 2;
  delta[static_cast<std::size_t>(n - 2)] = n - 1;
  return delta;
}

std::vector<int> delta_from_cycle(int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
  const int n = arity;
  auto rho_inverse = [n](int k) { return k == 1 ? n - 1 : k - 1; };
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n - 1; ++i) {
    int v = n - 1;
    for (int step = 0; step < i + 1; ++step) v = rho_inverse(v);
    delta[static_cast<std::size_t>(i)] = v;
  }
  return delta;
}

CharacterMatrix matrix_A(int arity) {
  const auto n = static_cast<std::size_t>(arity);
  std::vector<std::int64_t> e(n * n, 0);
  e[0] = 1;
  // (A v)_i = v_{i+1} for 1 <= i <= n-2 and (A v)_{n-1} = v_1.
  for (std::size_t i = 1; i < n; ++i) e[i * n + (i + 1 < n ? i + 1 : 1)] = 1;
  return CharacterMatrix(arity, std::move(e));
}

CharacterMatrix matrix_C(int arity) {
  const std::vector<int> delta = delta_from_swaps(arity);
  const auto n = static_cast<std::size_t>(arity);
  std::vector<std::int64_t> e(n * n, 0);
  // (C v)_0 = -v_0, (C v)_i = v_{delta(i)} - v_0.
  e[0] = -1;
  for (std::size_t i = 1; i < n; ++i) {
    e[i * n] = -1;
    e[i * n + static_cast<std::size_t>(delta[i])] += 1;
  }
  return CharacterMatrix(arity, std::move(e));
}

Character apply(const CharacterMatrix& m, const Character& chi) {
  require(m.arity() == chi.arity(), ErrorCode::ArityMismatch, "matrix and character differ in n");
  const auto n = static_cast<std::size_t>(m.arity());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) out[i] += chi.values()[j] * static_cast<long>(m(i, j));
  return Character(m.arity(), std::move(out));
}

std::optional<int> order_of(const CharacterMatrix& m, int cap) {
  require(cap >= 1, ErrorCode::InvalidArgument, "cap must be >= 1");
  const CharacterMatrix id = CharacterMatrix::identity(m.arity());
  CharacterMatrix p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

GroupWord phi_on_word(const GroupWord& word, int k) {
  require(k >= 0, ErrorCode::InvalidArgument, "phi is only defined here for k >= 0");
  std::vector<Letter> out = word.letters();
  for (Letter& l : out) {
    if (l.index == 0) continue;
    const std::uint64_t shifted = std::uint64_t{l.index} + static_cast<std::uint64_t>(k);
    if (shifted > std::numeric_limits<GeneratorIndex>::max())
      fail(ErrorCode::ResourceLimit, "generator index overflow in phi");
    l.index = static_cast<GeneratorIndex>(shifted);
  }
  return GroupWord(word.arity(), std::move(out));
}

Character reduction_identity_check(const Character& rho) {
  const int n = rho.arity();
  require(n >= 3, ErrorCode::Precondition, "the A^{n-3} C reduction needs n >= 3");
  require(rho.values()[0] == rho.values()[static_cast<std::size_t>(n - 1)],
          ErrorCode::Precondition, "reduction needs rho(x_0) = rho(x_{n-1})");
  const Character out = apply(matrix_A(n).power(static_cast<unsigned>(n - 3)) * matrix_C(n), rho);
  if (out.values()[1] != 0)
    fail(ErrorCode::InvariantViolation, "A^{n-3} C rho does not vanish on x_1");
  return out;
}

std::vector<SpherePoint> d_orbit(const SpherePoint& p, std::size_t cap) {
  const int n = p.representative().arity();
  const CharacterMatrix a = matrix_A(n);
  const std::vector<CharacterMatrix> moves{a, a.transposed(), matrix_C(n)};
  std::set<SpherePoint> seen{p};
  std::deque<SpherePoint> frontier{p};
  while (!frontier.empty()) {
    const SpherePoint cur = frontier.front();
    frontier.pop_front();
    for (const CharacterMatrix& m : moves) {
      SpherePoint next(apply(m, cur.representative()));
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          fail(ErrorCode::ResourceLimit, "orbit exceeds cap of " + std::to_string(cap) + " points");
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace thompson
