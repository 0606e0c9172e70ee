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

#include "thompson/lattices.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>

#include "thompson/error.hpp"

namespace thompson {

namespace {

void check_arity(int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row -= q * other
void subtract_multiple(IntVector& row, const IntVector& other, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j)
    row[j] = checked_add(row[j], checked_mul(-q, other[j]));
}

std::vector<std::int64_t> hnf_basis(std::size_t n, std::vector<IntVector> a) {
  for (const IntVector& r : a)
    require(r.size() == n, ErrorCode::InvalidArgument, "every row must have n entries");
  std::size_t r = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t first = r;
    while (first < a.size() && a[first][col] == 0) ++first;
    if (first == a.size())
      fail(ErrorCode::InvalidArgument, "rows do not span a full-rank sublattice");
    std::swap(a[r], a[first]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      while (a[i][col] != 0) {
        subtract_multiple(a[r], a[i], a[r][col] / a[i][col]);
        std::swap(a[r], a[i]);
      }
    }
    if (a[r][col] < 0)
      for (std::int64_t& x : a[r]) x = checked_mul(x, -1);
    for (std::size_t k = 0; k < r; ++k) subtract_multiple(a[k], a[r], floor_div(a[k][col], a[r][col]));
    ++r;
  }
  std::vector<std::int64_t> basis;
  basis.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) basis.insert(basis.end(), a[i].begin(), a[i].end());
  return basis;
}

}  // namespace

SubgroupLattice SubgroupLattice::from_rows(int arity, std::span<const IntVector> rows) {
  check_arity(arity);
  return SubgroupLattice(arity, hnf_basis(static_cast<std::size_t>(arity),
                                          std::vector<IntVector>(rows.begin(), rows.end())));
}

std::vector<IntVector> SubgroupLattice::rows() const {
  const auto n = static_cast<std::size_t>(arity_);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(basis_.begin() + static_cast<std::ptrdiff_t>(i * n),
                     basis_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return out;
}

bool SubgroupLattice::contains(std::span<const std::int64_t> v) const {
  const auto n = static_cast<std::size_t>(arity_);
  require(v.size() == n, ErrorCode::ArityMismatch, "vector length differs from n");
  IntVector rest(v.begin(), v.end());
  for (std::size_t col = 0; col < n; ++col) {
    const std::int64_t pivot = entry(col, col);
    if (rest[col] % pivot != 0) return false;
    const std::int64_t c = rest[col] / pivot;
    for (std::size_t j = col; j < n; ++j) rest[j] = checked_add(rest[j], checked_mul(-c, entry(col, j)));
  }
  return true;
}

SubgroupLattice hnf(int arity, std::span<const IntVector> rows) {
  return SubgroupLattice::from_rows(arity, rows);
}

std::int64_t index(const SubgroupLattice& lattice) {
  std::int64_t det = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(lattice.arity()); ++i)
    det = checked_mul(det, lattice.entry(i, i));
  return det;
}

std::int64_t alpha(const SubgroupLattice& lattice) {
  // Move coordinate 0 last; the last pivot of that HNF generates L cap Z e_0.
  const auto n = static_cast<std::size_t>(lattice.arity());
  std::vector<IntVector> permuted;
  for (const IntVector& r : lattice.rows()) {
    IntVector p(r.begin() + 1, r.end());
    p.push_back(r[0]);
    permuted.push_back(std::move(p));
  }
  const SubgroupLattice h = SubgroupLattice::from_rows(lattice.arity(), permuted);
  return h.entry(n - 1, n - 1);
}

MLattice intersect_with_M(const SubgroupLattice& lattice) {
  const auto n = static_cast<std::size_t>(lattice.arity());
  std::vector<IntVector> gens;
  // Rows 1..n-1 of the HNF span L cap (0 + Z^{n-1}); lift each through psi.
  for (std::size_t i = 1; i < n; ++i) {
    IntVector lift(n, 0);
    for (std::size_t j = 1; j < n; ++j) lift[j - 1] = lattice.entry(i, j);
    gens.push_back(std::move(lift));
  }
  // ker psi is spanned by the image of x_1 x_n^-1.
  IntVector kernel(n, 0);
  kernel[0] = 1;
  kernel[n - 1] = -1;
  gens.push_back(std::move(kernel));
  return MLattice{SubgroupLattice::from_rows(lattice.arity(), gens)};
}

SubgroupLattice theta_shift(const MLattice& lattice) { return lattice.lattice; }

Character restrict_character(const Character& chi) {
  require(!chi.is_zero(), ErrorCode::ZeroCharacter, "restriction needs a nonzero character");
  const int n = chi.arity();
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i) values.push_back(chi.at_generator(static_cast<GeneratorIndex>(i + 1)));
  return Character(n, std::move(values));
}

std::vector<SubgroupLattice> enumerate_subgroups(int arity, std::int64_t max_index,
                                                 std::size_t cap) {
  check_arity(arity);
  require(max_index >= 1, ErrorCode::InvalidArgument, "max_index must be >= 1");
  const auto n = static_cast<std::size_t>(arity);

  // Diagonals with product <= max_index, grouped by index, lexicographic.
  std::vector<std::vector<std::int64_t>> diagonals;
  std::vector<std::int64_t> diag(n, 1);
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t col, std::int64_t product) {
    if (col == n) {
      diagonals.push_back(diag);
      return;
    }
    for (std::int64_t d = 1; product * d <= max_index; ++d) {
      diag[col] = d;
      walk(col + 1, product * d);
    }
  };
  walk(0, 1);
  auto product = [](const std::vector<std::int64_t>& d) {
    std::int64_t p = 1;
    for (std::int64_t x : d) p *= x;
    return p;
  };
  std::stable_sort(diagonals.begin(), diagonals.end(),
                   [&](const auto& a, const auto& b) { return product(a) < product(b); });

  // Column j carries j free entries in [0, d_j).
  std::size_t total = 0;
  for (const auto& d : diagonals) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < j; ++k) {
        count *= static_cast<std::size_t>(d[j]);
        if (count > cap) break;
      }
    total += count;
    if (total > cap)
      fail(ErrorCode::ResourceLimit, "enumeration would exceed " + std::to_string(cap) + " lattices");
  }

  std::vector<SubgroupLattice> out;
  out.reserve(total);
  for (const auto& d : diagonals) {
    std::vector<std::int64_t> basis(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) basis[j * n + j] = d[j];
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;  // (row, col), row < col
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) free_slots.emplace_back(i, j);
    std::function<void(std::size_t)> fill = [&](std::size_t slot) {
      if (slot == free_slots.size()) {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < n; ++i)
          rows.emplace_back(basis.begin() + static_cast<std::ptrdiff_t>(i * n),
                            basis.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        out.push_back(SubgroupLattice::from_rows(arity, rows));
        return;
      }
      const auto [i, j] = free_slots[slot];
      for (std::int64_t v = 0; v < d[j]; ++v) {
        basis[i * n + j] = v;
        fill(slot + 1);
      }
      basis[i * n + j] = 0;
    };
    fill(0);
  }
  return out;
}

ChainSpec ChainSpec::scaling(int arity, std::int64_t p) {
  check_arity(arity);
  require(p >= 2, ErrorCode::InvalidArgument, "chain base p must be >= 2");
  return ChainSpec{Kind::Scaling, arity, p, {}};
}

ChainSpec ChainSpec::coordinate(int arity, std::int64_t p) {
  check_arity(arity);
  require(p >= 2, ErrorCode::InvalidArgument, "chain base p must be >= 2");
  return ChainSpec{Kind::Coordinate, arity, p, {}};
}

ChainSpec ChainSpec::explicit_list(std::vector<SubgroupLattice> terms) {
  require(!terms.empty(), ErrorCode::InvalidArgument, "explicit chain needs at least one term");
  const int arity = terms.front().arity();
  for (const auto& t : terms)
    require(t.arity() == arity, ErrorCode::ArityMismatch, "chain terms differ in n");
  return ChainSpec{Kind::Explicit, arity, 0, std::move(terms)};
}

std::vector<IntVector> parse_rows(int arity, std::string_view text) {
  check_arity(arity);
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size() || tok.empty())
      fail(ErrorCode::InvalidArgument, "not an integer: '" + std::string(tok) + "'");
    values.push_back(v);
    start = comma + 1;
  }
  const auto n = static_cast<std::size_t>(arity);
  if (values.empty() || values.size() % n != 0)
    fail(ErrorCode::InvalidArgument, "row data length must be a positive multiple of n");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < values.size(); i += n)
    rows.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(i),
                      values.begin() + static_cast<std::ptrdiff_t>(i + n));
  return rows;
}

ChainSpec parse_chain(int arity, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorCode::InvalidArgument, "chain must look like kind:argument");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  auto parse_p = [&] {
    std::int64_t p = 0;
    auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (ec != std::errc() || end != arg.data() + arg.size())
      fail(ErrorCode::InvalidArgument, "chain base must be an integer");
    return p;
  };
  if (kind == "scaling") return ChainSpec::scaling(arity, parse_p());
  if (kind == "coordinate") return ChainSpec::coordinate(arity, parse_p());
  if (kind == "explicit") {
    std::vector<SubgroupLattice> terms;
    std::size_t start = 0;
    while (start <= arg.size()) {
      std::size_t semi = arg.find(';', start);
      if (semi == std::string_view::npos) semi = arg.size();
      terms.push_back(SubgroupLattice::from_rows(arity, parse_rows(arity, arg.substr(start, semi - start))));
      start = semi + 1;
    }
    return ChainSpec::explicit_list(std::move(terms));
  }
  fail(ErrorCode::InvalidArgument, "unknown chain kind '" + std::string(kind) + "'");
}

SubgroupLattice chain_term(const ChainSpec& spec, int s) {
  require(s >= 0, ErrorCode::InvalidArgument, "chain position must be >= 0");
  if (spec.kind == ChainSpec::Kind::Explicit) {
    if (static_cast<std::size_t>(s) >= spec.terms.size())
      fail(ErrorCode::ChainExhausted, "explicit chain has only " +
                                          std::to_string(spec.terms.size()) + " terms");
    return spec.terms[static_cast<std::size_t>(s)];
  }
  std::int64_t scale = 1;
  for (int k = 0; k < s; ++k) scale = checked_mul(scale, spec.prime);
  const auto n = static_cast<std::size_t>(spec.arity);
  std::vector<IntVector> rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    rows[i][i] = (spec.kind == ChainSpec::Kind::Scaling || i == 0) ? scale : 1;
  return SubgroupLattice::from_rows(spec.arity, rows);
}

}  // namespace thompson
