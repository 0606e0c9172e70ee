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

#include "thompson/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <limits>
#include <sstream>

#include "thompson/error.hpp"

namespace thompson {

namespace {

void check_arity(int arity) {
  require(arity >= 2, ErrorCode::InvalidArgument, "arity n must be >= 2");
}

void check_same_arity(int a, int b) {
  require(a == b, ErrorCode::ArityMismatch, "operands have different arity");
}

bool is_non_decreasing(const std::vector<GeneratorIndex>& v) {
  return std::is_sorted(v.begin(), v.end());
}

bool is_non_increasing(const std::vector<GeneratorIndex>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

}  // namespace

GroupWord::GroupWord(int arity) : arity_(arity) { check_arity(arity); }

GroupWord::GroupWord(int arity, std::vector<Letter> letters)
    : arity_(arity), letters_(std::move(letters)) {
  check_arity(arity);
  for (const Letter& l : letters_)
    require(l.exponent == 1 || l.exponent == -1, ErrorCode::InvalidArgument,
            "letter exponent must be +1 or -1");
}

GroupWord GroupWord::generator(int arity, GeneratorIndex index, int exponent) {
  return GroupWord(arity, {Letter{index, exponent}});
}

GroupWord GroupWord::concat(const GroupWord& other) const {
  check_same_arity(arity_, other.arity_);
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(arity_, std::move(out));
}

SeminormalForm::SeminormalForm(int arity) : arity_(arity) { check_arity(arity); }

SeminormalForm::SeminormalForm(int arity, std::vector<GeneratorIndex> positive,
                               std::vector<GeneratorIndex> negative)
    : arity_(arity), positive_(std::move(positive)), negative_(std::move(negative)) {
  check_arity(arity);
  require(is_non_decreasing(positive_), ErrorCode::InvalidArgument,
          "positive part must be non-decreasing");
  require(is_non_increasing(negative_), ErrorCode::InvalidArgument,
          "negative part must be non-increasing");
}

GroupWord SeminormalForm::to_word() const {
  std::vector<Letter> letters;
  letters.reserve(positive_.size() + negative_.size());
  for (GeneratorIndex p : positive_) letters.push_back({p, 1});
  for (GeneratorIndex q : negative_) letters.push_back({q, -1});
  return GroupWord(arity_, std::move(letters));
}

// Right-multiplies a seminormal form by single letters.
class Rewriter {
 public:
  Rewriter(SeminormalForm form, const RewriteLimits& limits)
      : form_(std::move(form)), shift_(form_.arity() - 1), limits_(limits) {}

  void push(Letter letter) {
    check_index(letter.index);
    if (letter.exponent > 0)
      push_positive(letter.index);
    else
      push_negative(letter.index);
    cancel_middle();
  }

  SeminormalForm take() && { return std::move(form_); }

 private:
  void check_index(std::uint64_t index) const {
    if (index > limits_.max_index)
      fail(ErrorCode::ResourceLimit,
           "generator index " + std::to_string(index) + " exceeds the cap " +
               std::to_string(limits_.max_index));
  }

  GeneratorIndex shifted(GeneratorIndex index) const {
    std::uint64_t next = std::uint64_t{index} + shift_;
    check_index(next);
    return static_cast<GeneratorIndex>(next);
  }

  // Move x_k leftwards through the inverse letters, then into the positive part.
  void push_positive(GeneratorIndex k) {
    auto& neg = form_.negative_;
    for (std::size_t j = neg.size(); j-- > 0;) {
      if (neg[j] == k) {
        neg.erase(neg.begin() + static_cast<std::ptrdiff_t>(j));
        return;
      }
      if (k < neg[j])
        neg[j] = shifted(neg[j]);
      else
        k = shifted(k);
    }
    auto& pos = form_.positive_;
    std::size_t at = pos.size();
    while (at > 0 && pos[at - 1] > k) {
      pos[at - 1] = shifted(pos[at - 1]);
      --at;
    }
    pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(at), k);
  }

  // x_q^-1 x_k^-1 with q < k becomes x_{k+n-1}^-1 x_q^-1.
  void push_negative(GeneratorIndex k) {
    auto& neg = form_.negative_;
    std::size_t at = neg.size();
    while (at > 0 && neg[at - 1] < k) {
      k = shifted(k);
      --at;
    }
    neg.insert(neg.begin() + static_cast<std::ptrdiff_t>(at), k);
  }

  void cancel_middle() {
    auto& pos = form_.positive_;
    auto& neg = form_.negative_;
    std::size_t cut = 0;
    while (cut < pos.size() && cut < neg.size() &&
           pos[pos.size() - 1 - cut] == neg[cut])
      ++cut;
    if (cut == 0) return;
    pos.resize(pos.size() - cut);
    neg.erase(neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(cut));
  }

  SeminormalForm form_;
  GeneratorIndex shift_;
  RewriteLimits limits_;
};

GroupWord parse_word(int arity, std::string_view text) {
  check_arity(arity);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InvalidArgument,
         "cannot parse word '" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != 'x') bad("expected 'x' at offset " + std::to_string(pos));
    ++pos;
    std::uint64_t index = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), index);
    if (ec != std::errc() || end == text.data() + pos) bad("missing generator index");
    if (index > std::numeric_limits<GeneratorIndex>::max()) bad("index too large");
    pos = static_cast<std::size_t>(end - text.data());
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '+') ++pos;
      auto [e_end, e_ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), exponent);
      if (e_ec != std::errc() || e_end == text.data() + pos) bad("missing exponent");
      pos = static_cast<std::size_t>(e_end - text.data());
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      bad("unexpected character at offset " + std::to_string(pos));
    if (exponent > 1'000'000 || exponent < -1'000'000) bad("exponent out of range");
    const int sign = exponent < 0 ? -1 : 1;
    for (long long e = 0; e < (exponent < 0 ? -exponent : exponent); ++e)
      letters.push_back({static_cast<GeneratorIndex>(index), sign});
    skip_space();
  }
  return GroupWord(arity, std::move(letters));
}

std::string to_string(const GroupWord& word) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : word.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << l.index;
    if (l.exponent < 0) out << "^-1";
  }
  return out.str();
}

std::string to_string(const SeminormalForm& form) { return to_string(form.to_word()); }

SeminormalForm rewrite_to_seminormal(const GroupWord& word, const RewriteLimits& limits) {
  Rewriter rw(SeminormalForm(word.arity()), limits);
  for (const Letter& l : word.letters()) rw.push(l);
  return std::move(rw).take();
}

SeminormalForm multiply(const SeminormalForm& u, const SeminormalForm& v,
                        const RewriteLimits& limits) {
  check_same_arity(u.arity(), v.arity());
  Rewriter rw(u, limits);
  for (GeneratorIndex p : v.positive()) rw.push({p, 1});
  for (GeneratorIndex q : v.negative()) rw.push({q, -1});
  return std::move(rw).take();
}

GroupWord invert(const GroupWord& word) {
  std::vector<Letter> out(word.letters().rbegin(), word.letters().rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return GroupWord(word.arity(), std::move(out));
}

std::size_t abelian_coordinate(int arity, GeneratorIndex index) {
  if (index == 0) return 0;
  return 1 + (index - 1) % static_cast<GeneratorIndex>(arity - 1);
}

std::vector<std::int64_t> abelianize(const GroupWord& word) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(word.arity()), 0);
  for (const Letter& l : word.letters())
    out[abelian_coordinate(word.arity(), l.index)] += l.exponent;
  return out;
}

SeminormalForm reduce(const SeminormalForm& form) {
  const GeneratorIndex shift = static_cast<GeneratorIndex>(form.arity() - 1);
  std::vector<GeneratorIndex> pos = form.positive();
  std::vector<GeneratorIndex> neg = form.negative();

  auto blocks = [&](GeneratorIndex i, GeneratorIndex x) {
    return x >= i + 1 && x <= i + shift;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // Try candidate indices from the largest down; `pos` ascending, `neg` descending.
    std::vector<GeneratorIndex> common;
    std::set_intersection(pos.begin(), pos.end(), neg.rbegin(), neg.rend(),
                          std::back_inserter(common));
    common.erase(std::unique(common.begin(), common.end()), common.end());
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      const GeneratorIndex i = *it;
      // Last x_i in the positive part, first x_i^-1 in the negative part;
      // everything between them has index > i.
      const auto a = static_cast<std::size_t>(
          std::upper_bound(pos.begin(), pos.end(), i) - pos.begin() - 1);
      const auto b = static_cast<std::size_t>(
          std::find(neg.begin(), neg.end(), i) - neg.begin());
      bool blocked = false;
      for (std::size_t k = a + 1; k < pos.size() && !blocked; ++k) blocked = blocks(i, pos[k]);
      for (std::size_t k = 0; k < b && !blocked; ++k) blocked = blocks(i, neg[k]);
      if (blocked) continue;
      for (std::size_t k = a + 1; k < pos.size(); ++k) pos[k] -= shift;
      for (std::size_t k = 0; k < b; ++k) neg[k] -= shift;
      pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(a));
      neg.erase(neg.begin() + static_cast<std::ptrdiff_t>(b));
      changed = true;
      break;
    }
  }
  return SeminormalForm(form.arity(), std::move(pos), std::move(neg));
}

SeminormalForm normal_form(const GroupWord& word, const RewriteLimits& limits) {
  return reduce(rewrite_to_seminormal(word, limits));
}

bool are_equal(const GroupWord& u, const GroupWord& v, const RewriteLimits& limits) {
  check_same_arity(u.arity(), v.arity());
  return normal_form(u, limits) == normal_form(v, limits);
}

}  // namespace thompson
