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

// thompson-cli: command-line front end over the C interface.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thompson/thompson.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Failure {
  th_status status;
};

void check(th_status s) {
  if (s != TH_OK) throw Failure{s};
}

// Owns a string returned by the library.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { th_string_free(p); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Word = Handle<th_word, th_word_free>;
using Char = Handle<th_character, th_character_free>;
using Lattice = Handle<th_lattice, th_lattice_free>;

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* boolean(int v) { return v ? "true" : "false"; }

std::size_t env_max_index(std::size_t fallback) {
  const char* v = std::getenv("THOMPSON_SIGMA_MAX_INDEX");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) {
    std::cerr << "error: THOMPSON_SIGMA_MAX_INDEX must be a positive integer\n";
    std::exit(kExitUsage);
  }
  return static_cast<std::size_t>(x);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the groups F_{n,inf}"};
  app.require_subcommand(1);

  int n = 2;
  std::vector<std::string> words;
  std::string chi;
  std::string lattice;
  int m = -1;
  bool assume = false;
  std::string which;
  std::int64_t max_index = 0;
  std::size_t cap = 4096;
  std::string kind = "rg";
  std::string chain = "scaling:2";
  int steps = -1;
  std::string format = "json";
  std::optional<std::int64_t> d0;
  std::string eps;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", n, "arity n >= 2")->check(CLI::Range(2, 1 << 20));
  };

  auto* normalize = app.add_subcommand("normalize", "normal form of a word");
  add_n(normalize);
  normalize->add_option("--word", words, "word such as \"x0 x1^-1\"")->required()->expected(1);

  auto* mul = app.add_subcommand("mul", "product of two words, in normal form");
  add_n(mul);
  mul->add_option("--word", words, "factor (give twice)")->required()->expected(2);

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  add_n(eq);
  eq->add_option("--word", words, "word (give twice)")->required()->expected(2);

  auto* eval_pl = app.add_subcommand("eval-pl", "breakpoints of the PL map of a word");
  add_n(eval_pl);
  eval_pl->add_option("--word", words, "word")->required()->expected(1);

  auto* sigma = app.add_subcommand("sigma", "membership of [chi] in Sigma^m");
  add_n(sigma);
  sigma->add_option("--chi", chi, "character values chi(x_0),...,chi(x_{n-1})")->required();
  sigma->add_option("--m", m, "m >= 1")->required();
  sigma->add_flag("--assume-sigma-m", assume, "accept the conjectural description for n, m >= 3");

  auto* classify = app.add_subcommand("classify-kernel", "finiteness type of a subgroup above G'");
  add_n(classify);
  classify->add_option("--lattice", lattice, "row-major generators in Z^n")->required();
  classify->add_option("--m", m, "largest type examined (default 16)");
  classify->add_flag("--assume-sigma-m", assume, "accept the conjectural description for n, m >= 3");

  auto* auto_matrix = app.add_subcommand("auto-matrix", "automorphism matrices on characters");
  add_n(auto_matrix);
  auto_matrix->add_option("--which", which, "A or C")->required()->check(CLI::IsMember({"A", "C"}));

  auto* orbit = app.add_subcommand("orbit", "orbit of [chi] under the automorphism matrices");
  add_n(orbit);
  orbit->add_option("--chi", chi, "character values")->required();
  orbit->add_option("--cap", cap, "maximum orbit size");

  auto* subgroups = app.add_subcommand("subgroups", "finite-index subgroups above G' in HNF");
  add_n(subgroups);
  subgroups->add_option("--max-index", max_index, "largest index");

  auto* cells = app.add_subcommand("cells", "cell counts of K(H,1) for n = 2");
  add_n(cells);
  cells->add_option("--lattice", lattice, "row-major basis of L")->required();
  cells->add_option("--m", m, "top dimension (default 16)");

  auto* bounds = app.add_subcommand("bounds", "generator, deficiency and chi_m bounds");
  add_n(bounds);
  bounds->add_option("--lattice", lattice, "row-major basis of L")->required();
  bounds->add_option("--m", m, "largest chi_m reported (default 2)");
  bounds->add_option("--d0-override", d0, "numeric value for d0")->check(CLI::PositiveNumber);

  auto* gradient = app.add_subcommand("gradient", "gradient series along a chain");
  add_n(gradient);
  gradient->add_option("--kind", kind, "rg, dg or chi")->check(CLI::IsMember({"rg", "dg", "chi"}));
  gradient->add_option("--m", m, "m for --kind chi (default 2)");
  gradient->add_option("--chain", chain, "scaling:p, coordinate:p or explicit:<rows>;<rows>");
  gradient->add_option("--steps", steps, "last chain position s");
  gradient->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gradient->add_option("--d0-override", d0, "numeric value for d0")->check(CLI::PositiveNumber);
  gradient->add_option("--certify", eps, "print the convergence certificate at this tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    OwnedString out;
    if (normalize->parsed()) {
      Word w;
      check(th_word_parse(n, words[0].c_str(), &w.p));
      check(th_word_normal_form(w.p, &out.p));
      std::cout << "{\"normalForm\": " << quoted(out.p) << "}\n";
    } else if (mul->parsed()) {
      Word a, b, p;
      check(th_word_parse(n, words[0].c_str(), &a.p));
      check(th_word_parse(n, words[1].c_str(), &b.p));
      check(th_word_multiply(a.p, b.p, &p.p));
      check(th_word_normal_form(p.p, &out.p));
      std::cout << "{\"product\": " << quoted(out.p) << "}\n";
    } else if (eq->parsed()) {
      Word a, b;
      check(th_word_parse(n, words[0].c_str(), &a.p));
      check(th_word_parse(n, words[1].c_str(), &b.p));
      int equal = 0;
      check(th_word_equal(a.p, b.p, &equal));
      std::cout << "{\"equal\": " << boolean(equal) << "}\n";
    } else if (eval_pl->parsed()) {
      Word w;
      check(th_word_parse(n, words[0].c_str(), &w.p));
      check(th_word_eval_pl_json(w.p, &out.p));
      std::cout << out.p << "\n";
    } else if (sigma->parsed()) {
      Char c;
      check(th_character_parse(n, chi.c_str(), &c.p));
      int in = 0;
      check(th_sigma(c.p, m, assume ? 1 : 0, &in));
      std::cout << "{\"inSigma\": " << boolean(in) << "}\n";
    } else if (classify->parsed()) {
      check(th_classify_kernel_json(n, lattice.c_str(), m < 0 ? 16 : m, assume ? 1 : 0, &out.p));
      std::cout << out.p << "\n";
    } else if (auto_matrix->parsed()) {
      check(th_auto_matrix_json(n, which.c_str(), &out.p));
      std::cout << out.p << "\n";
    } else if (orbit->parsed()) {
      Char c;
      check(th_character_parse(n, chi.c_str(), &c.p));
      check(th_orbit_json(c.p, cap, &out.p));
      std::cout << out.p << "\n";
    } else if (subgroups->parsed()) {
      const std::size_t limit = env_max_index(64);
      if (max_index == 0) max_index = static_cast<std::int64_t>(limit);
      if (max_index < 1 || static_cast<std::size_t>(max_index) > limit) {
        std::cerr << "error: --max-index must lie in [1, " << limit
                  << "] (raise THOMPSON_SIGMA_MAX_INDEX to allow more)\n";
        return kExitDomain;
      }
      check(th_subgroups_json(n, max_index, 5'000'000, &out.p));
      std::cout << out.p << "\n";
    } else if (cells->parsed()) {
      Lattice l;
      check(th_lattice_parse(n, lattice.c_str(), &l.p));
      check(th_cells_json(l.p, m < 0 ? 16 : static_cast<std::size_t>(m), &out.p));
      std::cout << out.p << "\n";
    } else if (bounds->parsed()) {
      Lattice l;
      check(th_lattice_parse(n, lattice.c_str(), &l.p));
      check(th_bounds_json(l.p, m < 0 ? 2 : static_cast<std::size_t>(m), d0 ? 1 : 0, d0.value_or(0), &out.p));
      std::cout << out.p << "\n";
    } else if (gradient->parsed()) {
      const std::size_t mm = m < 0 ? 2 : static_cast<std::size_t>(m);
      if (!eps.empty()) {
        check(th_gradient_certify(n, kind.c_str(), mm, chain.c_str(), steps, eps.c_str(), &out.p));
        std::cout << out.p << "\n";
      } else {
        check(th_gradient(n, kind.c_str(), mm, chain.c_str(), steps, d0 ? 1 : 0, d0.value_or(0),
                          format.c_str(), &out.p));
        std::cout << out.p;
        if (format == "json") std::cout << "\n";
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << th_status_name(f.status) << ": " << th_last_error() << "\n";
    return f.status == TH_INVALID_ARGUMENT ? kExitUsage : kExitDomain;
  }
  return 0;
}
