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

#include "thompson/thompson.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "thompson/error.hpp"
#include "thompson/serialize.hpp"
#include "thompson/words.hpp"

struct th_word {
  thompson::GroupWord word;
};
struct th_character {
  thompson::Character chi;
};
struct th_lattice {
  thompson::SubgroupLattice lattice;
};

namespace {

thread_local std::string last_error;

th_status status_of(thompson::ErrorCode code) {
  using thompson::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TH_INVALID_ARGUMENT;
    case ErrorCode::ArityMismatch: return TH_ARITY_MISMATCH;
    case ErrorCode::ZeroCharacter: return TH_ZERO_CHARACTER;
    case ErrorCode::ConjectureRequired: return TH_CONJECTURE_REQUIRED;
    case ErrorCode::ResourceLimit: return TH_RESOURCE_LIMIT;
    case ErrorCode::Precondition: return TH_PRECONDITION;
    case ErrorCode::InvariantViolation: return TH_INVARIANT_VIOLATION;
    case ErrorCode::ChainExhausted: return TH_CHAIN_EXHAUSTED;
    case ErrorCode::SeriesTooShort: return TH_SERIES_TOO_SHORT;
  }
  return TH_INTERNAL;
}

template <class F>
th_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TH_OK;
  } catch (const thompson::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TH_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TH_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) thompson::fail(thompson::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  need(out, "output pointer");
  *out = copy_out(s);
}

thompson::GradientSeries build_series(int n, const char* kind, size_t m, const char* chain, int steps,
                                      int has_d0, int64_t d0) {
  using namespace thompson;
  need(kind, "kind");
  need(chain, "chain");
  const ChainSpec spec = parse_chain(n, chain);
  const std::optional<int> s = steps < 0 ? std::nullopt : std::optional<int>(steps);
  const std::string k = kind;
  if (k == "rg")
    return rank_gradient_series(spec, s, has_d0 ? std::optional<std::int64_t>(d0) : std::nullopt);
  if (k == "dg") return deficiency_gradient_series(spec, s);
  if (k == "chi") return chi_m_gradient_series(spec, m, s);
  fail(ErrorCode::InvalidArgument, "kind must be rg, dg or chi");
}

}  // namespace

extern "C" {

const char* th_status_name(th_status status) {
  switch (status) {
    case TH_OK: return "ok";
    case TH_INVALID_ARGUMENT: return "invalid-argument";
    case TH_ARITY_MISMATCH: return "arity-mismatch";
    case TH_ZERO_CHARACTER: return "zero-character";
    case TH_CONJECTURE_REQUIRED: return "conjecture-required";
    case TH_RESOURCE_LIMIT: return "resource-limit";
    case TH_PRECONDITION: return "precondition";
    case TH_INVARIANT_VIOLATION: return "invariant-violation";
    case TH_CHAIN_EXHAUSTED: return "chain-exhausted";
    case TH_SERIES_TOO_SHORT: return "series-too-short";
    case TH_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* th_last_error(void) { return last_error.c_str(); }

void th_string_free(char* s) { std::free(s); }

th_status th_word_parse(int n, const char* text, th_word** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new th_word{thompson::parse_word(n, text)};
  });
}

void th_word_free(th_word* w) { delete w; }

th_status th_word_to_string(const th_word* w, char** out) {
  return guarded([&] {
    need(w, "word");
    emit(out, thompson::to_string(w->word));
  });
}

th_status th_word_normal_form(const th_word* w, char** out) {
  return guarded([&] {
    need(w, "word");
    emit(out, thompson::to_string(thompson::normal_form(w->word)));
  });
}

th_status th_word_multiply(const th_word* a, const th_word* b, th_word** out) {
  return guarded([&] {
    need(a, "word");
    need(b, "word");
    need(out, "output pointer");
    *out = new th_word{a->word.concat(b->word)};
  });
}

th_status th_word_invert(const th_word* w, th_word** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "output pointer");
    *out = new th_word{thompson::invert(w->word)};
  });
}

th_status th_word_equal(const th_word* a, const th_word* b, int* out) {
  return guarded([&] {
    need(a, "word");
    need(b, "word");
    need(out, "output pointer");
    *out = thompson::are_equal(a->word, b->word) ? 1 : 0;
  });
}

th_status th_word_equal_pl(const th_word* a, const th_word* b, int* out) {
  return guarded([&] {
    need(a, "word");
    need(b, "word");
    need(out, "output pointer");
    *out = thompson::maps_equal(thompson::evaluate_word(a->word), thompson::evaluate_word(b->word)) ? 1 : 0;
  });
}

th_status th_word_eval_pl_json(const th_word* w, char** out) {
  return guarded([&] {
    need(w, "word");
    emit(out, thompson::to_json(thompson::evaluate_word(w->word)).dump());
  });
}

th_status th_character_parse(int n, const char* text, th_character** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new th_character{thompson::parse_character(n, text)};
  });
}

void th_character_free(th_character* c) { delete c; }

th_status th_sigma(const th_character* c, int m, int assume_conjecture, int* in_sigma) {
  return guarded([&] {
    need(c, "character");
    need(in_sigma, "output pointer");
    *in_sigma = thompson::in_sigma_m(c->chi, m, assume_conjecture != 0) ? 1 : 0;
  });
}

th_status th_orbit_json(const th_character* c, size_t cap, char** out) {
  return guarded([&] {
    need(c, "character");
    emit(out, thompson::to_json(thompson::d_orbit(thompson::SpherePoint(c->chi), cap)).dump());
  });
}

th_status th_classify_kernel_json(int n, const char* rows, int m_max, int assume_conjecture,
                                  char** out) {
  return guarded([&] {
    need(rows, "rows");
    const auto gens = thompson::parse_rows(n, rows);
    emit(out, thompson::to_json(thompson::kernel_finiteness(n, gens, m_max, assume_conjecture != 0)).dump());
  });
}

th_status th_auto_matrix_json(int n, const char* which, char** out) {
  return guarded([&] {
    using namespace thompson;
    need(which, "which");
    const std::string w = which;
    if (w != "A" && w != "C") fail(ErrorCode::InvalidArgument, "matrix must be A or C");
    const CharacterMatrix m = w == "A" ? matrix_A(n) : matrix_C(n);
    const auto order = order_of(m, 4 * n + 4);
    Json j{{"which", w}, {"n", n}, {"matrix", to_json(m)}};
    j["order"] = order ? Json(*order) : Json(nullptr);
    j["determinant"] = to_fraction_string(m.determinant());
    emit(out, j.dump());
  });
}

th_status th_lattice_parse(int n, const char* rows, th_lattice** out) {
  return guarded([&] {
    need(rows, "rows");
    need(out, "output pointer");
    *out = new th_lattice{thompson::SubgroupLattice::from_rows(n, thompson::parse_rows(n, rows))};
  });
}

void th_lattice_free(th_lattice* l) { delete l; }

th_status th_lattice_index(const th_lattice* l, int64_t* out) {
  return guarded([&] {
    need(l, "lattice");
    need(out, "output pointer");
    *out = thompson::index(l->lattice);
  });
}

th_status th_lattice_json(const th_lattice* l, char** out) {
  return guarded([&] {
    need(l, "lattice");
    emit(out, thompson::to_json(l->lattice).dump());
  });
}

th_status th_subgroups_json(int n, int64_t max_index, size_t cap, char** out) {
  return guarded([&] {
    using namespace thompson;
    const auto all = enumerate_subgroups(n, max_index, cap);
    Json list = Json::array();
    for (const SubgroupLattice& l : all) list.push_back(to_json(l));
    emit(out, list.dump());
  });
}

th_status th_cells_json(const th_lattice* l, size_t m, char** out) {
  return guarded([&] {
    need(l, "lattice");
    const size_t truncation = m > 16 ? m : 16;
    emit(out, thompson::to_json(thompson::cells_for_subgroup_F(l->lattice, truncation), m).dump());
  });
}

th_status th_bounds_json(const th_lattice* l, size_t max_chi_m, int has_d0, int64_t d0, char** out) {
  return guarded([&] {
    need(l, "lattice");
    if (has_d0) thompson::require(d0 >= 1, thompson::ErrorCode::InvalidArgument, "d0 must be >= 1");
    const auto report = thompson::d_bound(l->lattice, max_chi_m);
    emit(out, thompson::to_json(report, has_d0 ? std::optional<std::int64_t>(d0) : std::nullopt).dump());
  });
}

th_status th_gradient(int n, const char* kind, size_t m, const char* chain, int steps, int has_d0,
                      int64_t d0, const char* format, char** out) {
  return guarded([&] {
    need(format, "format");
    const std::string f = format;
    if (f != "json" && f != "csv") thompson::fail(thompson::ErrorCode::InvalidArgument, "format must be json or csv");
    const auto series = build_series(n, kind, m, chain, steps, has_d0, d0);
    emit(out, f == "csv" ? thompson::to_csv(series) : thompson::to_json(series).dump());
  });
}

th_status th_gradient_certify(int n, const char* kind, size_t m, const char* chain, int steps,
                              const char* eps, char** out) {
  return guarded([&] {
    need(eps, "eps");
    const auto series = build_series(n, kind, m, chain, steps, 0, 0);
    const auto cert = thompson::certify_convergence(series, thompson::parse_rational(eps));
    thompson::Json j{{"certified", cert.certified}};
    j["firstS"] = cert.first_s ? thompson::Json(*cert.first_s) : thompson::Json(nullptr);
    emit(out, j.dump());
  });
}

}  // extern "C"
