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

#include "thompson/serialize.hpp"

namespace thompson {

Json to_json(const Character& chi) {
  Json out = Json::array();
  for (const Rational& v : chi.values()) out.push_back(to_fraction_string(v));
  return out;
}

Json to_json(const PLMap& map) {
  Json points = Json::array();
  for (const Breakpoint& b : map.breakpoints())
    points.push_back(Json::array({b.x.get_num().get_str(), b.x.get_den().get_str(),
                                  b.y.get_num().get_str(), b.y.get_den().get_str()}));
  return points;
}

Json to_json(const FinitenessReport& report) {
  Json out;
  out["finitelyGenerated"] = report.finitely_generated;
  if (report.max_certified_type)
    out["maxType"] = *report.max_certified_type;
  else
    out["maxType"] = "infinity";
  out["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  out["assumedConjecture"] = report.assumed_conjecture;
  out["complete"] = report.complete;
  return out;
}

Json to_json(const CharacterMatrix& m) {
  const auto n = static_cast<std::size_t>(m.arity());
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<SpherePoint>& orbit) {
  Json out = Json::array();
  for (const SpherePoint& p : orbit) out.push_back(to_json(p.representative()));
  return out;
}

Json to_json(const SubgroupLattice& lattice) { return lattice.basis(); }

Json to_json(const SubgroupCells& cells, std::size_t m) {
  Json out;
  out["counts"] = cells.cells.materialize(m);
  if (const auto& t = cells.cells.tail())
    out["tail"] = Json{{"a", t->a}, {"b", t->b}, {"from", t->from}};
  else
    out["tail"] = nullptr;
  out["case"] = to_string(cells.case_tag);
  return out;
}

Json to_json(const BoundReport& report, std::optional<std::int64_t> d0) {
  Json out;
  if (!report.d_upper.plus_d0)
    out["dUpper"] = report.d_upper.constant;
  else if (d0)
    out["dUpper"] = checked_add(report.d_upper.constant, *d0);
  else
    out["dUpper"] = report.d_upper.render();
  out["case"] = to_string(report.case_tag);
  out["defLower"] = report.def_lower ? Json(*report.def_lower) : Json(nullptr);
  out["defUpper"] = report.def_upper;
  out["chiValues"] = report.chi_values;
  return out;
}

const char* to_string(GradientKind kind) noexcept {
  switch (kind) {
    case GradientKind::RG: return "rg";
    case GradientKind::DG: return "dg";
    case GradientKind::CHI: return "chi";
  }
  return "?";
}

Json to_json(const GradientSeries& series) {
  Json rows = Json::array();
  for (const GradientRow& r : series.rows)
    rows.push_back(Json{{"s", r.s},
                        {"index", r.index},
                        {"lower", to_fraction_string(r.lower)},
                        {"upper", r.render_upper()}});
  Json out{{"kind", to_string(series.kind)}};
  if (series.kind == GradientKind::CHI) out["m"] = series.m;
  out["rows"] = std::move(rows);
  return out;
}

std::string to_csv(const GradientSeries& series) {
  std::string out = "s,index,lower,upper\n";
  for (const GradientRow& r : series.rows)
    out += std::to_string(r.s) + "," + std::to_string(r.index) + "," +
           to_fraction_string(r.lower) + "," + r.render_upper() + "\n";
  return out;
}

}  // namespace thompson
