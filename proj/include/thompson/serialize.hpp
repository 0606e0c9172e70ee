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

#pragma once

// JSON and CSV renderings shared by the C API. Rationals are "p/q" strings,
// integers are JSON numbers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thompson/autos.hpp"
#include "thompson/charspace.hpp"
#include "thompson/complexes.hpp"
#include "thompson/gradients.hpp"
#include "thompson/lattices.hpp"
#include "thompson/plrep.hpp"

namespace thompson {

using Json = nlohmann::ordered_json;

Json to_json(const Character& chi);
/// Breakpoints as [x_num, x_den, y_num, y_den] decimal strings.
Json to_json(const PLMap& map);
Json to_json(const FinitenessReport& report);
Json to_json(const CharacterMatrix& m);
Json to_json(const std::vector<SpherePoint>& orbit);
/// Row-major HNF basis.
Json to_json(const SubgroupLattice& lattice);
/// counts r(0..m), the affine tail (or null) and the case tag.
Json to_json(const SubgroupCells& cells, std::size_t m);
/// d0 given: dUpper becomes a number. Otherwise symbolic bounds are strings.
Json to_json(const BoundReport& report, std::optional<std::int64_t> d0 = std::nullopt);
Json to_json(const GradientSeries& series);

const char* to_string(GradientKind kind) noexcept;

/// Header "s,index,lower,upper", one line per row.
std::string to_csv(const GradientSeries& series);

}  // namespace thompson
