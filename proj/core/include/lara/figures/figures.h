//
// Copyright 2026 The Lara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LARA_FIGURES_FIGURES_H_
#define LARA_FIGURES_FIGURES_H_

#include <string>
#include <vector>

#include "lara/table/table.h"

namespace lara {

// Worked examples with known answers. Each panel recomputes one or more
// tables from embedded inputs and pairs them with the expected tables.

struct FigureCheck {
  std::string name;
  Table expected;
  Table actual;
  // Absolute tolerance for reals; 1e-3 where the expected values were
  // rounded to three decimals.
  double tolerance;

  bool Matches() const { return TablesEqual(actual, expected, tolerance); }
};

struct FigurePanel {
  std::string id;  // e.g. "13f"
  std::string caption;
  std::vector<FigureCheck> checks;

  bool Matches() const;
};

// Panel ids in presentation order.
std::vector<std::string> FigurePanelIds();

// Recomputes one panel. Throws DomainError for unknown ids.
FigurePanel ReproduceFigure(const std::string& id);

// "all", a figure number such as "13" (every panel of that figure), or a
// panel id. Throws DomainError when nothing matches.
std::vector<FigurePanel> ReproduceFigures(const std::string& selector);

}  // namespace lara

#endif  // LARA_FIGURES_FIGURES_H_
