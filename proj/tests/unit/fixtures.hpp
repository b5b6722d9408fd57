// Copyright 2026 The Landscope Authors.
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

// Small hand-built datasets shared by the unit tests.

#pragma once

#include <string>
#include <vector>

#include "landscope/dataset.hpp"
#include "landscope/synthetic.hpp"

namespace fixtures {

using landscope::Configuration;
using landscope::Dataset;
using landscope::Objective;
using landscope::Row;

inline Configuration bits(const std::string& s) {
  Configuration c;
  for (char ch : s) c.values.push_back(ch == '1' ? 1u : 0u);
  return c;
}

// Binary rows given as bit strings.
inline Dataset rows(const std::vector<std::pair<std::string, double>>& items,
                    Objective objective = Objective::minimize) {
  std::vector<Row> out;
  for (const auto& [b, f] : items) out.push_back({bits(b), f});
  return Dataset::create("toy", "w", objective, landscope::synthetic::binary_options(items.front().first.size()),
                         std::move(out));
}

// f = 4a + 2b + c over the 3-bit cube.
inline Dataset d3(Objective objective = Objective::minimize) {
  return landscope::synthetic::cube(3, landscope::synthetic::linear({4, 2, 1}), objective, "toy", "d3");
}

// f(000) = 0, f(111) = 1, every other row 5.
inline Dataset d3b() {
  return rows({{"000", 0}, {"001", 5}, {"010", 5}, {"011", 5}, {"100", 5}, {"101", 5}, {"110", 5}, {"111", 1}});
}

}  // namespace fixtures
