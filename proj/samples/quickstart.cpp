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

// Loads a dataset, prints its landscape summary, then races hill climbing
// against random search on it.
//
//   landscope_sample samples/d3.csv

#include <iostream>

#include "landscope/landscope.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <dataset.csv> [meta.json]\n";
    return 1;
  }
  using namespace landscope;
  try {
    const Dataset ds = argc > 2 ? load_dataset(argv[1], argv[2]) : load_dataset(argv[1]);

    AnalysisSettings settings;
    settings.walk_seed = 1;
    const LandscapeReport rep = analyze(ds, settings);
    std::cout << render(make_bundle(std::vector<LandscapeReport>{rep}), Format::markdown) << "\n";

    std::vector<Trajectory> hc, rs;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      hc.push_back(run_tuner(TunerSpec::parse("hc"), ds, 20, seed));
      rs.push_back(run_tuner(TunerSpec::parse("rs"), ds, 20, seed));
    }
    std::cout << render(make_bundle(compare_trajectories(hc, rs, "hc", "rs")), Format::markdown);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
