// Copyright 2026 The gcclone Authors
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

#ifndef GCCLONE_NELDER_MEAD_H
#define GCCLONE_NELDER_MEAD_H

#include <cstddef>
#include <functional>
#include <vector>

namespace gcclone {

struct NelderMeadOptions {
    /// Objective evaluations allowed, including the initial simplex.
    size_t max_evaluations = 1000;
    /// Edge length of the initial simplex along each coordinate.
    double initial_step = 0.25;
    /// Stop once the spread of simplex values drops below this.
    double value_tolerance = 1e-14;
    /// Each coordinate is clamped to [lower, upper] before evaluation.
    double lower = -1.0;
    double upper = 1.0;
};

struct NelderMeadResult {
    std::vector<double> best_point;
    double best_value;
    size_t evaluations;
};

/// Box-clamped Nelder-Mead minimization.
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double> &)> &objective,
                                      std::vector<double> start, const NelderMeadOptions &options);

}  // namespace gcclone

#endif
