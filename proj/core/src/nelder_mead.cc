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

#include "gcclone/nelder_mead.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcclone {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double> &)> &objective,
                                      std::vector<double> start, const NelderMeadOptions &options) {
    if (start.empty()) {
        throw std::invalid_argument("empty starting point");
    }
    size_t n = start.size();
    size_t evaluations = 0;

    auto clamp = [&](std::vector<double> &p) {
        for (double &x : p) {
            x = std::clamp(x, options.lower, options.upper);
        }
    };
    auto evaluate = [&](std::vector<double> &p) {
        clamp(p);
        evaluations++;
        return objective(p);
    };

    std::vector<std::vector<double>> simplex(n + 1, start);
    std::vector<double> values(n + 1);
    clamp(simplex[0]);
    values[0] = evaluate(simplex[0]);
    for (size_t k = 0; k < n && evaluations < options.max_evaluations; k++) {
        auto &vertex = simplex[k + 1];
        // Step away from the nearer wall so the simplex never collapses on a bound.
        double step = vertex[k] + options.initial_step <= options.upper ? options.initial_step : -options.initial_step;
        vertex[k] += step;
        values[k + 1] = evaluate(vertex);
    }
    if (evaluations < n + 1) {
        size_t best = static_cast<size_t>(std::min_element(values.begin(), values.begin() + evaluations) - values.begin());
        return {simplex[best], values[best], evaluations};
    }

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n);
    std::vector<double> trial(n);
    std::vector<double> trial2(n);

    while (evaluations < options.max_evaluations) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
        size_t best = order.front();
        size_t worst = order.back();
        size_t second_worst = order[n - 1];

        if (values[worst] - values[best] <= options.value_tolerance) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t v = 0; v <= n; v++) {
            if (v == worst) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                centroid[k] += simplex[v][k] / static_cast<double>(n);
            }
        }

        for (size_t k = 0; k < n; k++) {
            trial[k] = centroid[k] + kReflect * (centroid[k] - simplex[worst][k]);
        }
        double reflected = evaluate(trial);

        if (reflected < values[best]) {
            if (evaluations >= options.max_evaluations) {
                simplex[worst] = trial;
                values[worst] = reflected;
                break;
            }
            for (size_t k = 0; k < n; k++) {
                trial2[k] = centroid[k] + kExpand * (trial[k] - centroid[k]);
            }
            double expanded = evaluate(trial2);
            if (expanded < reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        if (evaluations >= options.max_evaluations) {
            break;
        }

        bool outside = reflected < values[worst];
        const auto &anchor = outside ? trial : simplex[worst];
        for (size_t k = 0; k < n; k++) {
            trial2[k] = centroid[k] + kContract * (anchor[k] - centroid[k]);
        }
        double contracted = evaluate(trial2);
        if (contracted < std::min(reflected, values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }

        for (size_t v = 0; v <= n && evaluations < options.max_evaluations; v++) {
            if (v == best) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                simplex[v][k] = simplex[best][k] + kShrink * (simplex[v][k] - simplex[best][k]);
            }
            values[v] = evaluate(simplex[v]);
        }
    }

    size_t best = static_cast<size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    return {simplex[best], values[best], evaluations};
}

}  // namespace gcclone
