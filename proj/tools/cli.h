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

#ifndef GCCLONE_TOOLS_CLI_H
#define GCCLONE_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcclone/cloning.h"
#include "gcclone/nosignalling.h"

namespace gcclone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    uint64_t seed = 20260101;
    double psd_tol = kPsdTolerance;
    double radius_tol = 1e-3;
    size_t budget = 5000;
    size_t samples = 200;
};

/// Throws std::invalid_argument on non-positive tolerances or counts.
void validate(const RunConfig &config);

struct SweepRow {
    double phi;
    double eta1;
    double eta2;
    double max_radius_found;
    double circle_radius = 1.0;
    double deviation;
};

struct FidelityRow {
    double phi;
    double eta1;
    double eta2;
    double fidelity_o;
    double fidelity_b;
    double ppt_min_eig;
    double isotropy_residual;
};

inline constexpr const char *kBoundSweepHeader = "phi,eta1,eta2,max_radius_found,circle_radius,deviation";
inline constexpr const char *kFidelitySweepHeader = "phi,eta1,eta2,fidelity_o,fidelity_b,ppt_min_eig,isotropy_residual";

/// Fixed notation, ten digits after the point, independent of the global locale.
std::string format_number(double x);

std::vector<SweepRow> bound_sweep_rows(size_t n_phi, const RunConfig &config);
std::vector<FidelityRow> fidelity_sweep_rows(size_t n_points, const RunConfig &config);

std::string bound_sweep_csv(const std::vector<SweepRow> &rows);
std::string fidelity_sweep_csv(const std::vector<FidelityRow> &rows);

struct InvariantResult {
    std::string name;
    double measured;
    double limit;
    bool passed;
    std::string note;
};

/// Every module invariant, sampled with the config's seed and sizes.
std::vector<InvariantResult> run_invariant_suite(const RunConfig &config);

int cmd_verify(const RunConfig &config, std::ostream &out);
int cmd_clone(double theta, double eta1, double eta2, const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_bound_sweep(size_t n_phi, const RunConfig &config, const std::string &out_path, std::ostream &out,
                    std::ostream &err);
int cmd_fidelity_sweep(size_t n_points, const RunConfig &config, const std::string &out_path, std::ostream &out,
                       std::ostream &err);

/// Parses argv and dispatches to a subcommand. Returns the process exit code.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gcclone::cli

#endif
