// Copyright 2026 The gge Authors
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gge/state.hpp"

namespace gge::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitInvariant = 3,
    kExitNumerical = 4,
};

/// p/q with q <= max_denominator matching v within tol, smallest q first.
std::optional<std::pair<long long, long long>> as_rational(double v, long long max_denominator = 10000,
                                                           double tol = 1e-10);
/// "%.12g".
std::string format_decimal(double v);
/// "p/q" or "p" from as_rational, "" when there is none.
std::string format_rational(double v);

/// Named state or state file. Names are the factory tags plus the aliases
/// ghz<M>x<N> (M copies of GHZ_N) and zhg2x3.
struct StateSource {
    std::string name;
    std::string file;
    std::size_t num_sites = 0;
};

/// Throws InvalidArgument for unusable sources; file invariant violations
/// propagate as InvariantViolation.
std::pair<PureState, std::string> load_state(const StateSource &source);

struct MeasureOptions {
    StateSource source;
    std::size_t n = 1;
    std::vector<std::size_t> gaps;
    unsigned threads = 1;
};

struct MesCheckOptions {
    StateSource source;
    std::optional<std::size_t> n_max;
};

struct IsingOptions {
    double lambda_min = 0.0;
    double lambda_max = 2.0;
    std::size_t steps = 201;
    std::size_t max_gap = 15;
    std::string out;
    double tol = 1e-10;
    unsigned threads = 1;
    bool unrooted_kernel = false;
};

struct EdCheckOptions {
    std::size_t num_sites = 12;
    double lambda = 0.5;
    std::string boundary = "periodic";
    std::size_t max_distance = 2;
};

int cmd_measure(const MeasureOptions &options, std::ostream &out, std::ostream &err);
int cmd_tables(int which, std::size_t num_sites, std::ostream &out, std::ostream &err);
int cmd_mes_check(const MesCheckOptions &options, std::ostream &out, std::ostream &err);
int cmd_ising(const IsingOptions &options, std::ostream &out, std::ostream &err);
int cmd_ed_check(const EdCheckOptions &options, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gge::cli
