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
#include <optional>
#include <string>
#include <vector>

#include "gge/rdm.hpp"
#include "gge/state.hpp"

namespace gge {

/// Class index n together with the offsets i_1 < ... < i_{n-1} of the other
/// members relative to the first site. Subsets of a class are
/// {j, j+i_1, ..., j+i_{n-1}} for j = 1 .. N - i_{n-1} (open chain).
class GapVector {
  public:
    /// Validated against a chain of `num_sites` sites.
    GapVector(std::size_t num_sites, std::vector<std::size_t> gaps);

    std::size_t n() const { return gaps_.size() + 1; }
    const std::vector<std::size_t> &gaps() const { return gaps_; }
    std::size_t num_sites() const { return num_sites_; }
    std::size_t last_gap() const { return gaps_.empty() ? 0 : gaps_.back(); }
    /// N - i_{n-1}.
    std::size_t member_count() const { return num_sites_ - last_gap(); }
    /// Sites of the j-th member, 1 <= j <= member_count().
    SiteSubset member(std::size_t j) const;

    std::string label() const;  // e.g. "G(3,1,4)"

    bool operator==(const GapVector &) const = default;

  private:
    std::size_t num_sites_;
    std::vector<std::size_t> gaps_;
};

/// All C(N-1, n-1) gap classes of class n, lexicographic.
std::vector<GapVector> enumerate_gap_classes(std::size_t num_sites, std::size_t n);

/// All C(N, n) n-subsets of 1..N, lexicographic.
std::vector<SiteSubset> enumerate_subsets(std::size_t num_sites, std::size_t n);

/// Mean linear entropy over the members of one gap class.
double g_measure(const PureState &s, const GapVector &gv);

/// Generalized global entanglement: mean of g_measure over all gap classes.
/// The reduction runs in lexicographic class order whatever `threads` is.
double e_g(const PureState &s, std::size_t n, unsigned threads = 1);

/// Mean linear entropy over all C(N, n) subsets, each weighted equally.
double e_g_uniform(const PureState &s, std::size_t n);

/// Linear entropy of the block {1..n} against the rest.
double block_entanglement(const PureState &s, std::size_t n);

struct Def1Verdict {
    double g1 = 0.0;
    double g2[3] = {0.0, 0.0, 0.0};  // G(2,1), G(2,2), G(2,3)
    bool genuine = false;
};

inline constexpr double kDef1Tolerance = 1e-9;
inline constexpr double kDef1Threshold = 2.0 / 3.0;

/// Four-qubit test: G(1) = 1 and every G(2,i) >= 2/3 (the GHZ_4 value).
Def1Verdict mes_check_def1(const PureState &s);

struct PurityWitness {
    SiteSubset subset;
    double purity;
};

struct Def2Verdict {
    std::size_t n_max = 0;
    std::size_t subsets_checked = 0;
    bool genuine = false;
    std::vector<PurityWitness> violations;  // every subset above threshold
};

inline constexpr double kDef2Threshold = 0.5;
inline constexpr double kDef2Tolerance = 1e-9;

/// N-qubit test: every k-site reduction, k <= n_max, has purity <= 1/2.
Def2Verdict mes_check_def2(const PureState &s, std::size_t n_max);

struct GapValue {
    GapVector gaps;
    double value;
};

struct MeasureReport {
    std::string label;
    std::size_t n = 0;
    std::vector<GapValue> classes;
    double e_g = 0.0;
    double e_g_uniform = 0.0;
    double e_b = 0.0;
    std::optional<Def1Verdict> def1;
    std::optional<Def2Verdict> def2;
};

/// Everything the measure command prints for class n. Definition verdicts are
/// attached when applicable (def1 for four qubits, def2 with n_max = n).
MeasureReport measure_report(const PureState &s, std::string label, std::size_t n);

}  // namespace gge
