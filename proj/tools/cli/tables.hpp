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
#include <string>
#include <vector>

namespace gge::cli {

struct TableCell {
    double computed = 0.0;
    double reference = 0.0;
    bool match = false;
};

struct TableRow {
    std::string label;
    std::vector<TableCell> cells;
    /// Mismatches in this row are known and reported as DISCREPANCY.
    bool known_discrepancy = false;
};

struct Table {
    std::string title;
    std::string computed_by;  // how the computed column was obtained
    std::string reference_by;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
    double tolerance = 1e-12;
    std::vector<std::string> notes;

    bool all_match() const;
};

/// GHZ_N, EPR_N, W_N by brute force at N sites against the closed forms.
/// EPR is skipped for odd N. Requires 4 <= N <= 20.
Table table_one(std::size_t num_sites);
/// Closed forms at N = 10^6 against the thermodynamic limits.
Table table_two();
/// EPR_2 and g_1: E_G^(1), E_G^(2), G(2,1), E_B^(1), E_B^(2).
Table table_three();
/// EPR_2, PHI1..3, CHI: E_G^(1), E_G^(2), G(2,1), G(2,2), G(2,3).
Table table_four();

void print_table(const Table &table, std::ostream &out);

}  // namespace gge::cli
