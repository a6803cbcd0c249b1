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

#include "tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "commands.hpp"
#include "gge/error.hpp"
#include "gge/measure.hpp"
#include "reference.hpp"

namespace gge::cli {

namespace {

TableRow make_row(std::string label, const std::vector<double> &computed, const std::vector<double> &reference,
                  double tol) {
    TableRow row{std::move(label), {}, false};
    for (std::size_t k = 0; k < computed.size(); ++k) {
        row.cells.push_back({computed[k], reference[k], std::abs(computed[k] - reference[k]) <= tol});
    }
    return row;
}

std::vector<double> four_qubit_values(const PureState &s) {
    return {e_g(s, 1), e_g(s, 2), g_measure(s, GapVector(4, {1})), g_measure(s, GapVector(4, {2})),
            g_measure(s, GapVector(4, {3}))};
}

std::vector<double> block_values(const PureState &s) {
    return {e_g(s, 1), e_g(s, 2), g_measure(s, GapVector(4, {1})), block_entanglement(s, 1), block_entanglement(s, 2)};
}

std::string cell_text(double v) {
    const std::string r = format_rational(v);
    const std::string d = format_decimal(v);
    return r.empty() || r == d ? d : r + " (" + d + ")";
}

}  // namespace

bool Table::all_match() const {
    for (const auto &row : rows) {
        for (const auto &c : row.cells) {
            if (!c.match) return false;
        }
    }
    return true;
}

Table table_one(std::size_t num_sites) {
    if (num_sites < 4 || num_sites > 20) throw InvalidArgument("table 1 needs 4 <= N <= 20");
    const double n = static_cast<double>(num_sites);
    Table t;
    t.title = "Table 1: E_G^(1), G(2,1), E_G^(2) at N=" + std::to_string(num_sites);
    t.computed_by = "brute force over all subsets";
    t.reference_by = "closed form in N";
    t.columns = {"E_G^(1)", "G(2,1)", "E_G^(2)"};
    auto add = [&](const char *label, StateFamily family, reference::ChainForms f) {
        const PureState s = make_named_state(family, num_sites);
        t.rows.push_back(make_row(label, {e_g(s, 1), g_measure(s, GapVector(num_sites, {1})), e_g(s, 2)},
                                  {f.e1, f.g21, f.e2}, t.tolerance));
    };
    add("GHZ_N", StateFamily::Ghz, reference::ghz_forms(n));
    if (num_sites % 2 == 0) {
        add("EPR_N", StateFamily::Epr, reference::epr_forms(n));
    } else {
        t.notes.push_back("EPR_N is defined for even N only; row skipped.");
    }
    add("W_N", StateFamily::W, reference::w_forms(n));

    char buf[160];
    for (double m : {8.0, 9.0}) {
        const double w = reference::w_forms(m).g21, e = reference::epr_forms(m).g21;
        std::snprintf(buf, sizeof buf, "closed-form G(2,1) at N=%g: W=%.6f EPR=%.6f (%s)", m, w, e,
                      w > e ? "W above EPR" : "EPR above W");
        t.notes.push_back(buf);
    }
    return t;
}

Table table_two() {
    const double n = 1e6;
    Table t;
    t.title = "Table 2: thermodynamic limits";
    t.computed_by = "closed forms at N=10^6";
    t.reference_by = "N -> infinity";
    t.columns = {"E_G^(1)", "G(2,1)", "E_G^(2)"};
    t.tolerance = 1e-5;
    auto add = [&](const char *label, reference::ChainForms f, reference::ChainForms lim) {
        t.rows.push_back(make_row(label, {f.e1, f.g21, f.e2}, {lim.e1, lim.g21, lim.e2}, t.tolerance));
    };
    add("GHZ_N", reference::ghz_forms(n), reference::kGhzLimit);
    add("EPR_N", reference::epr_forms(n), reference::kEprLimit);
    add("W_N", reference::w_forms(n), reference::kWLimit);
    return t;
}

Table table_three() {
    Table t;
    t.title = "Table 3: E_G^(n), G(2,1) and block entanglement";
    t.computed_by = "literal evaluation of the amplitudes";
    t.reference_by = "reference table";
    t.columns = {"E_G^(1)", "E_G^(2)", "G(2,1)", "E_B^(1)", "E_B^(2)"};
    const auto &r1 = reference::kBlockEpr2;
    const auto &r2 = reference::kBlockG1;
    const PureState epr2 = make_named_state(StateFamily::Epr2);
    const PureState g1 = make_named_state(StateFamily::G1);
    t.rows.push_back(make_row("EPR2", block_values(epr2), {r1.begin(), r1.end()}, t.tolerance));
    TableRow row = make_row("g1", block_values(g1), {r2.begin(), r2.end()}, t.tolerance);
    row.known_discrepancy = true;
    t.rows.push_back(std::move(row));
    t.notes.push_back("g1 = Phi+_13 Phi+_24: its nearest-neighbour pairs (1,2),(2,3),(3,4) are all maximally mixed, "
                      "so the literal G(2,1) is 1 and E_G^(2) is 2/3. The reference 1/3 and 7/9 are the EPR2 values.");
    t.notes.push_back("subset-uniform E_G^(2): EPR2 = " + cell_text(e_g_uniform(epr2, 2)) +
                      ", g1 = " + cell_text(e_g_uniform(g1, 2)));
    return t;
}

Table table_four() {
    Table t;
    t.title = "Table 4: four-qubit states";
    t.computed_by = "literal evaluation of the amplitudes";
    t.reference_by = "reference table";
    t.columns = {"E_G^(1)", "E_G^(2)", "G(2,1)", "G(2,2)", "G(2,3)"};
    const std::pair<const char *, std::pair<StateFamily, std::array<double, 5>>> rows[] = {
        {"EPR2", {StateFamily::Epr2, reference::kFourQubitEpr2}},
        {"PHI1", {StateFamily::Phi1, reference::kFourQubitPhi1}},
        {"PHI2", {StateFamily::Phi2, reference::kFourQubitPhi2}},
        {"PHI3", {StateFamily::Phi3, reference::kFourQubitPhi3}},
        {"CHI", {StateFamily::Chi, reference::kFourQubitChi}},
    };
    for (const auto &[label, entry] : rows) {
        const auto &ref = entry.second;
        t.rows.push_back(make_row(label, four_qubit_values(make_named_state(entry.first)), {ref.begin(), ref.end()},
                                  t.tolerance));
    }
    return t;
}

void print_table(const Table &table, std::ostream &out) {
    out << table.title << '\n';
    out << "computed: " << table.computed_by << "; reference: " << table.reference_by
        << "; tolerance " << format_decimal(table.tolerance) << '\n';
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-8s %-8s %-30s %-30s %s\n", "row", "column", "computed", "reference", "match");
    out << buf;
    std::size_t matched = 0, total = 0;
    for (const auto &row : table.rows) {
        for (std::size_t k = 0; k < row.cells.size(); ++k) {
            const TableCell &c = row.cells[k];
            const char *flag = c.match ? "yes" : (row.known_discrepancy ? "DISCREPANCY" : "NO");
            std::snprintf(buf, sizeof buf, "%-8s %-8s %-30s %-30s %s\n", row.label.c_str(), table.columns[k].c_str(),
                          cell_text(c.computed).c_str(), cell_text(c.reference).c_str(), flag);
            out << buf;
            matched += c.match ? 1 : 0;
            ++total;
        }
    }
    for (const auto &note : table.notes) out << "note: " << note << '\n';
    out << matched << '/' << total << " entries match\n";
}

}  // namespace gge::cli
