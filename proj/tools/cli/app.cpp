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

#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace gge::cli {

namespace {

void add_source(CLI::App *cmd, StateSource &source) {
    auto *name = cmd->add_option("--state", source.name, "named state: ghz, w, epr, phi1..3, chi, g1, epr2, zhg, ghz<M>x<N>");
    auto *file = cmd->add_option("--state-file", source.file, "JSON state file");
    name->excludes(file);
    cmd->add_option("--n", source.num_sites, "number of sites for ghz, w and epr")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generalized global entanglement of multipartite pure states", "gge"};
    app.require_subcommand(1);

    MeasureOptions measure;
    auto *m = app.add_subcommand("measure", "G classes, E_G^(n), subset-uniform E_G^(n) and block entanglement");
    add_source(m, measure.source);
    m->add_option("--class", measure.n, "class index n")->required()->check(CLI::PositiveNumber);
    m->add_option("--gaps", measure.gaps, "one gap class i1,i2,... (n-1 entries)")->delimiter(',');
    m->add_option("--threads", measure.threads, "worker threads")->check(CLI::PositiveNumber);

    int which = 0;
    std::size_t table_sites = 8;
    auto *t = app.add_subcommand("tables", "recompute a reference table");
    t->add_option("which", which, "table 1, 2, 3 or 4")->required()->check(CLI::IsMember({1, 2, 3, 4}));
    t->add_option("--n", table_sites, "chain length for table 1")->check(CLI::Range(4, 20));

    MesCheckOptions mes;
    std::size_t n_max = 0;
    auto *c = app.add_subcommand("mes-check", "genuine multipartite entanglement checks");
    add_source(c, mes.source);
    auto *nmax_opt = c->add_option("--nmax", n_max, "largest subset size for the purity test")->check(CLI::PositiveNumber);

    IsingOptions ising;
    auto *i = app.add_subcommand("ising", "transverse-field Ising sweep");
    i->add_option("--lambda-min", ising.lambda_min)->check(CLI::NonNegativeNumber);
    i->add_option("--lambda-max", ising.lambda_max)->check(CLI::NonNegativeNumber);
    i->add_option("--steps", ising.steps, "grid points including both ends");
    i->add_option("--max-gap", ising.max_gap)->check(CLI::Range(1, 50));
    i->add_option("--out", ising.out, "CSV output path");
    i->add_option("--tol", ising.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    i->add_option("--threads", ising.threads)->check(CLI::PositiveNumber);
    i->add_flag("--unrooted-kernel", ising.unrooted_kernel, "drop the square root in the g(n) kernel");

    EdCheckOptions ed;
    auto *e = app.add_subcommand("ed-check", "finite-chain exact diagonalization against the analytic correlators");
    e->add_option("--n", ed.num_sites)->check(CLI::Range(2, 14));
    e->add_option("--lambda", ed.lambda)->check(CLI::NonNegativeNumber);
    e->add_option("--boundary", ed.boundary)->check(CLI::IsMember({"open", "periodic"}));
    e->add_option("--max-distance", ed.max_distance)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (m->parsed()) return cmd_measure(measure, out, err);
    if (t->parsed()) return cmd_tables(which, table_sites, out, err);
    if (c->parsed()) {
        if (nmax_opt->count() > 0) mes.n_max = n_max;
        return cmd_mes_check(mes, out, err);
    }
    if (i->parsed()) return cmd_ising(ising, out, err);
    return cmd_ed_check(ed, out, err);
}

}  // namespace gge::cli
