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

#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include "gge/ed.hpp"
#include "gge/error.hpp"
#include "gge/ising.hpp"
#include "gge/measure.hpp"
#include "tables.hpp"

namespace gge::cli {

namespace {

std::string printf_string(const char *fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

void value_line(std::ostream &out, const std::string &label, double v) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %-18s %s\n", label.c_str(), format_decimal(v).c_str(),
                  format_rational(v).c_str());
    out << buf;
}

std::string subset_text(const SiteSubset &s) {
    std::string t = "{";
    for (std::size_t k = 0; k < s.size(); ++k) t += (k ? "," : "") + std::to_string(s.sites()[k]);
    return t + "}";
}

std::string state_header(const PureState &s, const std::string &label) {
    return "state: " + label + " (N=" + std::to_string(s.num_sites()) + ", q=" + std::to_string(s.local_dim()) + ")";
}

void print_def1(std::ostream &out, const Def1Verdict &v) {
    out << "definition 1: " << (v.genuine ? "genuine" : "NOT genuine") << " (G(1)=" << format_decimal(v.g1)
        << "; G(2,1..3)=" << format_decimal(v.g2[0]) << ", " << format_decimal(v.g2[1]) << ", "
        << format_decimal(v.g2[2]) << "; threshold 2/3)\n";
}

void print_def2(std::ostream &out, const Def2Verdict &v) {
    out << "definition 2 (n_max=" << v.n_max << "): " << (v.genuine ? "genuine" : "NOT genuine") << ", "
        << v.subsets_checked << " subsets checked, " << v.violations.size() << " above purity 1/2\n";
    for (const auto &w : v.violations) {
        out << "  witness " << subset_text(w.subset) << " purity " << format_decimal(w.purity) << '\n';
    }
}

template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const InvariantViolation &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const NumericalError &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace

std::optional<std::pair<long long, long long>> as_rational(double v, long long max_denominator, double tol) {
    if (!std::isfinite(v) || std::abs(v) > 1e12) return std::nullopt;
    for (long long q = 1; q <= max_denominator; ++q) {
        const double p = std::round(v * static_cast<double>(q));
        if (std::abs(v - p / static_cast<double>(q)) <= tol) return std::make_pair(static_cast<long long>(p), q);
    }
    return std::nullopt;
}

std::string format_decimal(double v) {
    // Keep "-0" out of the output.
    if (v == 0.0) v = 0.0;
    return printf_string("%.12g", v);
}

std::string format_rational(double v) {
    const auto r = as_rational(v);
    if (!r) return "";
    if (r->second == 1) return std::to_string(r->first);
    return std::to_string(r->first) + "/" + std::to_string(r->second);
}

std::pair<PureState, std::string> load_state(const StateSource &source) {
    if (source.name.empty() == source.file.empty()) {
        throw InvalidArgument("give exactly one of --state and --state-file");
    }
    if (!source.file.empty()) {
        std::ifstream in(source.file);
        if (!in) throw InvalidArgument("cannot read state file '" + source.file + "'");
        std::stringstream text;
        text << in.rdbuf();
        return {read_state_file(text.str()), source.file};
    }

    const std::string name = lower(source.name);
    static const std::regex power(R"(ghz(\d+)x(\d+))");
    std::smatch m;
    if (std::regex_match(name, m, power)) {
        const std::size_t copies = std::stoul(m[1]);
        const std::size_t block = std::stoul(m[2]);
        if (source.num_sites != 0 && source.num_sites != block * copies) {
            throw InvalidArgument("--n conflicts with " + source.name);
        }
        return {make_named_state(StateFamily::GhzPower, block, copies),
                "GHZ^" + std::to_string(copies) + "_" + std::to_string(block)};
    }
    if (name == "zhg2x3") return {make_named_state(StateFamily::Zhg), "ZHG"};

    const StateFamily family = parse_state_family(name);
    const bool sized = family == StateFamily::Ghz || family == StateFamily::W || family == StateFamily::Epr;
    if (sized && source.num_sites == 0) throw InvalidArgument(source.name + " needs --n");
    if (family == StateFamily::GhzPower) throw InvalidArgument("use ghz<M>x<N> for M copies of GHZ_N");
    PureState s = make_named_state(family, source.num_sites);
    std::string label(to_string(family));
    if (sized) label += "_" + std::to_string(s.num_sites());
    return {std::move(s), label};
}

int cmd_measure(const MeasureOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto [state, label] = load_state(options.source);
        const std::size_t n_sites = state.num_sites();
        if (!options.gaps.empty()) {
            if (options.gaps.size() + 1 != options.n) {
                throw InvalidArgument("--gaps needs exactly n-1 = " + std::to_string(options.n - 1) + " entries");
            }
            const GapVector gv(n_sites, options.gaps);
            out << state_header(state, label) << '\n';
            value_line(out, gv.label(), g_measure(state, gv));
            return static_cast<int>(kExitOk);
        }
        if (options.n < 1 || options.n >= n_sites) {
            throw InvalidArgument("--class must satisfy 1 <= n < N=" + std::to_string(n_sites));
        }
        const MeasureReport r = measure_report(state, label, options.n);
        const std::string n = std::to_string(r.n);
        out << state_header(state, label) << '\n';
        out << "class: n=" << n << ", " << r.classes.size() << " gap classes\n";
        for (const auto &c : r.classes) value_line(out, c.gaps.label(), c.value);
        value_line(out, "E_G^(" + n + ")", r.e_g);
        value_line(out, "E_G^(" + n + ") uniform", r.e_g_uniform);
        value_line(out, "E_B^(" + n + ")", r.e_b);
        if (r.def1) print_def1(out, *r.def1);
        if (r.def2) print_def2(out, *r.def2);
        return static_cast<int>(kExitOk);
    });
}

int cmd_tables(int which, std::size_t num_sites, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        switch (which) {
            case 1: print_table(table_one(num_sites), out); break;
            case 2: print_table(table_two(), out); break;
            case 3: print_table(table_three(), out); break;
            case 4: print_table(table_four(), out); break;
            default: throw InvalidArgument("table must be 1, 2, 3 or 4");
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_mes_check(const MesCheckOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto [state, label] = load_state(options.source);
        if (state.local_dim() != 2) throw InvalidArgument("mes-check needs a qubit state");
        out << state_header(state, label) << '\n';
        bool genuine = true;
        if (state.num_sites() == 4) {
            const Def1Verdict v = mes_check_def1(state);
            print_def1(out, v);
            genuine = genuine && v.genuine;
        }
        if (options.n_max || state.num_sites() != 4) {
            const std::size_t n_max = options.n_max.value_or(std::max<std::size_t>(1, state.num_sites() / 2));
            const Def2Verdict v = mes_check_def2(state, n_max);
            print_def2(out, v);
            genuine = genuine && v.genuine;
        }
        out << "verdict: " << (genuine ? "genuine" : "NOT genuine") << '\n';
        return static_cast<int>(kExitOk);
    });
}

int cmd_ising(const IsingOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (options.steps == 0) throw InvalidArgument("--steps must be at least 1");
        if (!(options.lambda_max >= options.lambda_min)) throw InvalidArgument("--lambda-max is below --lambda-min");
        ising::IsingParams params;
        params.quad_tol = options.tol;
        params.max_gap = options.max_gap;
        params.threads = options.threads;
        params.kernel = options.unrooted_kernel ? ising::Kernel::Unrooted : ising::Kernel::SquareRoot;
        const double span = options.lambda_max - options.lambda_min;
        for (std::size_t i = 0; i < options.steps; ++i) {
            params.lambda_grid.push_back(options.steps == 1 ? options.lambda_min
                                                            : options.lambda_min + span * static_cast<double>(i) /
                                                                                       static_cast<double>(options.steps - 1));
        }
        params.validate();

        std::ofstream csv;
        if (!options.out.empty()) {
            csv.open(options.out);
            if (!csv) throw InvalidArgument("cannot write '" + options.out + "'");
        }
        const auto points = ising::sweep(params);
        if (csv.is_open()) {
            ising::write_sweep_csv(csv, points, params.max_gap);
            if (!csv.flush()) throw InvalidArgument("write to '" + options.out + "' failed");
        }

        std::size_t best_g1 = 0, best_g2 = 0;
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (points[i].g1 > points[best_g1].g1) best_g1 = i;
            if (points[i].g2[0].hi > points[best_g2].g2[0].hi) best_g2 = i;
        }
        out << "points: " << points.size() << ", max_gap " << params.max_gap
            << (options.unrooted_kernel ? ", unrooted kernel" : "") << '\n';
        out << "argmax g1: lambda=" << format_decimal(points[best_g1].lambda) << " (g1="
            << format_decimal(points[best_g1].g1) << ")\n";
        out << "argmax g2_hi_1: lambda=" << format_decimal(points[best_g2].lambda) << " (g2_hi_1="
            << format_decimal(points[best_g2].g2[0].hi) << ")\n";
        if (points.size() == 1) {
            const auto &p = points.front();
            const std::string g = std::to_string(params.max_gap);
            out << "lambda=" << format_decimal(p.lambda) << ": g1=" << format_decimal(p.g1) << ", g2_lo_" << g << "="
                << format_decimal(p.g2.back().lo) << ", g2_hi_" << g << "=" << format_decimal(p.g2.back().hi)
                << ", conc_1=" << format_decimal(p.concurrence.front()) << '\n';
        }
        if (csv.is_open()) out << "csv: " << options.out << '\n';
        return static_cast<int>(kExitOk);
    });
}

int cmd_ed_check(const EdCheckOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ising::Boundary boundary;
        const std::string b = lower(options.boundary);
        if (b == "periodic") {
            boundary = ising::Boundary::Periodic;
        } else if (b == "open") {
            boundary = ising::Boundary::Open;
        } else {
            throw InvalidArgument("--boundary must be open or periodic");
        }
        if (options.max_distance < 1) throw InvalidArgument("--max-distance must be at least 1");
        const ising::EdResult r = ising::ed_ground_state(options.num_sites, options.lambda, boundary);
        const std::size_t dmax = std::min(options.max_distance, r.chain.pxx.size());
        const ising::IsingPoint p = ising::ising_point(options.lambda, dmax);

        out << "exact diagonalization: N=" << r.num_sites << ", lambda=" << format_decimal(r.lambda) << ", " << b
            << " boundary\n";
        out << "energy " << format_decimal(r.energy) << ", residual " << printf_string("%.2e", r.residual) << '\n';
        out << "magnitudes are compared; the finite chain has <z> < 0 and staggered xx, yy signs\n";
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-10s %-18s %-18s %s\n", "quantity", "|ED|", "analytic", "delta");
        out << buf;
        double worst = 0.0;
        auto row = [&](const std::string &name, double ed, double analytic, bool diagonal) {
            const double delta = std::abs(ed) - std::abs(analytic);
            if (diagonal) worst = std::max(worst, std::abs(delta));
            std::snprintf(buf, sizeof buf, "%-10s %-18s %-18s %s\n", name.c_str(), format_decimal(std::abs(ed)).c_str(),
                          format_decimal(std::abs(analytic)).c_str(), printf_string("%.3e", delta).c_str());
            out << buf;
        };
        row("z", r.chain.pz, p.pz, false);
        for (std::size_t n = 1; n <= dmax; ++n) {
            const std::string s = std::to_string(n);
            row("xx_" + s, r.chain.pxx[n - 1], p.pxx[n - 1], true);
            row("yy_" + s, r.chain.pyy[n - 1], p.pyy[n - 1], true);
            row("zz_" + s, r.chain.pzz[n - 1], p.pzz[n - 1], true);
        }
        out << "max |delta| diagonal: " << printf_string("%.3e", worst) << '\n';
        if (r.broken) {
            out << "broken combination: splitting " << printf_string("%.3e", r.broken->energy_splitting) << '\n';
            row("x", r.broken->px, p.px, false);
            for (std::size_t n = 1; n <= std::min(dmax, r.broken->pxz.size()); ++n) {
                const double v = std::abs(r.broken->pxz[n - 1]);
                const auto &iv = p.pxz[n - 1];
                out << "xz_" << n << " |ED| " << format_decimal(v) << " bounds [" << format_decimal(iv.lo) << ", "
                    << format_decimal(iv.hi) << "] " << (iv.contains(v, 2e-2) ? "inside" : "OUTSIDE")
                    << " (slack 2e-2)\n";
            }
        }
        return static_cast<int>(kExitOk);
    });
}

}  // namespace gge::cli
