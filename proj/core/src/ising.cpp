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

#include "gge/ising.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <string>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gge/error.hpp"
#include "gge/quadrature.hpp"

namespace gge::ising {

namespace {

void check_lambda(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument("lambda must be finite and >= 0, got " + std::to_string(lambda));
    }
}

void check_distance(std::size_t n) {
    if (n < 1 || n > kMaxToeplitzOrder) {
        throw InvalidArgument("correlator distance must be in 1.." + std::to_string(kMaxToeplitzOrder));
    }
}

template <typename Entry>
double toeplitz_det(std::size_t n, Entry &&entry) {
    Eigen::MatrixXd m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(static_cast<long>(r) - static_cast<long>(c));
    }
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

double g2_from(double px, double pz, double pxz_sq, double pxx, double pyy, double pzz) {
    return 1.0 - (2.0 * px * px + 2.0 * pz * pz + 2.0 * pxz_sq + pxx * pxx + pyy * pyy + pzz * pzz) / 3.0;
}

Interval g2_interval(const PairCorrelators &c, const Interval &pxz) {
    const double max_sq = std::max(pxz.lo * pxz.lo, pxz.hi * pxz.hi);
    const double min_sq = pxz.contains(0.0) ? 0.0 : std::min(pxz.lo * pxz.lo, pxz.hi * pxz.hi);
    return {g2_from(c.px, c.pz, max_sq, c.pxx, c.pyy, c.pzz), g2_from(c.px, c.pz, min_sq, c.pxx, c.pyy, c.pzz)};
}

double clamped_concurrence(double pxx, double pyy, double pzz) {
    return std::max(0.0, 0.5 * (-1.0 - pyy + pxx + pzz));
}

}  // namespace

void IsingParams::validate() const {
    check_lambda(lambda);
    if (!(quad_tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
    if (max_gap < 1 || max_gap > kMaxToeplitzOrder) {
        throw InvalidArgument("max_gap must be in 1.." + std::to_string(kMaxToeplitzOrder));
    }
    for (double l : lambda_grid) check_lambda(l);
}

double g_fn(double lambda, long n, double tol, Kernel kernel) {
    check_lambda(lambda);
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    const double dn = static_cast<double>(n);
    // Integrate to pi*tol so the 1/pi prefactor leaves an absolute error of tol.
    const double qtol = M_PI * tol;
    quad::Result r;
    if (lambda == 1.0) {
        if (kernel == Kernel::SquareRoot) {
            r = quad::integrate([&](double k) { return std::cos(k * (dn + 0.5)); }, 0.0, M_PI, qtol);
        } else {
            r = quad::integrate(
                [&](double k) { return std::cos(k * (dn + 0.5)) / (2.0 * std::cos(0.5 * k)); }, 0.0, M_PI, qtol);
        }
    } else {
        const double gap_sq = (1.0 - lambda) * (1.0 - lambda);
        auto integrand = [&](double k) {
            const double c = std::cos(0.5 * k);
            // 1 + lambda^2 + 2 lambda cos k, without cancellation near k = pi.
            const double denom_sq = gap_sq + 4.0 * lambda * c * c;
            const double num = std::cos(k * dn) + lambda * std::cos(k * (dn + 1.0));
            return kernel == Kernel::SquareRoot ? num / std::sqrt(denom_sq) : num / denom_sq;
        };
        r = quad::integrate(integrand, 0.0, M_PI, qtol);
    }
    return r.value / M_PI;
}

GTable::GTable(double lambda, long max_abs, double tol, Kernel kernel)
    : lambda_(lambda), max_abs_(max_abs), values_(static_cast<std::size_t>(2 * max_abs + 1)) {
    for (long n = -max_abs; n <= max_abs; ++n) {
        values_[static_cast<std::size_t>(n + max_abs)] = g_fn(lambda, n, tol, kernel);
    }
}

double GTable::operator()(long n) const {
    if (n < -max_abs_ || n > max_abs_) throw InvalidArgument("g(n) requested outside the cached range");
    return values_[static_cast<std::size_t>(n + max_abs_)];
}

double magnetization_x(double lambda) {
    check_lambda(lambda);
    if (lambda <= 1.0) return 0.0;
    return std::pow(1.0 - 1.0 / (lambda * lambda), 0.125);
}

double magnetization_z(double lambda, double tol) {
    return g_fn(lambda, 0, tol);
}

double corr_xx(const GTable &g, std::size_t n) {
    check_distance(n);
    return toeplitz_det(n, [&](long d) { return g(d - 1); });
}

double corr_yy(const GTable &g, std::size_t n) {
    check_distance(n);
    return toeplitz_det(n, [&](long d) { return g(d + 1); });
}

double corr_zz(const GTable &g, std::size_t n) {
    check_distance(n);
    const long ln = static_cast<long>(n);
    return g(0) * g(0) - g(ln) * g(-ln);
}

double corr_xx(double lambda, std::size_t n, double tol) {
    check_distance(n);
    return corr_xx(GTable(lambda, static_cast<long>(n), tol), n);
}

double corr_yy(double lambda, std::size_t n, double tol) {
    check_distance(n);
    return corr_yy(GTable(lambda, static_cast<long>(n), tol), n);
}

double corr_zz(double lambda, std::size_t n, double tol) {
    check_distance(n);
    return corr_zz(GTable(lambda, static_cast<long>(n), tol), n);
}

double pair_min_eigenvalue(const PairCorrelators &c, double pxz) {
    // Basis |00>,|01>,|10>,|11>; every term is real.
    const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d X, Z;
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    Eigen::Matrix4d yy;  // sigma_y (x) sigma_y is real
    yy << 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0;
    auto kron = [](const Eigen::Matrix2d &a, const Eigen::Matrix2d &b) {
        Eigen::Matrix4d k;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
        return k;
    };
    Eigen::Matrix4d rho = kron(I, I) + c.px * (kron(X, I) + kron(I, X)) + c.pz * (kron(Z, I) + kron(I, Z)) +
                          c.pxx * kron(X, X) + c.pyy * yy + c.pzz * kron(Z, Z) + pxz * (kron(X, Z) + kron(Z, X));
    rho *= 0.25;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Interval pxz_interval(double lambda, const PairCorrelators &c) {
    check_lambda(lambda);
    if (lambda <= 1.0) return {0.0, 0.0};

    auto feasible = [&](double p) { return pair_min_eigenvalue(c, p) >= -kPsdTolerance; };

    // The smallest eigenvalue is concave in p, so the feasible set is an
    // interval. Start from p = 0, else from the maximizer of that eigenvalue.
    double start = 0.0;
    if (!feasible(start)) {
        double a = -1.0, b = 1.0;
        const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
            const double m1 = b - inv_phi * (b - a);
            const double m2 = a + inv_phi * (b - a);
            if (pair_min_eigenvalue(c, m1) < pair_min_eigenvalue(c, m2)) {
                a = m1;
            } else {
                b = m2;
            }
        }
        start = 0.5 * (a + b);
        const double best = pair_min_eigenvalue(c, start);
        if (best < -kInfeasibleTolerance) {
            throw InvariantViolation("correlators admit no positive two-site state (min eigenvalue " +
                                     std::to_string(best) + ")");
        }
        if (!feasible(start)) return {start, start};
    }

    auto edge = [&](double inside, double outside) {
        if (feasible(outside)) return outside;
        for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-13; ++it) {
            const double mid = 0.5 * (inside + outside);
            (feasible(mid) ? inside : outside) = mid;
        }
        return inside;
    };
    return {edge(start, -1.0), edge(start, 1.0)};
}

double g1_ising(double lambda, double tol) {
    const double px = magnetization_x(lambda);
    const double pz = magnetization_z(lambda, tol);
    return 1.0 - px * px - pz * pz;
}

Interval g2_ising(double lambda, std::size_t n, double tol) {
    check_distance(n);
    const GTable g(lambda, static_cast<long>(n), tol);
    const PairCorrelators c{magnetization_x(lambda), g(0), corr_xx(g, n), corr_yy(g, n), corr_zz(g, n)};
    return g2_interval(c, pxz_interval(lambda, c));
}

double concurrence(double lambda, std::size_t n, double tol) {
    check_distance(n);
    const GTable g(lambda, static_cast<long>(n), tol);
    return clamped_concurrence(corr_xx(g, n), corr_yy(g, n), corr_zz(g, n));
}

IsingPoint ising_point(double lambda, std::size_t max_gap, double tol, Kernel kernel) {
    check_lambda(lambda);
    check_distance(max_gap);
    const GTable g(lambda, static_cast<long>(max_gap), tol, kernel);

    IsingPoint p;
    p.lambda = lambda;
    p.px = magnetization_x(lambda);
    p.pz = g(0);
    p.g1 = 1.0 - p.px * p.px - p.pz * p.pz;
    for (std::size_t n = 1; n <= max_gap; ++n) {
        const PairCorrelators c{p.px, p.pz, corr_xx(g, n), corr_yy(g, n), corr_zz(g, n)};
        const Interval pxz = pxz_interval(lambda, c);
        p.pxx.push_back(c.pxx);
        p.pyy.push_back(c.pyy);
        p.pzz.push_back(c.pzz);
        p.pxz.push_back(pxz);
        p.g2.push_back(g2_interval(c, pxz));
        p.concurrence.push_back(clamped_concurrence(c.pxx, c.pyy, c.pzz));
    }
    return p;
}

std::vector<IsingPoint> sweep(const IsingParams &params) {
    params.validate();
    const auto &grid = params.lambda_grid;
    std::vector<IsingPoint> out(grid.size());
    if (grid.empty()) return out;

    auto compute = [&](std::size_t i) {
        try {
            out[i] = ising_point(grid[i], params.max_gap, params.quad_tol, params.kernel);
        } catch (const std::exception &e) {
            throw NumericalError("sweep failed at lambda=" + std::to_string(grid[i]) + ": " + e.what());
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(params.threads, static_cast<unsigned>(grid.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) compute(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(grid.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
                try {
                    compute(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) th.join();
    // Report the first failing lambda in grid order.
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

void write_sweep_csv(std::ostream &out, const std::vector<IsingPoint> &points, std::size_t max_gap) {
    auto columns = [&](const char *prefix) {
        for (std::size_t n = 1; n <= max_gap; ++n) out << ',' << prefix << n;
    };
    out << "lambda,px,pz";
    columns("pxx_");
    columns("pyy_");
    columns("pzz_");
    columns("pxz_lo_");
    columns("pxz_hi_");
    out << ",g1";
    columns("g2_lo_");
    columns("g2_hi_");
    columns("conc_");
    out << '\n';

    char buf[32];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out << buf;
    };
    auto sep_num = [&](double v) {
        out << ',';
        num(v);
    };
    for (const auto &p : points) {
        if (p.pxx.size() < max_gap) throw InvalidArgument("sweep point has fewer gaps than the CSV header");
        num(p.lambda);
        sep_num(p.px);
        sep_num(p.pz);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.pxx[k]);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.pyy[k]);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.pzz[k]);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.pxz[k].lo);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.pxz[k].hi);
        sep_num(p.g1);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.g2[k].lo);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.g2[k].hi);
        for (std::size_t k = 0; k < max_gap; ++k) sep_num(p.concurrence[k]);
        out << '\n';
    }
}

}  // namespace gge::ising
