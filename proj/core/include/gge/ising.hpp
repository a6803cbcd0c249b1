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
#include <vector>

namespace gge::ising {

// Infinite transverse-field Ising chain H = lambda sum x_i x_{i+1} + sum z_i,
// critical at lambda = 1. All correlators use the convention <z> = g(0) > 0
// and, for lambda > 1, the symmetry-broken ground state with <x> > 0.

/// Denominator of the g(n) integrand. SquareRoot is the physical kernel
/// sqrt(1 + lambda^2 + 2 lambda cos k); Unrooted drops the square root and is
/// kept only to document what that form produces.
enum class Kernel { SquareRoot, Unrooted };

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kMaxToeplitzOrder = 50;

struct IsingParams {
    double lambda = 0.0;
    double quad_tol = kDefaultTolerance;
    std::size_t max_gap = 15;
    std::vector<double> lambda_grid;
    Kernel kernel = Kernel::SquareRoot;
    unsigned threads = 1;

    /// Throws InvalidArgument on negative lambda, non-positive tolerance,
    /// max_gap outside 1..kMaxToeplitzOrder or a negative grid point.
    void validate() const;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

struct IsingPoint {
    double lambda = 0.0;
    double px = 0.0;
    double pz = 0.0;
    // Index k holds distance n = k + 1.
    std::vector<double> pxx, pyy, pzz;
    std::vector<Interval> pxz;
    double g1 = 0.0;
    std::vector<Interval> g2;
    std::vector<double> concurrence;
};

/// g(n) = (1/pi) int_0^pi [cos(kn) + lambda cos(k(n+1))] / Lambda_k dk, to
/// absolute accuracy `tol`. At lambda = 1 the integrand reduces to
/// cos(k(n + 1/2)). Throws NumericalError if the quadrature fails.
double g_fn(double lambda, long n, double tol = kDefaultTolerance, Kernel kernel = Kernel::SquareRoot);

/// Caches g(-m) .. g(m) for one lambda.
class GTable {
  public:
    GTable(double lambda, long max_abs, double tol = kDefaultTolerance, Kernel kernel = Kernel::SquareRoot);
    double operator()(long n) const;
    double lambda() const { return lambda_; }
    long max_abs() const { return max_abs_; }

  private:
    double lambda_;
    long max_abs_;
    std::vector<double> values_;
};

double magnetization_x(double lambda);
double magnetization_z(double lambda, double tol = kDefaultTolerance);

/// det[g(r - c - 1)] of order n.
double corr_xx(double lambda, std::size_t n, double tol = kDefaultTolerance);
/// det[g(r - c + 1)] of order n.
double corr_yy(double lambda, std::size_t n, double tol = kDefaultTolerance);
/// g(0)^2 - g(n) g(-n).
double corr_zz(double lambda, std::size_t n, double tol = kDefaultTolerance);

double corr_xx(const GTable &g, std::size_t n);
double corr_yy(const GTable &g, std::size_t n);
double corr_zz(const GTable &g, std::size_t n);

/// The coefficients of a two-site reduced state other than p^{xz}.
struct PairCorrelators {
    double px = 0.0;
    double pz = 0.0;
    double pxx = 0.0;
    double pyy = 0.0;
    double pzz = 0.0;
};

inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kInfeasibleTolerance = 1e-8;

/// Smallest eigenvalue of rho(p) = (1/4)[II + px(XI+IX) + pz(ZI+IZ) + pxx XX +
/// pyy YY + pzz ZZ + p(XZ + ZX)].
double pair_min_eigenvalue(const PairCorrelators &c, double pxz);

/// Range of p^{xz} keeping the two-site state positive. [0, 0] for
/// lambda <= 1 by symmetry. Throws InvariantViolation if no p in [-1, 1]
/// brings the smallest eigenvalue above -1e-8.
Interval pxz_interval(double lambda, const PairCorrelators &c);

double g1_ising(double lambda, double tol = kDefaultTolerance);

/// Pair class value at distance n as an interval over the admissible p^{xz}:
/// 1 - (1/3)[2px^2 + 2pz^2 + 2pxz^2 + pxx^2 + pyy^2 + pzz^2].
Interval g2_ising(double lambda, std::size_t n, double tol = kDefaultTolerance);

/// max(0, (-1 - pyy + pxx + pzz) / 2).
double concurrence(double lambda, std::size_t n, double tol = kDefaultTolerance);

/// Every analytic quantity at one lambda, distances 1..max_gap.
IsingPoint ising_point(double lambda, std::size_t max_gap, double tol = kDefaultTolerance,
                       Kernel kernel = Kernel::SquareRoot);

/// One point per grid entry, in grid order. Points may run on `threads`
/// workers; a failure is rethrown as NumericalError naming the lambda.
std::vector<IsingPoint> sweep(const IsingParams &params);

/// Header plus one row per point, 12 significant digits.
void write_sweep_csv(std::ostream &out, const std::vector<IsingPoint> &points, std::size_t max_gap);

}  // namespace gge::ising
