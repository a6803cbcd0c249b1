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

#include "gge/measure.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "gge/error.hpp"

namespace gge {

namespace {

// Visits every strictly increasing k-tuple drawn from [lo, hi], lexicographic.
template <typename Fn>
void for_each_combination(std::size_t lo, std::size_t hi, std::size_t k, Fn &&fn) {
    if (k == 0) {
        fn(std::vector<std::size_t>{});
        return;
    }
    if (hi < lo || hi - lo + 1 < k) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = lo + i;
    while (true) {
        fn(c);
        std::size_t i = k;
        while (i-- > 0) {
            if (c[i] < hi - (k - 1 - i)) break;
            if (i == 0) return;
        }
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

void check_class(std::size_t num_sites, std::size_t n) {
    if (n < 1 || n >= num_sites) {
        throw InvalidArgument("class n=" + std::to_string(n) + " must satisfy 1 <= n < N=" +
                              std::to_string(num_sites));
    }
}

}  // namespace

GapVector::GapVector(std::size_t num_sites, std::vector<std::size_t> gaps)
    : num_sites_(num_sites), gaps_(std::move(gaps)) {
    check_class(num_sites_, n());
    for (std::size_t k = 0; k < gaps_.size(); ++k) {
        if (gaps_[k] < 1 || gaps_[k] > num_sites_ - 1 || (k > 0 && gaps_[k] <= gaps_[k - 1])) {
            throw InvalidArgument("gaps must satisfy 1 <= i_1 < ... < i_{n-1} <= N-1");
        }
    }
}

SiteSubset GapVector::member(std::size_t j) const {
    if (j < 1 || j > member_count()) throw InvalidArgument("gap class member index out of range");
    std::vector<std::size_t> sites{j};
    for (std::size_t g : gaps_) sites.push_back(j + g);
    return SiteSubset(std::move(sites));
}

std::string GapVector::label() const {
    std::string out = "G(" + std::to_string(n());
    for (std::size_t g : gaps_) out += "," + std::to_string(g);
    return out + ")";
}

std::vector<GapVector> enumerate_gap_classes(std::size_t num_sites, std::size_t n) {
    check_class(num_sites, n);
    std::vector<GapVector> out;
    for_each_combination(1, num_sites - 1, n - 1,
                         [&](const std::vector<std::size_t> &c) { out.emplace_back(num_sites, c); });
    return out;
}

std::vector<SiteSubset> enumerate_subsets(std::size_t num_sites, std::size_t n) {
    if (n < 1 || n > num_sites) throw InvalidArgument("subset size out of range");
    std::vector<SiteSubset> out;
    for_each_combination(1, num_sites, n, [&](const std::vector<std::size_t> &c) { out.emplace_back(c); });
    return out;
}

double g_measure(const PureState &s, const GapVector &gv) {
    if (gv.num_sites() != s.num_sites()) {
        throw InvalidArgument("gap vector built for " + std::to_string(gv.num_sites()) + " sites, state has " +
                              std::to_string(s.num_sites()));
    }
    double sum = 0.0;
    for (std::size_t j = 1; j <= gv.member_count(); ++j) sum += subset_linear_entropy(s, gv.member(j));
    return sum / static_cast<double>(gv.member_count());
}

double e_g(const PureState &s, std::size_t n, unsigned threads) {
    const auto classes = enumerate_gap_classes(s.num_sites(), n);
    std::vector<double> values(classes.size());

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(classes.size())));
    if (threads == 1) {
        for (std::size_t c = 0; c < classes.size(); ++c) values[c] = g_measure(s, classes[c]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t c; (c = next.fetch_add(1)) < classes.size();) {
                        values[c] = g_measure(s, classes[c]);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto &th : pool) th.join();
        for (auto &e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double e_g_uniform(const PureState &s, std::size_t n) {
    check_class(s.num_sites(), n);
    double sum = 0.0;
    std::size_t count = 0;
    for_each_combination(1, s.num_sites(), n, [&](const std::vector<std::size_t> &c) {
        sum += subset_linear_entropy(s, SiteSubset(c));
        ++count;
    });
    return sum / static_cast<double>(count);
}

double block_entanglement(const PureState &s, std::size_t n) {
    check_class(s.num_sites(), n);
    std::vector<std::size_t> block(n);
    for (std::size_t i = 0; i < n; ++i) block[i] = i + 1;
    return subset_linear_entropy(s, SiteSubset(std::move(block)));
}

Def1Verdict mes_check_def1(const PureState &s) {
    if (s.num_sites() != 4 || s.local_dim() != 2) {
        throw InvalidArgument("definition 1 applies to four-qubit states only");
    }
    Def1Verdict v;
    v.g1 = e_g(s, 1);
    v.genuine = std::abs(v.g1 - 1.0) <= kDef1Tolerance;
    for (std::size_t i = 1; i <= 3; ++i) {
        v.g2[i - 1] = g_measure(s, GapVector(4, {i}));
        v.genuine = v.genuine && v.g2[i - 1] >= kDef1Threshold - kDef1Tolerance;
    }
    return v;
}

Def2Verdict mes_check_def2(const PureState &s, std::size_t n_max) {
    if (s.local_dim() != 2) throw InvalidArgument("definition 2 applies to qubit states only");
    if (n_max < 1 || n_max >= s.num_sites()) {
        throw InvalidArgument("n_max must satisfy 1 <= n_max < N");
    }
    Def2Verdict v;
    v.n_max = n_max;
    for (std::size_t k = 1; k <= n_max; ++k) {
        for_each_combination(1, s.num_sites(), k, [&](const std::vector<std::size_t> &c) {
            SiteSubset subset(c);
            const double p = purity(reduce(s, subset));
            ++v.subsets_checked;
            if (p > kDef2Threshold + kDef2Tolerance) v.violations.push_back({std::move(subset), p});
        });
    }
    v.genuine = v.violations.empty();
    return v;
}

MeasureReport measure_report(const PureState &s, std::string label, std::size_t n) {
    MeasureReport r;
    r.label = std::move(label);
    r.n = n;
    for (auto &gv : enumerate_gap_classes(s.num_sites(), n)) {
        const double value = g_measure(s, gv);
        r.classes.push_back({std::move(gv), value});
    }
    double sum = 0.0;
    for (const auto &c : r.classes) sum += c.value;
    r.e_g = sum / static_cast<double>(r.classes.size());
    r.e_g_uniform = e_g_uniform(s, n);
    r.e_b = block_entanglement(s, n);
    if (s.local_dim() == 2) {
        if (s.num_sites() == 4) r.def1 = mes_check_def1(s);
        r.def2 = mes_check_def2(s, n);
    }
    return r;
}

}  // namespace gge
