// Copyright 2026 The niqp Authors
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

#include "niqp/thresholds.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace niqp {

namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e

void check_noise_strength(double p) {
    if (!(p > 0 && p < 0.5)) {
        throw std::domain_error("Threshold requires noise strength p in (0, 1/2), got " + std::to_string(p) + ".");
    }
}

// Root on the decreasing branch of c u e^{u lq} = target, lq = ln q < 0.
std::optional<double> decreasing_root_log(double lq, double c, double target) {
    double z = target * lq / c;
    if (z < -kInvE) {
        return std::nullopt;
    }
    return lambert_w_m1(z) / lq;
}

// Smallest integer u >= 1 on the decreasing branch with c u q^u <= target
// (or < target when `strict`), checked by direct evaluation.
int smallest_depth_below(double lq, double c, double target, bool strict) {
    auto value = [&](double u) {
        return c * u * std::exp(u * lq);
    };
    auto satisfied = [&](double u) {
        double v = value(u);
        return strict ? v < target : v <= target;
    };
    std::optional<double> root = decreasing_root_log(lq, c, target);
    if (!root.has_value()) {
        return 1;
    }
    int d = std::max(1, static_cast<int>(std::ceil(*root)));
    // W_{-1} is accurate to ~1e-15 relative; the integer may still sit on
    // the wrong side of an exact crossing, so settle it by evaluation. Below
    // the peak a run of satisfied integers can continue when the curve only
    // touches the target between them.
    while (d > 1 && satisfied(d - 1)) {
        d--;
    }
    while (!satisfied(d)) {
        d++;
    }
    return d;
}

}  // namespace

double lambert_w_m1(double z) {
    if (!(z >= -kInvE && z < 0)) {
        throw std::domain_error("lambert_w_m1 requires z in [-1/e, 0), got " + std::to_string(z) + ".");
    }
    if (z == -kInvE) {
        return -1.0;
    }
    auto g = [](double w) {
        return w * std::exp(w);
    };

    // g is decreasing on (-inf, -1]: bracket the root with g(lo) > z >= g(hi).
    double hi = -1.0;
    double lo = -2.0;
    while (g(lo) <= z) {
        lo *= 2;
    }

    double w;
    double eta = 1.0 + std::numbers::e * z;
    if (eta < 0.25) {
        double s = -std::sqrt(2.0 * eta);
        w = -1.0 + s - s * s / 3.0 + 11.0 / 72.0 * s * s * s;
    } else {
        double l1 = std::log(-z);
        double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    if (!(w > lo && w < hi)) {
        w = 0.5 * (lo + hi);
    }

    for (int iter = 0; iter < 200; iter++) {
        double ew = std::exp(w);
        double f = w * ew - z;
        if (f == 0) {
            return w;
        }
        if (f > 0) {
            lo = w;
        } else {
            hi = w;
        }
        double fp = (w + 1.0) * ew;
        // Halley step.
        double step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
        double next = w - step;
        if (!(next > lo && next < hi) || !std::isfinite(next)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - w) <= 1e-16 * std::abs(w) || hi - lo <= 1e-16 * std::abs(w)) {
            return next;
        }
        w = next;
    }
    return w;
}

double tail_bound(double q, double max_degree, double x) {
    double qd = q * max_degree;
    if (!(qd > 0 && qd < 1)) {
        throw std::domain_error("tail_bound requires 0 < q * max_degree < 1, got " + std::to_string(qd) + ".");
    }
    if (x == 0) {
        return 1.0;
    }
    return std::exp(-x * (1.0 - qd - std::log(qd)));
}

double component_decay_rate(double p, int k, double d) {
    double y = (k - 1) * d * std::pow(1.0 - 2.0 * p, d);
    return 1.0 - y - std::log(y);
}

double runtime_threshold_product() {
    static const double value = [] {
        // h(y) = 1 - y - ln y is decreasing on (0, 1).
        const double target = std::numbers::ln2;
        double lo = 1e-6;
        double hi = 1.0;
        for (int i = 0; i < 200 && hi - lo > 1e-15; i++) {
            double mid = 0.5 * (lo + hi);
            if (1.0 - mid - std::log(mid) > target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }();
    return value;
}

std::optional<double> decreasing_branch_root(double p, double c, double target) {
    check_noise_strength(p);
    return decreasing_root_log(std::log1p(-2.0 * p), c, target);
}

int d_star(double p, int k) {
    check_noise_strength(p);
    if (k < 2) {
        throw std::domain_error("d_star requires k >= 2.");
    }
    return smallest_depth_below(std::log1p(-2.0 * p), k - 1, 1.0, false);
}

int d_c(double p, int k) {
    check_noise_strength(p);
    if (k < 2) {
        throw std::domain_error("d_c requires k >= 2.");
    }
    return smallest_depth_below(std::log1p(-2.0 * p), k - 1, runtime_threshold_product(), false);
}

int qaoa_degree_threshold(double p, int rounds) {
    check_noise_strength(p);
    if (rounds < 1) {
        throw std::domain_error("qaoa_degree_threshold requires at least one round.");
    }
    return smallest_depth_below(std::log1p(-2.0 * p), rounds, 1.0, true);
}

namespace {

double hardness_bound() {
    double l = std::log(kHardnessFailThreshold);
    return 16.0 * l * l;
}

}  // namespace

bool hardness_depth_condition(double p, double d) {
    if (!(p > 0 && p < 0.5) || !(d >= 1)) {
        throw std::domain_error("hardness_depth_condition requires p in (0, 1/2) and d >= 1.");
    }
    return std::pow(1.0 - 2.0 * p, 4.0 * d) * 4.0 * d > hardness_bound();
}

std::optional<int> hardness_max_depth(double p) {
    check_noise_strength(p);
    // u = 4d solves u q^u = bound on the decreasing branch.
    const double lq = std::log1p(-2.0 * p);
    std::optional<double> root = decreasing_root_log(lq, 1.0, hardness_bound());
    if (!root.has_value()) {
        return std::nullopt;
    }
    int d = static_cast<int>(std::floor(*root / 4.0)) + 1;
    while (d >= 1 && !hardness_depth_condition(p, d)) {
        d--;
    }
    if (d < 1) {
        return std::nullopt;
    }
    while (hardness_depth_condition(p, d + 1)) {
        d++;
    }
    return d;
}

ThresholdReport threshold_report(double p, int k) {
    return ThresholdReport{p, k, d_star(p, k), d_c(p, k)};
}

}  // namespace niqp
