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

#ifndef NIQP_THRESHOLDS_H
#define NIQP_THRESHOLDS_H

#include <optional>

namespace niqp {

/// Lower real branch W_{-1} of the Lambert W function: the solution w <= -1 of
/// w e^w = z for z in [-1/e, 0). Throws std::domain_error outside that range.
double lambert_w_m1(double z);

/// Vertex-percolation tail bound P(|V_i| > x) <= exp(-x (1 - q D - ln(q D)))
/// for a graph of maximum degree D with survival probability q.
/// Throws std::domain_error unless 0 < q D < 1.
double tail_bound(double q, double max_degree, double x);

/// c_{p,k}(d) = 1 - y - ln y with y = (k - 1) d (1 - 2p)^d. Positive exactly
/// when y < 1.
double component_decay_rate(double p, int k, double d);

/// Value y* < 1 with 1 - y* - ln y* = ln 2 (about 0.6851), solved by bisection.
double runtime_threshold_product();

/// Smallest integer depth d on the decreasing branch of (k-1) d (1-2p)^d with
/// (k-1) d (1-2p)^d <= 1: the onset of percolation into small components.
/// Throws std::domain_error unless p in (0, 1/2) and k >= 2.
int d_star(double p, int k);

/// Smallest integer depth on the decreasing branch with c_{p,k}(d) >= ln 2,
/// i.e. (k-1) d (1-2p)^d <= y*. Above it the exact sampler has polynomial
/// expected runtime.
int d_c(double p, int k);

/// Smallest integer degree D with (1-2p)^D r D < 1 on the decreasing branch.
/// Equals d_star(p, 2) for r = 1.
int qaoa_degree_threshold(double p, int rounds);

/// Real-valued root of c d q^d = target on the decreasing branch, where
/// q = 1 - 2p, via W_{-1}. nullopt when c d q^d <= target for every d > 0.
std::optional<double> decreasing_branch_root(double p, double c, double target);

/// Failure-rate ceiling below which bit-flipped outputs of the depth-5 MBQC
/// family stay hard to sample.
inline constexpr double kHardnessFailThreshold = 0.134;

/// Sufficient hardness condition for the repetition-encoded, locality-reduced
/// construction with r = sqrt(d): (1-2p)^{4d} 4d > 16 ln(0.134)^2.
bool hardness_depth_condition(double p, double d);

/// Largest integer depth satisfying hardness_depth_condition, or nullopt when
/// no depth does (true for every p above roughly 0.0028).
std::optional<int> hardness_max_depth(double p);

struct ThresholdReport {
    double p;
    int k;
    int d_star;
    int d_c;
};

ThresholdReport threshold_report(double p, int k);

}  // namespace niqp

#endif  // NIQP_THRESHOLDS_H
