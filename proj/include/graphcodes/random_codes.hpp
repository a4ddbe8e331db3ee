#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcodes/graph_metric.hpp"
#include "graphcodes/rational.hpp"

namespace graphcodes {

/// Binary entropy h2(x) = -x log2 x - (1-x) log2(1-x), with h2(0) = h2(1) = 0.
double binary_entropy(double x);
double binary_entropy(const Rational& x);

/// Inverse of h2 on [0, 1/2], by bisection to 1e-12.
double inverse_binary_entropy(double y);

/// Dimension target binom(floor(n(1-delta)), 2) - h2(delta) n - 2, floored.
int64_t random_graph_code_dimension(int n, const Rational& delta);

struct RandomGraphCodeParams {
    int n = 0;
    Rational delta;
    uint64_t seed = 0;
    int retry_cap = 64;
    uint64_t exact_budget = uint64_t(1) << 22;
};

struct RandomGraphCodeResult {
    GraphCode code;
    DistanceReport certificate;
    int attempts = 0;
    std::vector<std::string> transcript;
};

/// Spans floor(binom(n(1-delta),2) - h2(delta) n - 2) independent uniform
/// graphs and certifies by exhaustive enumeration that the code distance
/// exceeds delta * n, resampling on failure up to the retry cap. Never
/// returns an unverified code.
RandomGraphCodeResult sample_random_graph_code(const RandomGraphCodeParams& params);

struct OptSearchParams {
    Rational epsilon;
    int n = 0;
    int k = 0;
    uint64_t seed = 0;
    uint64_t attempt_budget = 4096;
    uint64_t exact_budget = uint64_t(1) << 22;
};

struct OptSearchResult {
    GraphCode code;
    DistanceReport certificate;
    uint64_t attempts = 0;
    std::vector<std::string> transcript;
};

/// Rejection-samples uniform k-dimensional spaces of n x n binary matrices
/// until one has exact directed code distance >= (1 - epsilon) n (certified
/// by full enumeration). Requires k < epsilon^2 n^2 - 2n.
OptSearchResult search_opt_directed(const OptSearchParams& params);

/// The certified distance target ceil((1 - epsilon) n).
int opt_distance_target(const Rational& epsilon, int n);

}  // namespace graphcodes
