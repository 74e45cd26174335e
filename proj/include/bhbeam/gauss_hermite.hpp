#pragma once

#include <vector>

namespace bhbeam::quadrature {

/// Nodes and weights for the weight exp(-x^2):
///   integral f(x) exp(-x^2) dx  ~=  sum_i w_i f(x_i).
/// Exact for polynomials of degree <= 2n-1.
struct GaussHermiteRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;
};

GaussHermiteRule compute_gauss_hermite(int n);

/// Cached rule (thread-safe).
const GaussHermiteRule& gauss_hermite(int n);

}  // namespace bhbeam::quadrature
