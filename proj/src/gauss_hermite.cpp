#include "bhbeam/gauss_hermite.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bhbeam::quadrature {

namespace {

// Orthonormal Hermite value h_n(x) and h_{n-1}(x) via the stable recurrence
// h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}, h_0 = pi^{-1/4}.
struct HermitePair {
    double hn;
    double hnm1;
};

HermitePair orthonormal_hermite(int n, double x) {
    double p1 = 1.0 / std::pow(std::numbers::pi, 0.25);
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
    }
    return {p1, p2};
}

}  // namespace

GaussHermiteRule compute_gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("Gauss-Hermite order must be >= 1");

    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const int half = (n + 1) / 2;
    double z = 0.0;
    double z_prev1 = 0.0;
    double z_prev2 = 0.0;

    for (int i = 0; i < half; ++i) {
        // Initial guesses: asymptotic for the largest root, then stepping
        // inward from the roots already found.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * z_prev2;
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * z_prev2;
        } else {
            z = 2.0 * z - z_prev2;
        }

        double pp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            const auto h = orthonormal_hermite(n, z);
            pp = std::sqrt(2.0 * n) * h.hnm1;  // derivative of h_n
            const double dz = h.hn / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) throw std::runtime_error("Gauss-Hermite Newton iteration failed");

        z_prev2 = z_prev1;
        z_prev1 = z;

        // Middle node of an odd rule sits exactly at zero.
        if (2 * i + 1 == n && std::abs(z) < 1e-12) z = 0.0;

        rule.nodes[n - 1 - i] = z;
        rule.nodes[i] = -z;
        const double w = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    return rule;
}

const GaussHermiteRule& gauss_hermite(int n) {
    static std::map<int, GaussHermiteRule> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, compute_gauss_hermite(n)).first;
    }
    return it->second;
}

}  // namespace bhbeam::quadrature
