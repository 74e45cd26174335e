#include "bhbeam/specfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bhbeam::specfn {

namespace {

void check_degree(int degree, const char* what) {
    if (degree < 0) {
        throw std::invalid_argument(std::string(what) + " degree must be non-negative");
    }
    if (degree > kMaxDegree) {
        throw std::invalid_argument(std::string(what) + " degree above supported maximum");
    }
}

}  // namespace

double hermite(int m, double x) {
    check_degree(m, "Hermite");
    if (m == 0) return 1.0;
    double hkm1 = 1.0;        // H_0
    double hk = 2.0 * x;      // H_1
    for (int k = 1; k < m; ++k) {
        const double hkp1 = 2.0 * x * hk - 2.0 * k * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return hk;
}

double laguerre(int p, int a, double x) {
    check_degree(p, "Laguerre");
    if (a < 0) throw std::invalid_argument("Laguerre order a must be non-negative");
    if (p == 0) return 1.0;
    double lkm1 = 1.0;                 // L_0^a
    double lk = 1.0 + a - x;           // L_1^a
    for (int k = 1; k < p; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double factorial(int m) {
    check_degree(m, "factorial");
    double f = 1.0;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

double gaussian_moment(int m, double alpha, int power) {
    check_degree(m, "Hermite");
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw std::domain_error("gaussian_moment requires alpha > 0");
    }
    if (power == 1) return 0.0;

    double norm = 1.0;  // 2^m m!
    for (int k = 1; k <= m; ++k) norm *= 2.0 * k;

    const double pi = std::numbers::pi;
    switch (power) {
        case 0:
            return norm * std::sqrt(pi / alpha);
        case 2:
            return norm * std::sqrt(pi / (alpha * alpha * alpha)) * (m + 0.5);
        default:
            throw std::invalid_argument("gaussian_moment power must be 0, 1 or 2");
    }
}

}  // namespace bhbeam::specfn
