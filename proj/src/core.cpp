#include "bhbeam/core.hpp"

#include <stdexcept>

namespace bhbeam {

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
}

void validate_mode(const BeamMode& mode) {
    if (const auto* hg = std::get_if<HermiteGaussian>(&mode)) {
        if (hg->m < 0 || hg->n < 0) {
            throw std::invalid_argument("HG indices m, n must be non-negative");
        }
    } else {
        const auto& lg = std::get<LaguerreGaussian>(mode);
        if (lg.p < 0) {
            throw std::invalid_argument("LG radial index p must be non-negative");
        }
    }
}

}  // namespace

bool is_hermite(const BeamMode& mode) {
    return std::holds_alternative<HermiteGaussian>(mode);
}

int mode_constant(const BeamMode& mode) {
    if (const auto* hg = std::get_if<HermiteGaussian>(&mode)) {
        return 1 + hg->m + hg->n;
    }
    const auto& lg = std::get<LaguerreGaussian>(mode);
    return 1 + std::abs(lg.l) + 2 * lg.p;
}

std::string mode_label(const BeamMode& mode) {
    if (const auto* hg = std::get_if<HermiteGaussian>(&mode)) {
        return "hg:" + std::to_string(hg->m) + "," + std::to_string(hg->n);
    }
    const auto& lg = std::get<LaguerreGaussian>(mode);
    return "lg:" + std::to_string(lg.l) + "," + std::to_string(lg.p);
}

double contraction(const FourVector& a, const FourVector& b) {
    return a.c4 * b.c4 - a.c1 * b.c1 - a.c2 * b.c2 - a.c3 * b.c3;
}

double solve_dispersion(double m0, double w0, double k3, double N,
                        const UnitSystem& units) {
    require_finite(m0, "m0");
    require_finite(w0, "w0");
    require_finite(k3, "k3");
    require_finite(N, "N");
    if (m0 < 0.0) throw std::domain_error("m0 must be non-negative");
    if (w0 <= 0.0) throw std::domain_error("w0 must be positive");
    if (N < 1.0) throw std::domain_error("mode constant N must be >= 1");
    if (units.hbar <= 0.0 || units.c <= 0.0) {
        throw std::domain_error("hbar and c must be positive");
    }
    const double mc_over_hbar = m0 * units.c / units.hbar;
    return std::sqrt(k3 * k3 + 2.0 * N / (w0 * w0) + mc_over_hbar * mc_over_hbar);
}

namespace {

double lorentz_gamma(double beta) {
    if (!std::isfinite(beta) || std::abs(beta) >= 1.0) {
        throw std::domain_error("|beta| must be < 1");
    }
    return 1.0 / std::sqrt(1.0 - beta * beta);
}

}  // namespace

BoostedCoordinates boost_coordinates(double x3, double tau, double beta,
                                     const UnitSystem& units) {
    const double gamma = lorentz_gamma(beta);
    const double v = beta * units.c;
    return {gamma * (x3 - v * tau), gamma * (tau - v * x3 / (units.c * units.c))};
}

BoostedWaveVector boost_wavevector(double k3, double k4, double beta) {
    const double gamma = lorentz_gamma(beta);
    return {gamma * (k3 - beta * k4), gamma * (k4 - beta * k3)};
}

BeamParameters BeamParameters::derive(double m0, double w0, double k3,
                                      const BeamMode& mode, double L,
                                      const UnitSystem& units) {
    return derive_with_mode_constant(m0, w0, k3, mode,
                                     static_cast<double>(mode_constant(mode)),
                                     L, units);
}

BeamParameters BeamParameters::derive_with_mode_constant(double m0, double w0,
                                                         double k3,
                                                         const BeamMode& mode,
                                                         double N, double L,
                                                         const UnitSystem& units) {
    validate_mode(mode);
    require_finite(L, "L");
    if (L <= 0.0) throw std::domain_error("normalization length L must be positive");

    BeamParameters p;
    p.units = units;
    p.mode = mode;
    p.m0 = m0;
    p.w0 = w0;
    p.k3 = k3;
    p.L = L;
    p.N = N;
    p.k4 = solve_dispersion(m0, w0, k3, N, units);
    p.b = w0 * w0 * (k3 + p.k4) / 4.0;
    p.kappa = N / ((k3 + p.k4) * w0 * w0);
    p.v3 = units.c * k3 / p.k4;
    if (p.b <= 0.0) throw std::domain_error("confinement parameter b must be positive");
    return p;
}

BeamParameters boosted(const BeamParameters& params, double beta) {
    const auto kp = boost_wavevector(params.k3, params.k4, beta);
    BeamParameters p = BeamParameters::derive_with_mode_constant(
        params.m0, params.w0, kp.k3, params.mode, params.N, params.L, params.units);
    // The dispersion root must reproduce the boosted k4; k4^2 - k3^2 is the
    // boost invariant that makes this exact up to rounding.
    p.k4 = kp.k4;
    p.b = params.w0 * params.w0 * (kp.k3 + kp.k4) / 4.0;
    p.kappa = params.N / ((kp.k3 + kp.k4) * params.w0 * params.w0);
    p.v3 = params.units.c * kp.k3 / kp.k4;
    return p;
}

}  // namespace bhbeam
