#include "bhbeam/wavefield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bhbeam/currents.hpp"
#include "bhbeam/specfn.hpp"

namespace bhbeam {

namespace {

constexpr Complex kImag{0.0, 1.0};

double integer_power(double x, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

}  // namespace

double beam_radius(const BeamParameters& params, double s) {
    const double ratio = s / (2.0 * params.b);
    return params.w0 * std::sqrt(1.0 + ratio * ratio);
}

double gouy_phase(const BeamParameters& params, double s) {
    return params.gouy_multiplier() * std::atan(s / (2.0 * params.b));
}

double normalization_constant(const BeamParameters& params) {
    const double pi = std::numbers::pi;
    const double area = pi * params.w0 * params.w0 * params.L;
    if (const auto* hg = std::get_if<HermiteGaussian>(&params.mode)) {
        const double herm_norm = std::ldexp(1.0, hg->m + hg->n) *
                                 specfn::factorial(hg->m) * specfn::factorial(hg->n);
        return std::sqrt(2.0 / (area * herm_norm));
    }
    const auto& lg = std::get<LaguerreGaussian>(params.mode);
    const int la = std::abs(lg.l);
    return std::sqrt(2.0 * specfn::factorial(lg.p) /
                     (area * specfn::factorial(lg.p + la)));
}

Complex envelope(const BeamParameters& params, const EventCoordinates& coords,
                 const Perturbation& perturbation) {
    const double s = coords.s(params.units.c);
    const double b = params.b * perturbation.b_scale;
    const double w0 = params.w0;
    const double ratio = s / (2.0 * b);
    const double w = w0 * std::sqrt(1.0 + ratio * ratio);
    const double gouy_mult =
        perturbation.gouy_multiplier.value_or(params.gouy_multiplier());

    // exp[ i 2b rho^2 / (w0^2 (s - i 2b)) - i g ]; the single complex
    // denominator carries both the Gaussian decay and the wavefront curvature.
    const Complex exponent =
        kImag * 2.0 * b * coords.rho2() / (w0 * w0 * Complex(s, -2.0 * b)) -
        kImag * gouy_mult * std::atan(ratio);
    const Complex gaussian = std::exp(exponent);

    const double amp = normalization_constant(params) * w0 / w;
    const double arg_scale = std::numbers::sqrt2 / w;

    if (const auto* hg = std::get_if<HermiteGaussian>(&params.mode)) {
        return amp * specfn::hermite(hg->m, arg_scale * coords.xi1) *
               specfn::hermite(hg->n, arg_scale * coords.xi2) * gaussian;
    }

    const auto& lg = std::get<LaguerreGaussian>(params.mode);
    const int la = std::abs(lg.l);
    const double rho = std::sqrt(coords.rho2());
    const double xi_phi = (rho > 0.0) ? std::atan2(coords.xi2, coords.xi1) : 0.0;
    const double radial = integer_power(arg_scale * rho, la) *
                          specfn::laguerre(lg.p, la, 2.0 * coords.rho2() / (w * w));
    return amp * radial * std::exp(kImag * static_cast<double>(lg.l) * xi_phi) *
           gaussian;
}

Complex evaluate(const BeamParameters& params, const EventCoordinates& coords,
                 const WaistEvent& waist, const Perturbation& perturbation) {
    const double x3 = waist.x3 + coords.xi3;
    const double t = waist.t + coords.tau;
    const double c = params.units.c;
    const Complex phase = std::exp(
        kImag * ((params.k3 + params.kappa) * x3 - c * (params.k4 - params.kappa) * t));
    return envelope(params, coords, perturbation) * phase;
}

Complex evaluate_hg(const BeamParameters& params, const EventCoordinates& coords,
                    const WaistEvent& waist) {
    if (!is_hermite(params.mode)) {
        throw std::invalid_argument("evaluate_hg requires a Hermite-Gaussian mode");
    }
    return evaluate(params, coords, waist);
}

Complex evaluate_lg(const BeamParameters& params, const EventCoordinates& coords,
                    const WaistEvent& waist) {
    if (is_hermite(params.mode)) {
        throw std::invalid_argument("evaluate_lg requires a Laguerre-Gaussian mode");
    }
    return evaluate(params, coords, waist);
}

double probability_density(const BeamParameters& params,
                           const EventCoordinates& coords) {
    return std::norm(evaluate(params, coords));
}

double klein_gordon_density(const BeamParameters& params,
                            const EventCoordinates& coords) {
    const CurrentSample sample = is_hermite(params.mode)
                                     ? current_analytic(params, coords)
                                     : current_numeric(params, coords);
    return sample.j.c4 / params.units.c;
}

SchrodingerForm schrodinger_form(const BeamParameters& params,
                                 const EventCoordinates& coords) {
    const auto* hg = std::get_if<HermiteGaussian>(&params.mode);
    if (hg == nullptr) {
        throw std::invalid_argument("schrodinger_form requires a Hermite-Gaussian mode");
    }
    const double hbar = params.units.hbar;
    const double m0 = params.m0;
    const double w0 = params.w0;
    if (m0 <= 0.0) throw std::domain_error("schrodinger_form requires m0 > 0");

    SchrodingerForm out;
    out.omega0 = hbar / (m0 * w0 * w0);
    const double theta = 2.0 * out.omega0 * coords.tau;
    out.wS = w0 * std::sqrt(1.0 + theta * theta);

    const double arg_scale = std::numbers::sqrt2 / out.wS;
    const double rho2 = coords.rho2();
    out.R = normalization_constant(params) * (w0 / out.wS) *
            specfn::hermite(hg->m, arg_scale * coords.xi1) *
            specfn::hermite(hg->n, arg_scale * coords.xi2) *
            std::exp(-rho2 / (out.wS * out.wS));

    // Phase: P3 x3 - E t - N hbar omega0 t + 2 rho^2 hbar omega0 tau / wS^2
    //        - hbar N atan(2 omega0 tau), with the energy constant
    // E = P3^2/(2 m0) - N hbar omega0; this is the unique constant for which
    // the Hamilton-Jacobi equation holds, and it reduces the first three
    // terms to the free-packet form P3 x3 - (P3^2/2m0) t.
    const int N = params.gouy_multiplier();
    const double P3 = hbar * params.k3;
    const double E = P3 * P3 / (2.0 * m0) - N * hbar * out.omega0;
    const double t = coords.tau;  // waist event at the origin
    out.S = P3 * coords.xi3 - E * t - N * hbar * out.omega0 * t +
            2.0 * rho2 * hbar * out.omega0 * coords.tau / (out.wS * out.wS) -
            hbar * N * std::atan(theta);
    return out;
}

}  // namespace bhbeam
