#pragma once

#include <complex>
#include <optional>

#include "bhbeam/core.hpp"

namespace bhbeam {

using Complex = std::complex<double>;

/// Deliberate corruptions of the closed-form solution. The residual suites
/// use these as negative controls proving they have detection power; normal
/// evaluation leaves them unset.
struct Perturbation {
    std::optional<double> gouy_multiplier;  // replaces the structural multiplier
    double b_scale = 1.0;                   // rescales b inside the envelope only

    bool active() const { return gouy_multiplier.has_value() || b_scale != 1.0; }
};

/// Beam radius w(s) = w0 sqrt(1 + (s/2b)^2), s = xi3 + c tau.
double beam_radius(const BeamParameters& params, double s);

/// Gouy phase (1+m+n) atan(s/2b) for HG, (1+|l|+2p) atan(s/2b) for LG.
double gouy_phase(const BeamParameters& params, double s);

/// Amplitude constant fixing the slice norm to 1/L:
///   HG: sqrt(2 / (pi w0^2 L 2^{m+n} m! n!))
///   LG: sqrt(2 p! / (pi w0^2 L (p+|l|)!))
double normalization_constant(const BeamParameters& params);

/// Envelope Phi(xi1, xi2, s) alone, without the plane-wave phase.
Complex envelope(const BeamParameters& params, const EventCoordinates& coords,
                 const Perturbation& perturbation = {});

/// Full wavefunction: envelope times exp[i (k3+kappa) x3 - i c (k4-kappa) t]
/// with x3 = waist.x3 + xi3 and t = waist.t + tau.
Complex evaluate(const BeamParameters& params, const EventCoordinates& coords,
                 const WaistEvent& waist = {},
                 const Perturbation& perturbation = {});

/// Mode-checked entry points.
Complex evaluate_hg(const BeamParameters& params, const EventCoordinates& coords,
                    const WaistEvent& waist = {});
Complex evaluate_lg(const BeamParameters& params, const EventCoordinates& coords,
                    const WaistEvent& waist = {});

/// |Psi|^2, the form-invariant probability density of the constrained
/// solutions (equals m0 (j3+j4) / (hbar (k3+k4))).
double probability_density(const BeamParameters& params,
                           const EventCoordinates& coords);

/// j4/c, the conventional Klein-Gordon density. Kept for contrast with
/// probability_density; the two differ pointwise.
double klein_gordon_density(const BeamParameters& params,
                            const EventCoordinates& coords);

/// Polar decomposition Psi = R exp(iS/hbar) of the non-relativistic (c -> inf)
/// limit of an HG beam, with the spreading spot radius wS and the transverse
/// frequency omega0 = hbar/(m0 w0^2).
struct SchrodingerForm {
    double R = 0.0;       // signed amplitude (Hermite factors may be negative)
    double S = 0.0;       // phase in action units
    double wS = 0.0;      // w0 sqrt(1 + (2 omega0 tau)^2)
    double omega0 = 0.0;
};

SchrodingerForm schrodinger_form(const BeamParameters& params,
                                 const EventCoordinates& coords);

}  // namespace bhbeam
