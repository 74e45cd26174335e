#pragma once

#include <cmath>
#include <string>
#include <variant>

namespace bhbeam {

/// Unit system carried through every formula. Natural units (hbar = c = 1)
/// by default; the non-relativistic limit checks scale c explicitly.
struct UnitSystem {
    double hbar = 1.0;
    double c = 1.0;
};

/// Hermite-Gaussian transverse mode indices (m, n >= 0).
struct HermiteGaussian {
    int m = 0;
    int n = 0;
};

/// Laguerre-Gaussian mode indices: azimuthal l (sign = sense of the vortex)
/// and radial p >= 0.
struct LaguerreGaussian {
    int l = 0;
    int p = 0;
};

using BeamMode = std::variant<HermiteGaussian, LaguerreGaussian>;

bool is_hermite(const BeamMode& mode);

/// Mode constant: 1+m+n for HG, 1+|l|+2p for LG. Multiplies the Gouy phase
/// and fixes the axial parameter kappa.
int mode_constant(const BeamMode& mode);

/// Short label, e.g. "hg:1,2" or "lg:-2,1".
std::string mode_label(const BeamMode& mode);

/// Real 4-vector; component 4 is time-like.
struct FourVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

/// a4*b4 - a1*b1 - a2*b2 - a3*b3 (time-favoring signature).
double contraction(const FourVector& a, const FourVector& b);

/// Coordinates of a field event relative to the beam waist event.
struct EventCoordinates {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;  // length
    double tau = 0.0;  // time

    /// Axial light-cone coordinate s = xi3 + c*tau; the envelope depends on
    /// xi3 and tau only through s.
    double s(double c) const { return xi3 + c * tau; }
    double rho2() const { return xi1 * xi1 + xi2 * xi2; }
};

/// Absolute 4-position of the waist event. The plane-wave phase is anchored
/// to absolute x3 and t, so evaluators accept this alongside the relative
/// coordinates; it defaults to the origin.
struct WaistEvent {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double t = 0.0;
};

/// Positive root of the temporal wavenumber:
/// k4 = sqrt(k3^2 + 2N/w0^2 + (m0 c / hbar)^2).
/// The mode-dependent term 2*kappa*(k3+k4) collapses to 2N/w0^2, so the root
/// is explicit. Throws std::domain_error on invalid or non-finite input.
double solve_dispersion(double m0, double w0, double k3, double N,
                        const UnitSystem& units = {});

struct BoostedCoordinates {
    double x3;
    double tau;
};

struct BoostedWaveVector {
    double k3;
    double k4;
};

/// Axial Lorentz boost of an event, beta = v/c, |beta| < 1:
/// x3' = gamma (x3 - v tau), tau' = gamma (tau - v x3 / c^2).
BoostedCoordinates boost_coordinates(double x3, double tau, double beta,
                                     const UnitSystem& units = {});

/// Axial Lorentz boost of the wave vector:
/// k3' = gamma (k3 - beta k4), k4' = gamma (k4 - beta k3).
/// Preserves k4^2 - k3^2.
BoostedWaveVector boost_wavevector(double k3, double k4, double beta);

/// Beam parameter set: inputs plus every derived quantity the field formulas
/// need. Immutable after construction; safe to share across threads.
struct BeamParameters {
    UnitSystem units;
    BeamMode mode;
    double m0 = 1.0;  // rest mass
    double w0 = 1.0;  // waist radius
    double k3 = 0.0;  // axial wavenumber
    double L = 1.0;   // normalization length

    // Derived.
    double N = 1.0;      // mode constant entering kappa and the dispersion
    double k4 = 0.0;     // temporal wavenumber (positive root)
    double kappa = 0.0;  // axial parameter N / ((k3+k4) w0^2) = N / (4b)
    double b = 0.0;      // confinement parameter w0^2 (k3+k4) / 4
    double v3 = 0.0;     // axial velocity c k3/k4

    static BeamParameters derive(double m0, double w0, double k3,
                                 const BeamMode& mode, double L = 1.0,
                                 const UnitSystem& units = {});

    /// Same as derive() but with an explicit mode constant N in kappa and the
    /// dispersion. The envelope keeps its structural Gouy multiplier, so the
    /// result is still an exact solution; used by the wrong-N negative
    /// controls of the expectation suite.
    static BeamParameters derive_with_mode_constant(double m0, double w0,
                                                    double k3,
                                                    const BeamMode& mode,
                                                    double N, double L = 1.0,
                                                    const UnitSystem& units = {});

    /// Gouy multiplier of the envelope (1+m+n or 1+|l|+2p). Structural:
    /// determined by the mode, not by the N override.
    int gouy_multiplier() const { return mode_constant(mode); }

    /// K_T = 2 kappa (k3 + k4) = 2N/w0^2.
    double transverse_wavenumber_sq() const { return 2.0 * N / (w0 * w0); }

    /// kappa housed as a 4-vector: (0, 0, kappa, -kappa).
    FourVector kappa_vector() const { return {0.0, 0.0, kappa, -kappa}; }

    /// Wave vector as a 4-vector: (0, 0, k3, k4).
    FourVector wave_vector() const { return {0.0, 0.0, k3, k4}; }
};

/// Parameters of the same beam seen from a frame boosted by beta along the
/// axis. w0, m0, L and the mode are unchanged; (k3, k4) transform.
BeamParameters boosted(const BeamParameters& params, double beta);

}  // namespace bhbeam
