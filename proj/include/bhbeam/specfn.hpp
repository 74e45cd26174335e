#pragma once

namespace bhbeam::specfn {

/// Degree guard for the polynomial recurrences.
inline constexpr int kMaxDegree = 64;

/// Physicists' Hermite polynomial H_m(x):
/// H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite(int m, double x);

/// Generalized Laguerre polynomial L_p^a(x) for integer order a >= 0:
/// L_0 = 1, (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}.
double laguerre(int p, int a, double x);

/// Closed-form Gaussian moments of squared Hermite polynomials with the
/// standard 2^m m! norm:
///   power 0:  integral of H_m(sqrt(a) x)^2 exp(-a x^2)      = 2^m m! sqrt(pi/a)
///   power 1:  0 (odd integrand)
///   power 2:  integral of x^2 H_m(sqrt(a) x)^2 exp(-a x^2)  = 2^m m! sqrt(pi/a^3) (m + 1/2)
double gaussian_moment(int m, double alpha, int power);

/// m! as a double (exact through the degree guard).
double factorial(int m);

}  // namespace bhbeam::specfn
