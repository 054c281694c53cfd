#pragma once
// Bessel functions of imaginary and general complex order, the combined kernel
// F(x, t, kappa), and renormalized K-Bessel evaluations.
//
// The central object is Z(x, t) = e^{-pi t/2} H1_{it}(x), which stays O(x^{-1/2})
// uniformly in t. Both symmetric kernels are its real and imaginary part:
//   bplus(x,t)  = (J_{it} + J_{-it})(x) / (2 cosh(pi t/2)) = Re Z,   bplus(x,0)  = J_0(x)
//   bminus(x,t) = (J_{it} - J_{-it})(x) / (2i sinh(pi t/2)) = Im Z,  bminus(x,0) = Y_0(x)

#include "heegner/arith.hpp"

namespace heegner {

struct ZVal {
    cdbl z;
    double err; // absolute error estimate
};

// Supported region: x <= 20 + (pi/2)|t|  (power series, long double),
// or asymptotic region (Hankel series converges to ~1e-10), or the gap with |t| <= 19
// (Mehler-Sonine contour, degraded accuracy ~ e^{pi|t|/2} * 1e-18).
// Throws std::domain_error outside.
ZVal z_hankel(double x, double t);

double bplus(double x, double t);
double bminus(double x, double t);

// F(x, t, kappa) = J_{it}(x) cos(pi kappa/2 - pi i t/2) - J_{-it}(x) cos(pi kappa/2 + pi i t/2)
//               = i sinh(pi t) [cos(pi kappa/2) bminus + sin(pi kappa/2) bplus](x, t)
cdbl f_kernel(double x, double t, double kappa);
// F(x, t, kappa) / (i sinh(pi t)); finite at t = 0.
double f_kernel_over_i_sinh(double x, double t, double kappa);

// J_nu(x) for complex order; real x > 0. Series / Hankel-asymptotic regimes with the
// same support policy as z_hankel (for purely imaginary order the full envelope applies).
cdbl bessel_j(cdbl nu, double x);

// K_{it}(x), real-valued; absolute error <= ~1e-12 (cosh-integral quadrature).
// Requires x > 1e-3 and |t| <= 60.
struct KVal {
    double value;
    double err;
};
KVal bessel_k_imag(double t, double x);

// Renormalized e^{pi tau/2} K_{i tau}(y), stable for 0 <= tau <= 120, y > 1e-3.
double k_tilde(double y, double tau);

// Spherical-Bessel ladder: J_{n+1/2}(x) for n = 0..nmax via Miller's downward
// recurrence (stable in both n < x and n > x regimes).
std::vector<double> bessel_j_half_ladder(int nmax, double x);

} // namespace heegner
