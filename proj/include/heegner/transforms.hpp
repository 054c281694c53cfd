#pragma once
// The three Kuznetsov-type integral transforms, the Voronoi transform kernels,
// and the averaged half-integral Bessel k-sum.

#include "heegner/arith.hpp"
#include "heegner/smoothweight.hpp"

#include <functional>

namespace heegner {

struct TransformVal {
    cdbl value;
    double err;
};

// h*(x)  = 2i int J_{2it}(4 pi x)/sinh(pi t) h(t) t tanh(pi t) dt / (4 pi)
// h**(x) = (4/pi) int K_{2it}(4 pi x) sinh(pi t) h(t) t dt / (4 pi)
// H+(x)  = int F(x, t, 1/2)/cosh(pi t) H(t) t dt / pi          (the dagger transform)
// h (resp. H) is an even real function given on t >= 0; tmax truncates where it is
// negligible (tail absorbed into err via the integrand bound at tmax).
TransformVal h_star(const std::function<double(double)>& h, double x, double tmax);
TransformVal h_star_star(const std::function<double(double)>& h, double x, double tmax);
TransformVal h_dagger(const std::function<double(double)>& H, double x, double tmax);

// Voronoi kernels of weight k in {1/2, 3/2} and spectral parameter r:
//   same-sign:     J^{++}, J^{--} built from F(2 sqrt x, 2r, -+k)/sin(2 pi i r)
//   opposite-sign: J^{+-}, J^{-+} = 2 K_{2ir}(2 sqrt x)/(Gamma(1/2 +- k/2 + ir) * conj)
struct VoronoiKernels {
    double Jpp, Jmm, Jpm, Jmp;
};
VoronoiKernels voronoi_kernels(double x, double r, double k);

// Closed-form kernels of the Hurwitz class-number summation formula.
inline double jclean_plus(double x) {
    return std::sin(2 * std::sqrt(x)) / (std::sqrt(M_PI) * std::pow(x, 0.25));
}
inline double jclean_minus(double x) {
    return 2 * std::exp(-2 * std::sqrt(x)) / std::pow(x, 0.25);
}

// sum_{k even} i^k w(k/K) J_{k-3/2}(x) evaluated directly (lhs) and through the
// stationary-phase-free double-integral form (rhs).
struct BesselSum {
    cdbl lhs, rhs;
    double rhs_err;
};
BesselSum bessel_sum_over_k(const SmoothBump& w, double K, double x);

} // namespace heegner
