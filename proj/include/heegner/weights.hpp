#pragma once
// Contour-integral weight functions: the approximate-functional-equation weight
// W_t(x) and the Koecher-Maass weight V_t(x; k, tau) with its gamma factor.

#include "heegner/arith.hpp"

namespace heegner {

struct WeightVal {
    double value;
    double err;
};

// W_t(x) = (1/2 pi i) int_(2) g_a(s, t) e^{s^2} x^{-s} ds / s  with
// g_a(s,t) = Gamma((1/2 + a + s + it)/2) Gamma((1/2 + a + s - it)/2)
//          / (Gamma((1/2 + a + it)/2) Gamma((1/2 + a - it)/2) pi^s),
// a = 1 for the negative-discriminant weight, a = 0 for the positive one.
// For x < 1 the s = 0 residue (= 1) is extracted and the contour shifted left.
WeightVal weight_w(double t, double x, int frak_a);

// Same weight for complex spectral parameter (used for analytic tail bounds).
cdbl weight_w_complex(cdbl t, double x, int frak_a);

// Batched evaluation of W_{t_j}(x) over a fixed set of spectral values: the
// gamma-factor tables on the s-nodes are built once.
class WtTable {
  public:
    WtTable(std::vector<double> ts, int frak_a);
    // values of W_{t_j}(x) for all j
    std::vector<double> eval(double x) const;
    const std::vector<double>& ts() const { return ts_; }

  private:
    std::vector<double> ts_;
    int frak_a_;
    std::vector<double> ynodes_, yweights_;
    // gam_[j][i] = g_a(2 + i y_i, t_j) e^{(2+i y_i)^2} / (2 + i y_i)
    std::vector<std::vector<cdbl>> gam_pos_;
    // shifted contour (Re s = s_neg) version for x < 1
    double s_neg_;
    std::vector<std::vector<cdbl>> gam_neg_;
};

// curly gamma factor: G(k, tau, s) = pi^{-2s} 2^k Gamma((k-1)/2 + s - 1/4 + i tau/2)
//                     * Gamma((k-1)/2 + s - 1/4 - i tau/2) / sqrt(Gamma(k) Gamma(k - 3/2))
cdbl curly_g(double k, double tau, cdbl s);

// V_t(x; k, tau) = (1/2 pi i) int_(3) e^{v^2} G(k,tau,v+1/2+it) G(k,tau,v+1/2-it) x^{-v} dv/v
WeightVal weight_v(double t, double x, double k, double tau);

// Gamma(k + s)/Gamma(k): exact (log-gamma) and the k^s exp(-t^2/2k) asymptotic.
cdbl gamma_ratio_exact(double k, cdbl s);
cdbl gamma_ratio_asymptotic(double k, cdbl s);

} // namespace heegner
