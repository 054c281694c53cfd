#pragma once
// Riemann zeta, real Dirichlet L-functions via Hurwitz zeta, the non-primitive
// series L(D, s), Eisenstein Hecke eigenvalues, and smoothed central values.

#include "heegner/arith.hpp"

#include <functional>

namespace heegner {

struct LSeriesPoint {
    cdbl value;
    double achieved_err;
};

// Euler-Maclaurin zeta, relative error ~1e-12 for |Im s| <= 200, s != 1.
cdbl zeta(cdbl s);

// Hurwitz zeta(s, a) for 0 < a <= 1 (s != 1).
cdbl hurwitz_zeta(cdbl s, double a);
// zeta(s, a) - 1/(s-1): analytic through s = 1.
cdbl hurwitz_zeta_reg(cdbl s, double a);

// L(chi_Delta, s) for a fundamental discriminant Delta (Delta = 1 gives zeta).
// Computed as |Delta|^{-s} sum_r chi(r) zeta(s, r/|Delta|); the r-sum of the pole
// terms cancels for Delta != 1, so s = 1 is fine there.
LSeriesPoint dirichlet_L(i64 delta, cdbl s);

// chi_Delta(r) table of length |Delta| (index r mod |Delta|), cached.
const std::vector<int>& character_table(i64 delta);

// L(D, s) = L(chi_Delta, s) sum_{d | f} mu(d) chi_Delta(d) sigma_{1-2s}(f/d) d^{-s}
// for D = Delta f^2 < 0; 'alt_route' instead uses the rho-form
// L(chi_Delta, s) f^{1/2-s} sum_{d|f} mu(d) chi_Delta(d) rho_s(f/d) d^{-1/2}.
LSeriesPoint L_D(i64 D, cdbl s, bool alt_route = false);

// Completed Lambda(D, s) = L(D, s) |D|^{s/2} Gamma((s + a)/2) pi^{-s/2}, a = 1 for D < 0.
cdbl Lambda_D(i64 D, cdbl s);

// Eisenstein Hecke eigenvalue rho_s(n) = n^{s - 1/2} sigma_{1-2s}(n).
cdbl rho_eigenvalue(cdbl s, i64 n);
// real-valued rho_{1/2 + it}(n)
double rho_half_it(double t, i64 n);

// Extend prime Hecke eigenvalues to all n by GL(2) multiplicativity.
class HeckeEigenvalues {
  public:
    explicit HeckeEigenvalues(std::function<double(i64)> lambda_p) : lp_(std::move(lambda_p)) {}
    double operator()(i64 n) const;

  private:
    std::function<double(i64)> lp_;
};

// Smoothed central value 2 sum_n lambda(n) chi_Delta(n) n^{-1/2} W_t(n/|Delta|),
// truncated at n > (1+|t|) |Delta| * 25; subtracts the Delta = 1 polar term when
// eisenstein is set. Returns the value and the truncation-tail estimate.
LSeriesPoint approx_L_half(const std::function<double(i64)>& lambda, i64 delta, double t,
                           bool eisenstein);

// The polar correction of the Eisenstein approximate functional equation at Delta = 1.
double eisenstein_polar_term(double t);

} // namespace heegner
