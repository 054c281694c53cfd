#pragma once
// Compactly supported C-infinity bumps with analytically coded derivatives, and a
// smooth plateau cutoff. These drive the Voronoi tests, the Bessel k-sum, and the
// truncation bounds that need explicit derivative values.

namespace heegner {

// phi(y) = exp(1 - 1/(1 - u^2)) on (lo, hi), u = (2y - lo - hi)/(hi - lo); zero outside.
// All derivatives vanish at the support boundary. derivative() supports order 0..4.
struct SmoothBump {
    double lo, hi;
    SmoothBump(double lo_, double hi_) : lo(lo_), hi(hi_) {}
    double operator()(double y) const { return derivative(y, 0); }
    double derivative(double y, int order) const;
    double sup_deriv(int order, int samples = 2000) const; // max |phi^{(order)}| on the support
};

// Plateau cutoff: 1 on [-1, 1], 0 outside (-2, 2), C-infinity in between.
double plateau_cutoff(double xi);

} // namespace heegner
