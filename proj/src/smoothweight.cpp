#include "heegner/smoothweight.hpp"

#include <algorithm>
#include <cmath>

namespace heegner {

double SmoothBump::derivative(double y, int order) const {
    double scale = 2.0 / (hi - lo);
    double u = (2 * y - lo - hi) / (hi - lo);
    if (u <= -1 || u >= 1) return 0.0;
    double q = 1.0 / (1.0 - u * u);
    double phi = std::exp(1.0 - q);
    if (order == 0) return phi;
    // q-derivatives in u
    double q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q;
    double u2 = u * u, u3 = u2 * u, u4 = u2 * u2;
    double q1d = 2 * u * q2;
    double q2d = 2 * q2 + 8 * u2 * q3;
    double q3d = 24 * u * q3 + 48 * u3 * q4;
    double q4d = 24 * q3 + 288 * u2 * q4 + 384 * u4 * q5;
    double g1 = -q1d;
    double g2 = -q2d + q1d * q1d;
    double g3 = -q3d + 3 * q1d * q2d - q1d * q1d * q1d;
    double g4 = -q4d + 3 * q2d * q2d + 4 * q1d * q3d - 6 * q1d * q1d * q2d +
                q1d * q1d * q1d * q1d;
    double du = 1;
    for (int i = 0; i < order; ++i) du *= scale;
    switch (order) {
        case 1: return g1 * phi * du;
        case 2: return g2 * phi * du;
        case 3: return g3 * phi * du;
        case 4: return g4 * phi * du;
        default: return 0.0;
    }
}

double SmoothBump::sup_deriv(int order, int samples) const {
    double m = 0;
    for (int i = 1; i < samples; ++i) {
        double y = lo + (hi - lo) * i / samples;
        m = std::max(m, std::abs(derivative(y, order)));
    }
    return m;
}

double plateau_cutoff(double xi) {
    double a = std::abs(xi);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    auto q = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
    double n = q(2.0 - a);
    return n / (n + q(a - 1.0));
}

} // namespace heegner
