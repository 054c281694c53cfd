#include "heegner/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace heegner {

// Stirling series coefficients B_{2k} / (2k (2k-1))
static const double stirling_c[] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156, -3617.0 / 122400, 43867.0 / 244188, -174611.0 / 125400,
};

static cdbl log_gamma_stirling(cdbl z) {
    cdbl lz = std::log(z);
    cdbl s = (z - 0.5) * lz - z + 0.91893853320467274178; // log sqrt(2 pi)
    cdbl zi = 1.0 / z, zi2 = zi * zi, p = zi;
    for (double c : stirling_c) {
        s += c * p;
        p *= zi2;
    }
    return s;
}

cdbl log_gamma(cdbl z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection with unwound log sin(pi z): keeps the principal branch
        cdbl lgs; // log sin(pi z)
        double y = z.imag();
        cdbl ipz = cdbl(0, M_PI) * z;
        if (y >= 0) {
            // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), |e^{2 pi i z}| = e^{-2 pi y} <= 1
            lgs = -ipz + cdbl(-std::log(2.0), M_PI_2) + std::log(1.0 - std::exp(2.0 * ipz));
        } else {
            lgs = ipz + cdbl(-std::log(2.0), -M_PI_2) + std::log(1.0 - std::exp(-2.0 * ipz));
        }
        return std::log(M_PI) - lgs - log_gamma(1.0 - z);
    }
    // shift into the Stirling region
    cdbl acc = 0.0, w = z;
    while (std::abs(w) < 20.0) {
        acc -= std::log(w);
        w += 1.0;
    }
    return log_gamma_stirling(w) + acc;
}

cdbl gamma_fn(cdbl z) { return std::exp(log_gamma(z)); }

long double abs_gamma_one_plus_it(long double t) {
    if (t < 0) t = -t;
    if (t < 1e-18L) return 1.0L;
    long double pt = 3.14159265358979323846264338328L * t;
    // sqrt(pi t / sinh(pi t)); for large t use the exponential form to avoid overflow
    if (pt > 30.0L) return sqrtl(2.0L * pt) * expl(-pt / 2.0L) / sqrtl(1.0L - expl(-2.0L * pt));
    return sqrtl(pt / sinhl(pt));
}

} // namespace heegner
