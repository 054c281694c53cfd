#include "heegner/transforms.hpp"

#include "heegner/bessel.hpp"
#include "heegner/gammafn.hpp"
#include "heegner/quadrature.hpp"

#include <cmath>

namespace heegner {

TransformVal h_star(const std::function<double(double)>& h, double x, double tmax) {
    // = -(1/pi) int_0^tmax bminus(4 pi x, 2t) h(t) t tanh(pi t) dt
    double y = 4 * M_PI * x;
    auto f = [&](double t) { return bminus(y, 2 * t) * h(t) * t * std::tanh(M_PI * t); };
    auto q = integrate_adaptive(f, 0, tmax, 1e-11);
    double tail = std::abs(h(tmax)) * tmax * 2.0; // |bminus| = O(1) beyond
    return {cdbl(-q.value / M_PI, 0), q.err / M_PI + tail};
}

TransformVal h_star_star(const std::function<double(double)>& h, double x, double tmax) {
    // = (1/pi^2) int_0^tmax ktilde(4 pi x, 2t) (1 - e^{-2 pi t}) h(t) t dt
    double y = 4 * M_PI * x;
    if (y > 740) return {cdbl(0, 0), 1e-300}; // K decays like e^{-y}
    auto f = [&](double t) {
        return k_tilde(y, 2 * t) * (1.0 - std::exp(-2 * M_PI * t)) * h(t) * t;
    };
    auto q = integrate_adaptive(f, 0, tmax, 1e-11, 8);
    double tail = std::abs(h(tmax)) * tmax * 2.0;
    return {cdbl(q.value / (M_PI * M_PI), 0), q.err / (M_PI * M_PI) + tail};
}

TransformVal h_dagger(const std::function<double(double)>& H, double x, double tmax) {
    // = i (sqrt 2 / pi) int_0^tmax tanh(pi t) (bplus + bminus)(x, t) H(t) t dt
    auto f = [&](double t) {
        ZVal Z = z_hankel(x, t);
        return std::tanh(M_PI * t) * (Z.z.real() + Z.z.imag()) * H(t) * t;
    };
    auto q = integrate_adaptive(f, 0, tmax, 1e-11);
    double tail = std::abs(H(tmax)) * tmax * 2.0;
    return {cdbl(0, std::sqrt(2.0) / M_PI * q.value), q.err * std::sqrt(2.0) / M_PI + tail};
}

VoronoiKernels voronoi_kernels(double x, double r, double k) {
    double X = 2 * std::sqrt(x);
    VoronoiKernels out;
    if (std::abs(r) < 1e-14) r = 0.0;
    ZVal Z = z_hankel(X, 2 * r);
    double c = std::cos(M_PI * k / 2), s = std::sin(M_PI * k / 2);
    // J^{±,±}(x) = -F(2 sqrt x, 2r, ∓k)/sin(2 pi i r) = -[cos bminus ∓ sin bplus]
    out.Jpp = -(c * Z.z.imag() - s * Z.z.real());
    out.Jmm = -(c * Z.z.imag() + s * Z.z.real());
    // J^{±,∓}(x) = 2 K_{2ir}(2 sqrt x) / (Gamma(1/2 ± k/2 + ir) Gamma(1/2 ± k/2 - ir))
    double kt = k_tilde(X, 2 * std::abs(r));
    for (int sgn : {+1, -1}) {
        double a = 0.5 + sgn * k / 2;
        double val;
        if (a > 0 || std::abs(r) > 1e-12) {
            double relog = log_gamma(cdbl(a, r)).real();
            val = 2.0 * kt * std::exp(-M_PI * std::abs(r) - 2.0 * relog);
        } else {
            // a <= 0, r = 0: Gamma(a)^2 in the denominator, finite nonzero
            double g = std::tgamma(a);
            val = 2.0 * kt / (g * g);
        }
        if (sgn > 0) out.Jpm = val; else out.Jmp = val;
    }
    return out;
}

BesselSum bessel_sum_over_k(const SmoothBump& w, double K, double x) {
    BesselSum out;
    // direct side: k even, w supported in [lo K, hi K]
    int klo = std::max(2, 2 * (int)std::floor(w.lo * K / 2));
    int khi = 2 * (int)std::ceil(w.hi * K / 2) + 2;
    auto ladder = bessel_j_half_ladder(khi - 2, x); // ladder[n] = J_{n+1/2}(x)
    cdbl lhs = 0;
    for (int k = klo; k <= khi; k += 2) {
        double wk = w(k / K);
        if (wk == 0) continue;
        double sgn = (k % 4 == 0) ? 1.0 : -1.0; // i^k for even k
        lhs += sgn * wk * ladder[k - 2];        // J_{k-3/2} = J_{(k-2)+1/2}
    }
    out.lhs = lhs;

    // transform side: W2±(x) = (e(±3/8)/2) e^{∓ix} ∫ v(θ K^{-1/10}) e(-3θ/2K)
    //                 e^{±ix cos(2πθ/K)} ŵ(θ) dθ,   ŵ(θ) = ∫ w(y) e(yθ) dy
    double thmax = 2.0 * std::pow(K, 0.1);
    auto what = [&](double th) {
        auto f = [&](double y) { return cdbl(w(y), 0) * unit_e(y * th); };
        return integrate_gl_c(f, w.lo, w.hi, 64);
    };
    auto integrand = [&](double th, int pm) {
        cdbl ph = unit_e(-1.5 * th / K + pm * x * std::cos(2 * M_PI * th / K) / (2 * M_PI));
        return plateau_cutoff(th / std::pow(K, 0.1)) * ph * what(th);
    };
    // total phase variation of e^{ix cos(2 pi theta/K)} over [-thmax, thmax]
    double total_phase = 2 * M_PI * M_PI * std::abs(x) * thmax * thmax / (K * K) +
                         3 * thmax / K + 2 * thmax * (w.hi + 1);
    int panels = std::max(2, (int)(total_phase / (2 * M_PI * 12)) + 2);
    cdbl rhs = 0, rhs_lo = 0;
    for (int pm : {+1, -1}) {
        cdbl acc = 0, acc_lo = 0;
        for (int i = 0; i < panels; ++i) {
            double a = -thmax + 2 * thmax * i / panels;
            double b = -thmax + 2 * thmax * (i + 1) / panels;
            acc += integrate_gl_c([&](double th) { return integrand(th, pm); }, a, b, 128);
            acc_lo += integrate_gl_c([&](double th) { return integrand(th, pm); }, a, b, 64);
        }
        // the e^{-+ix} inside W2± cancels against the e^{±ix} of the summation
        // formula, so the assembled transform side carries no outer phase
        cdbl pref = 0.5 * unit_e(pm * 3.0 / 8.0);
        rhs += pref * acc;
        rhs_lo += pref * acc_lo;
    }
    out.rhs = rhs;
    out.rhs_err = std::abs(rhs - rhs_lo);
    return out;
}

} // namespace heegner
