#include "heegner/weights.hpp"

#include "heegner/gammafn.hpp"
#include "heegner/quadrature.hpp"

#include <cmath>

namespace heegner {

static cdbl g_factor(cdbl s, cdbl t, int frak_a) {
    double a = frak_a;
    cdbl num = log_gamma(0.5 * (0.5 + a + s + cdbl(0, 1) * t)) +
               log_gamma(0.5 * (0.5 + a + s - cdbl(0, 1) * t));
    cdbl den = log_gamma(0.5 * (0.5 + a + cdbl(0, 1) * t)) +
               log_gamma(0.5 * (0.5 + a - cdbl(0, 1) * t));
    return std::exp(num - den - s * std::log(M_PI));
}

// contour cutoff: e^{s^2} on Re s = c decays like e^{c^2 - y^2}
static constexpr double YMAX = 12.0;

cdbl weight_w_complex(cdbl t, double x, int frak_a) {
    double shift = 2.0;
    cdbl res = 0.0;
    if (x < 1.0) {
        res = 1.0;                         // residue of the integrand at s = 0
        shift = (frak_a == 1) ? -0.9 : -0.4; // stay right of the gamma poles
    }
    auto f = [&](double y) {
        cdbl s(shift, y);
        return g_factor(s, t, frak_a) * std::exp(s * s) * std::pow(x, -s.real()) *
               unit_e(-y * std::log(x) / (2 * M_PI)) / s;
    };
    // node count scales with the x^{-iy} oscillation frequency |log x|; a floor of
    // several panels resolves the gamma-factor peak near y = 0 on the left contour
    int panels = 8 + (int)(std::abs(std::log(x)) * YMAX / (2 * M_PI) / 4);
    cdbl I = 0;
    for (int i = 0; i < 2 * panels; ++i) {
        double a = -YMAX + YMAX * i / panels;
        double b = a + YMAX / panels;
        I += integrate_gl_c(f, a, b, 96);
    }
    return res + I / (2 * M_PI); // ds = i dy, 1/(2 pi i) * i = 1/(2 pi)
}

WeightVal weight_w(double t, double x, int frak_a) {
    cdbl v = weight_w_complex(cdbl(t, 0), x, frak_a);
    return {v.real(), std::abs(v.imag()) + 1e-14};
}

WtTable::WtTable(std::vector<double> ts, int frak_a) : ts_(std::move(ts)), frak_a_(frak_a) {
    s_neg_ = (frak_a == 1) ? -0.9 : -0.4;
    // node density chosen for |log x| <= 16 (x down to ~1e-7 and up to ~1e7)
    const int P = 12, N = 96;
    const GLRule& r = gl_rule(N);
    ynodes_.reserve(2 * P * N);
    yweights_.reserve(2 * P * N);
    for (int p = 0; p < 2 * P; ++p) {
        double a = -YMAX + (YMAX / P) * p, half = YMAX / (2.0 * P);
        for (int i = 0; i < N; ++i) {
            ynodes_.push_back(a + half + half * r.x[i]);
            yweights_.push_back(r.w[i] * half);
        }
    }
    gam_pos_.assign(ts_.size(), {});
    gam_neg_.assign(ts_.size(), {});
    for (size_t j = 0; j < ts_.size(); ++j) {
        gam_pos_[j].resize(ynodes_.size());
        gam_neg_[j].resize(ynodes_.size());
        for (size_t i = 0; i < ynodes_.size(); ++i) {
            cdbl sp(2.0, ynodes_[i]), sn(s_neg_, ynodes_[i]);
            gam_pos_[j][i] = g_factor(sp, ts_[j], frak_a_) * std::exp(sp * sp) / sp * yweights_[i];
            gam_neg_[j][i] = g_factor(sn, ts_[j], frak_a_) * std::exp(sn * sn) / sn * yweights_[i];
        }
    }
}

std::vector<double> WtTable::eval(double x) const {
    std::vector<double> out(ts_.size());
    bool small = (x < 1.0);
    double shift = small ? s_neg_ : 2.0;
    const auto& gam = small ? gam_neg_ : gam_pos_;
    double lx = std::log(x);
    double xs = std::pow(x, -shift);
    size_t n = ynodes_.size();
    std::vector<cdbl> ph(n);
    for (size_t i = 0; i < n; ++i) ph[i] = xs * unit_e(-ynodes_[i] * lx / (2 * M_PI));
    for (size_t j = 0; j < ts_.size(); ++j) {
        cdbl acc = 0;
        for (size_t i = 0; i < n; ++i) acc += gam[j][i] * ph[i];
        out[j] = (small ? 1.0 : 0.0) + acc.real() / (2 * M_PI);
    }
    return out;
}

cdbl curly_g(double k, double tau, cdbl s) {
    cdbl it2(0, tau / 2);
    cdbl lg = log_gamma((k - 1) / 2 + s - 0.25 + it2) + log_gamma((k - 1) / 2 + s - 0.25 - it2);
    cdbl logden = 0.5 * (log_gamma(cdbl(k, 0)) + log_gamma(cdbl(k - 1.5, 0)));
    return std::exp(lg - logden - 2.0 * s * std::log(M_PI) + k * std::log(2.0));
}

WeightVal weight_v(double t, double x, double k, double tau) {
    // For x below the k^4 conductor scale the Re v = 3 line is catastrophically
    // oscillatory-cancellative; extract the v = 0 residue and shift to Re v = -1/8.
    double k4 = k * k * k * k;
    double shift = (x < k4) ? -0.125 : 3.0;
    cdbl res = (x < k4) ? curly_g(k, tau, cdbl(0.5, t)) * curly_g(k, tau, cdbl(0.5, -t)) : 0.0;
    auto f = [&](double y) {
        cdbl v(shift, y);
        return curly_g(k, tau, v + cdbl(0.5, t)) * curly_g(k, tau, v + cdbl(0.5, -t)) *
               std::exp(v * v) * std::pow(x, -shift) * unit_e(-y * std::log(x) / (2 * M_PI)) / v;
    };
    int panels = 1 + (int)(std::abs(std::log(x)) * YMAX / (2 * M_PI) / 6);
    cdbl I = 0;
    for (int i = 0; i < 2 * panels; ++i) {
        double a = -YMAX + YMAX * i / panels;
        I += integrate_gl_c(f, a, a + YMAX / panels, 128);
    }
    cdbl val = res + I / (2 * M_PI);
    return {val.real(), std::abs(val.imag()) + 1e-16};
}

cdbl gamma_ratio_exact(double k, cdbl s) {
    return std::exp(log_gamma(k + s) - log_gamma(cdbl(k, 0)));
}

cdbl gamma_ratio_asymptotic(double k, cdbl s) {
    double t = s.imag();
    return std::exp(s * std::log(k) - t * t / (2 * k));
}

} // namespace heegner
