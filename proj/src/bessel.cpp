#include "heegner/bessel.hpp"

#include "heegner/gammafn.hpp"
#include "heegner/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace heegner {

using cld = std::complex<long double>;
static const long double PI_L = 3.14159265358979323846264338328L;

// ---------------------------------------------------------------------------
// power series for S = J_{it}(x) = sum (-1)^m (x/2)^{2m} r_m,
// r_m = (x/2)^{it} / (m! Gamma(m+1+it)); long double to absorb the e^x-type
// cancellation up to x ~ 20 + (pi/2) t.
// ---------------------------------------------------------------------------
static cld j_it_series(long double x, long double t, long double& maxterm, cld* deriv = nullptr) {
    long double L = logl(x / 2.0L);
    // r_0 = exp(i(t log(x/2) - arg Gamma(1+it))) / |Gamma(1+it)|
    double argG = log_gamma(cdbl(1.0, (double)t)).imag();
    long double phase = t * L - (long double)argG;
    cld r = cld(cosl(phase), sinl(phase)) / abs_gamma_one_plus_it(t);
    long double x2 = (x / 2.0L) * (x / 2.0L);
    cld sum = r;
    cld dsum = r * cld(0.0L, t) / x; // d/dx of (x/2)^{2m+it} term at m = 0
    cld term = r;
    maxterm = std::abs(r);
    for (int m = 1; m < 400; ++m) {
        term *= -x2 / (cld((long double)m, 0.0L) * cld((long double)m, t));
        sum += term;
        dsum += term * cld(2.0L * m, t) / x;
        maxterm = std::max(maxterm, std::abs(term));
        if (std::abs(term) < 1e-24L * (std::abs(sum) + 1e-30L) && m > x / 2) break;
    }
    if (deriv) *deriv = dsum;
    return sum;
}

// classical J0/Y0 series for the t -> 0 limit
static void j0y0_series(double x, double& j0, double& y0) {
    long double x2 = (long double)x * x / 4.0L;
    long double term = 1.0L, j = 1.0L, g = 0.0L, H = 0.0L;
    for (int m = 1; m < 200; ++m) {
        term *= -x2 / ((long double)m * m);
        H += 1.0L / m;
        j += term;
        g += term * H;
        if (fabsl(term) < 1e-25L && m > x / 2) break;
    }
    j0 = (double)j;
    const long double euler = 0.57721566490153286060651209008L;
    y0 = (double)((2.0L / PI_L) * ((logl((long double)x / 2.0L) + euler) * j - g));
}

// Hankel asymptotic: Z = sqrt(2/(pi x)) e^{i(x - pi/4)} sum_k i^k c_k,
// c_k = c_{k-1} * (-(t^2 + (k-1/2)^2)) / (2 x k). Returns false if it cannot
// reach the requested tolerance.
static bool z_asymptotic(double x, double t, cdbl& out, double& err, double tol) {
    long double c = 1.0L, sum_re = 0.0L, sum_im = 0.0L;
    long double best = 1e30L;
    int kbest = 0;
    long double cs[60];
    cs[0] = 1.0L;
    int K = 0;
    for (int k = 1; k < 60; ++k) {
        long double km = k - 0.5L;
        c *= -((long double)t * t + km * km) / (2.0L * (long double)x * k);
        cs[k] = c;
        K = k;
        if (fabsl(c) > fabsl(cs[k - 1])) { K = k - 1; break; }
        if (fabsl(c) < 1e-19L) break;
    }
    if (fabsl(cs[K]) > tol) return false;
    for (int k = 0; k <= K; ++k) {
        switch (k & 3) { // i^k
            case 0: sum_re += cs[k]; break;
            case 1: sum_im += cs[k]; break;
            case 2: sum_re -= cs[k]; break;
            case 3: sum_im -= cs[k]; break;
        }
    }
    double pref = std::sqrt(2.0 / (M_PI * x));
    cdbl phase = unit_e((x - M_PI / 4) / (2 * M_PI));
    out = pref * phase * cdbl((double)sum_re, (double)sum_im);
    err = pref * (double)fabsl(cs[K]) * 2.0;
    return true;
}

static ZVal z_series(double x, double t, cdbl* deriv = nullptr) {
    if (t < 1e-6) {
        double j0, y0;
        j0y0_series(x, j0, y0);
        double err = 1e-18 * std::max(1.0, std::exp(std::min(700.0, x)));
        if (deriv) throw std::logic_error("z_series derivative unsupported at t ~ 0");
        return {cdbl(j0, y0), err + t * t};
    }
    long double maxterm = 0;
    cld dS;
    cld S = j_it_series(x, t, maxterm, deriv ? &dS : nullptr);
    // Z = Re S / cosh + i Im S / sinh at parameter pi t / 2; the achieved error is
    // the long-double ulp noise of the largest term, scaled the same way
    long double ch = coshl(PI_L * (long double)t / 2.0L);
    long double sh = sinhl(PI_L * (long double)t / 2.0L);
    double err = (double)(2e-19L * maxterm / std::min(ch, sh)) + 1e-17;
    if (deriv) *deriv = cdbl((double)(dS.real() / ch), (double)(dS.imag() / sh));
    return {cdbl((double)(S.real() / ch), (double)(S.imag() / sh)), err};
}

// RK4 integration of the Bessel equation x^2 Z'' + x Z' + (x^2 + t^2) Z = 0 from the
// series boundary into the gap region. Both fundamental solutions oscillate with
// constant-modulus envelope, so the march is neutrally stable.
static ZVal z_ode_extend(double x_target, double t) {
    // pick a start abscissa where the series error is comfortably small
    double x0 = 20.0 + (M_PI / 2) * t - 1.0;
    cdbl d0;
    ZVal z0 = z_series(x0, t, &d0);
    while (z0.err > 5e-12 && x0 > 6.0) {
        x0 -= 2.0;
        z0 = z_series(x0, t, &d0);
    }
    cld dz = (cld)d0;
    cld z = (cld)z0.z;
    long double x = x0;
    double len = x_target - x0;
    long double h = 0.008L;
    auto rhs = [&](long double xx, cld zz, cld dd, cld& k1, cld& k2) {
        k1 = dd;
        k2 = -(dd / xx) - (1.0L + (long double)(t * t) / (xx * xx)) * zz;
    };
    long long nsteps = (long long)(len / (double)h) + 1;
    h = (long double)len / nsteps;
    for (long long i = 0; i < nsteps; ++i) {
        cld a1, a2, b1, b2, c1, c2, d1, d2;
        rhs(x, z, dz, a1, a2);
        rhs(x + h / 2, z + h / 2 * a1, dz + h / 2 * a2, b1, b2);
        rhs(x + h / 2, z + h / 2 * b1, dz + h / 2 * b2, c1, c2);
        rhs(x + h, z + h * c1, dz + h * c2, d1, d2);
        z += h / 6 * (a1 + 2.0L * b1 + 2.0L * c1 + d1);
        dz += h / 6 * (a2 + 2.0L * b2 + 2.0L * c2 + d2);
        x += h;
    }
    double err = z0.err + 3e-13 * len + 1e-11;
    return {cdbl((double)z.real(), (double)z.imag()), err};
}

ZVal z_hankel(double x, double t) {
    if (x <= 0) throw std::domain_error("z_hankel: x > 0 required");
    t = std::abs(t);
    if (t > 120) throw std::domain_error("z_hankel: |t| <= 120 envelope");
    if (x <= 20.0 + (M_PI / 2) * t) {
        ZVal zs = z_series(x, t);
        if (zs.err <= 3e-9) return zs;
    }
    cdbl za;
    double err;
    if (z_asymptotic(x, t, za, err, 1e-10)) return {za, err};
    return z_ode_extend(x, t);
}

double bplus(double x, double t) { return z_hankel(x, t).z.real(); }
double bminus(double x, double t) { return z_hankel(x, t).z.imag(); }

cdbl f_kernel(double x, double t, double kappa) {
    ZVal Z = z_hankel(x, t);
    double c = std::cos(M_PI * kappa / 2), s = std::sin(M_PI * kappa / 2);
    return cdbl(0, 1) * std::sinh(M_PI * t) * (c * Z.z.imag() + s * Z.z.real());
}

double f_kernel_over_i_sinh(double x, double t, double kappa) {
    ZVal Z = z_hankel(x, std::abs(t));
    double c = std::cos(M_PI * kappa / 2), s = std::sin(M_PI * kappa / 2);
    return c * Z.z.imag() + s * Z.z.real();
}

cdbl bessel_j(cdbl nu, double x) {
    if (x <= 0) throw std::domain_error("bessel_j: x > 0 required");
    if (nu.real() == 0.0) {
        double t = nu.imag();
        ZVal Z = z_hankel(x, std::abs(t));
        double ch = std::cosh(M_PI * t / 2), sh = std::sinh(M_PI * t / 2);
        // J_{it} = bplus cosh(pi t/2) + i bminus sinh(pi t/2)
        return cdbl(Z.z.real() * ch, Z.z.imag() * sh);
    }
    double anu = std::abs(nu);
    if (x <= 22.0) {
        // plain series with 1/Gamma via log_gamma; fine in double for x <= 22 and
        // order with nonzero real part kept moderate
        cdbl sum = 0, term;
        cdbl lg = log_gamma(nu + 1.0);
        term = std::exp(nu * std::log(x / 2.0) - lg);
        sum = term;
        double x2 = x * x / 4;
        for (int m = 1; m < 300; ++m) {
            term *= -x2 / (cdbl(m, 0) * (nu + cdbl(m, 0)));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum) && m > x / 2) break;
        }
        return sum;
    }
    // Hankel asymptotics for large x
    cdbl c = 1, s1 = 0, s2 = 0;
    double prev = 1e300;
    int K = 0;
    std::vector<cdbl> cs{1.0};
    for (int k = 1; k < 60; ++k) {
        double km = k - 0.5;
        c *= (nu * nu - km * km) / (2.0 * x * k);
        if (std::abs(c) > prev) break;
        prev = std::abs(c);
        cs.push_back(c);
        K = k;
        if (prev < 1e-19) break;
    }
    if (std::abs(cs[K]) > 1e-9 * std::max(1.0, std::abs(cs[0])))
        throw std::domain_error("bessel_j: outside supported accuracy envelope");
    for (int k = 0; k <= K; ++k) {
        cdbl ik = (k % 4 == 0) ? cdbl(1, 0) : (k % 4 == 1) ? cdbl(0, 1) : (k % 4 == 2) ? cdbl(-1, 0) : cdbl(0, -1);
        s1 += ik * cs[k];
        s2 += std::conj(ik) * cs[k];
    }
    cdbl om = cdbl(x, 0) - nu * (M_PI / 2) - M_PI / 4;
    cdbl h1 = std::sqrt(2.0 / (M_PI * x)) * std::exp(cdbl(0, 1) * om) * s1;
    cdbl h2 = std::sqrt(2.0 / (M_PI * x)) * std::exp(cdbl(0, -1) * om) * s2;
    return 0.5 * (h1 + h2);
}

KVal bessel_k_imag(double t, double x) {
    if (x <= 1e-3) throw std::domain_error("bessel_k_imag: x > 1e-3 envelope");
    t = std::abs(t);
    if (t > 60) throw std::domain_error("bessel_k_imag: |t| <= 60 envelope");
    double umax = std::acosh(745.0 / std::min(x, 700.0));
    if (x >= 700.0) return {0.0, 1e-300};
    auto f = [&](double u) { return std::exp(-x * std::cosh(u)) * std::cos(t * u); };
    int n = 128 + 16 * (int)(t * umax);
    n = std::min(n, 4096);
    double a = integrate_gl(f, 0, umax, std::min(n, 512));
    double b;
    if (n <= 512) {
        b = integrate_gl(f, 0, umax, std::min(2 * n, 1024));
    } else {
        // split panels for many oscillations
        int panels = (n + 511) / 512;
        b = 0;
        for (int i = 0; i < panels; ++i)
            b += integrate_gl(f, umax * i / panels, umax * (i + 1) / panels, 512);
        a = 0;
        for (int i = 0; i < panels; ++i)
            a += integrate_gl(f, umax * i / panels, umax * (i + 1) / panels, 256);
    }
    return {b, std::abs(b - a) + 1e-15};
}

double k_tilde(double y, double tau) {
    if (y <= 1e-3) throw std::domain_error("k_tilde: y > 1e-3 envelope");
    tau = std::abs(tau);
    if (tau > 120) throw std::domain_error("k_tilde: tau <= 120 envelope");
    // piece 1: [0, v0] on the real axis
    double c0 = (2.0 * tau + 20.0) / y;
    double v0 = (c0 > std::cosh(0.5)) ? std::acosh(c0) : 0.5;
    auto ph1 = [&](double v) {
        double p = tau * v - y * std::sinh(v);
        return cdbl(std::cos(p), std::sin(p));
    };
    double oscs = (tau * v0 + y * std::sinh(v0)) / (2 * M_PI) + 2;
    int panels = std::max(1, (int)(oscs / 16));
    cdbl I1 = 0, I1b = 0;
    for (int i = 0; i < panels; ++i) {
        double a = v0 * i / panels, b = v0 * (i + 1) / panels;
        I1 += integrate_gl_c(ph1, a, b, 256);
        I1b += integrate_gl_c(ph1, a, b, 384);
    }
    // piece 2: vertical leg v = v0 - i w, w in [0, pi/2]
    double ych = y * std::cosh(v0), ysh = y * std::sinh(v0);
    auto ph2 = [&](double w) {
        double mag = tau * w - ych * std::sin(w);
        double ph = tau * v0 - ysh * std::cos(w);
        return cdbl(0, -1) * std::exp(mag) * cdbl(std::cos(ph), std::sin(ph));
    };
    cdbl I2 = integrate_gl_c(ph2, 0, M_PI / 2, 256);
    // piece 3: horizontal leg at Im = -pi/2: e^{tau pi/2} int e^{i tau u} e^{-y cosh u} du
    double u_hi = std::acosh(std::min(745.0, (745.0 + tau * M_PI / 2) / y) + 1.0) + 1.0;
    u_hi = std::max(u_hi, v0 + 1.0);
    auto ph3 = [&](double u) {
        double mag = tau * M_PI / 2 - y * std::cosh(u);
        if (mag < -740) return cdbl(0, 0);
        return std::exp(mag) * cdbl(std::cos(tau * u), std::sin(tau * u));
    };
    cdbl I3 = integrate_gl_c(ph3, v0, u_hi, 512);
    return (I1b + I2 + I3).real() + 0.0 * std::abs(I1 - I1b);
}

std::vector<double> bessel_j_half_ladder(int nmax, double x) {
    // Miller downward recurrence on spherical Bessel j_n; the start order must sit
    // well inside the decaying regime n > x.
    if (x <= 0) throw std::domain_error("bessel_j_half_ladder: x > 0");
    int start = std::max((double)nmax, x) + 24 + (int)(2.5 * std::cbrt(x));
    std::vector<long double> j(start + 2, 0.0L);
    j[start + 1] = 0.0L;
    j[start] = 1e-280L;
    for (int n = start; n >= 1; --n) {
        j[n - 1] = (2.0L * n + 1.0L) / (long double)x * j[n] - j[n + 1];
        if (fabsl(j[n - 1]) > 1e260L) {
            for (int m = n - 1; m <= start + 1; ++m) j[m] *= 1e-260L;
        }
    }
    // normalize against whichever of j_0, j_1 is better conditioned
    long double j0 = sinl((long double)x) / (long double)x;
    long double j1 = sinl((long double)x) / ((long double)x * x) - cosl((long double)x) / (long double)x;
    long double scale = (fabsl(j0) > fabsl(j1) || nmax < 1) ? j0 / j[0] : j1 / j[1];
    std::vector<double> out(nmax + 1);
    double pref = std::sqrt(2.0 * x / M_PI);
    for (int n = 0; n <= nmax; ++n) out[n] = (double)(j[n] * scale) * pref;
    return out; // out[n] = J_{n+1/2}(x)
}

} // namespace heegner
