#include "heegner/hurwitz_voronoi.hpp"

#include "heegner/quadrature.hpp"
#include "heegner/transforms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace heegner {

SharpSum sharp_sum(const HurwitzTable& table, double X, int delta_class) {
    if (X < 10) throw std::invalid_argument("sharp_sum: X >= 10");
    if (X > (double)table.xmax()) throw std::out_of_range("sharp_sum: table too small");
    i64 acc6 = 0;
    for (i64 n = 3; n <= (i64)X; ++n) {
        int r = (int)(n % 4);
        if (r != 0 && r != 3) continue;
        bool take = (delta_class == -1) || (delta_class == 0 && r == 0) || (delta_class == 1 && r == 3);
        if (take) acc6 += table.sixH(-n);
    }
    double main = (delta_class == -1) ? M_PI / 18.0 * std::pow(X, 1.5) - X / 4.0
                                      : M_PI / 36.0 * std::pow(X, 1.5) - X / 8.0;
    return {acc6 / 6.0, acc6, main};
}

// int_0^infty Jplus(t beta) phi(t) dt via the u = 2 sqrt(beta t) substitution:
// (1/sqrt(pi)) int g(u) sin(u) du with g(u) = sqrt(2u) phi(u^2/(4 beta)) / (2 beta).
static double osc_sin_integral(const SmoothBump& phi, double beta) {
    double ulo = 2.0 * std::sqrt(beta * phi.lo), uhi = 2.0 * std::sqrt(beta * phi.hi);
    auto g = [&](double u) {
        return std::sqrt(2.0 * u) * phi(u * u / (4.0 * beta)) / (2.0 * beta) * std::sin(u);
    };
    int panels = 2 + (int)((uhi - ulo) / (2 * M_PI) / 10);
    double acc = 0;
    for (int i = 0; i < panels; ++i) {
        double a = ulo + (uhi - ulo) * i / panels;
        double b = ulo + (uhi - ulo) * (i + 1) / panels;
        acc += integrate_gl(g, a, b, 128);
    }
    return acc / std::sqrt(M_PI);
}

// Two-integrations-by-parts bound |int g(u) sin u du| <= ||g''||_{L1}, with g'' from
// the analytically coded bump derivatives.
static double osc_sin_bound(const SmoothBump& phi, double beta) {
    double ulo = 2.0 * std::sqrt(beta * phi.lo), uhi = 2.0 * std::sqrt(beta * phi.hi);
    double A = std::sqrt(2.0) / (2.0 * beta * std::sqrt(M_PI));
    auto g2 = [&](double u) {
        double t = u * u / (4.0 * beta);
        double dt = u / (2.0 * beta); // dt/du
        double p0 = phi(t), p1 = phi.derivative(t, 1), p2 = phi.derivative(t, 2);
        // g/A = u^{1/2} phi(t(u));  (g/A)'' collected by the chain rule
        double val = -0.25 * std::pow(u, -1.5) * p0 + std::pow(u, 0.5) * p1 / beta +
                     std::pow(u, 0.5) * p2 * dt * dt + 0.75 * std::pow(u, -0.5) * p1 * dt;
        return std::abs(A * val);
    };
    int n = 400;
    double acc = 0;
    for (int i = 0; i < n; ++i) {
        double u = ulo + (uhi - ulo) * (i + 0.5) / n;
        acc += g2(u);
    }
    return acc * (uhi - ulo) / n;
}

VoronoiResult voronoi_both_sides(const HurwitzTable& table, const SmoothBump& phi, i64 a, i64 c,
                                 double tol) {
    if (c < 4 || c % 4 != 0) throw std::invalid_argument("voronoi: 4 | c required");
    a = ((a % c) + c) % c;
    if (std::gcd(a, c) != 1) throw std::invalid_argument("voronoi: (a, c) = 1 required");
    if ((double)table.xmax() < phi.hi) throw std::out_of_range("voronoi: table below supp phi");
    i64 abar = mod_inverse(a, c);
    double beta0 = (2 * M_PI) * (2 * M_PI) / ((double)c * c);

    VoronoiResult out;
    // direct side
    cdbl lhs = 0;
    for (i64 n = (i64)phi.lo; n <= (i64)phi.hi + 1 && n <= table.xmax(); ++n) {
        int r = (int)(n % 4);
        if (r != 0 && r != 3) continue;
        double w = phi((double)n);
        if (w == 0) continue;
        lhs += table.Hd(-n) * std::pow((double)n, -0.25) * unit_e((double)(a * (n % c)) / c) * w;
    }
    out.lhs = lhs;

    // dual Hurwitz sum
    cdbl dualH = 0;
    double tail = 0;
    i64 quiet = 0, Dmax = table.xmax();
    bool truncated = false;
    for (i64 n = 3; n <= Dmax; ++n) {
        int r = (int)(n % 4);
        if (r != 0 && r != 3) continue;
        double beta = beta0 * (double)n;
        double bound = osc_sin_bound(phi, beta);
        double hd = table.Hd(-n);
        if (hd * bound * std::pow((double)n, -0.25) * (2 * M_PI / c) < tol * 1e-4) {
            ++quiet;
            if (quiet > 200) { truncated = true; Dmax = n; break; }
        } else {
            quiet = 0;
        }
        double I = osc_sin_integral(phi, beta);
        dualH += hd * std::pow((double)n, -0.25) * (2 * M_PI / c) *
                 unit_e(-(double)(abar * (n % c)) / c) * I;
    }
    if (!truncated) {
        // table exhausted before the per-term bound went quiet: report the edge bound
        tail += 50.0 * osc_sin_bound(phi, beta0 * (double)Dmax) * std::sqrt((double)Dmax);
    } else {
        // geometric-tail estimate from one more octave of per-term bounds
        double est = 0;
        for (i64 n = Dmax; n <= std::min(4 * Dmax, table.xmax()); ++n) {
            if (n % 4 != 0 && n % 4 != 3) continue;
            est += table.Hd(-n) * std::pow((double)n, -0.25) * (2 * M_PI / c) *
                   osc_sin_bound(phi, beta0 * (double)n);
        }
        tail += 2.0 * est;
    }
    out.terms.dual_H = dualH;

    // square-indexed dual sum with the exponential kernel
    cdbl dualSq = 0;
    for (i64 m = 1;; ++m) {
        i64 n = m * m;
        double beta = beta0 * (double)n;
        if (2.0 * std::sqrt(beta * phi.lo) > 40.0) {
            tail += std::exp(-2.0 * std::sqrt(beta * phi.lo)) * std::pow((double)n, 0.25);
            break;
        }
        auto f = [&](double t) { return jclean_minus(beta * t) * phi(t); };
        double I = integrate_gl(f, phi.lo, phi.hi, 256);
        dualSq += std::pow((double)n, 0.25) * (2 * M_PI / c) * unit_e((double)(abar * (n % c)) / c) *
                  I / (4.0 * std::sqrt(M_PI));
    }
    out.terms.dual_square = dualSq;

    // main terms
    auto fmain = [&](double x) {
        return phi(x) * (std::pow(x, -0.25) / (std::sqrt(8.0) * std::sqrt((double)c)) -
                         std::sqrt(2.0) * M_PI / 3.0 * std::pow(x, 0.25) / std::pow((double)c, 1.5));
    };
    out.terms.main = integrate_gl(fmain, phi.lo, phi.hi, 256);
    out.terms.tail_bound = tail;

    cdbl pref = (double)kronecker(-c, a) * std::conj(eps_d(a)) * unit_e(3.0 / 8.0);
    out.rhs = pref * (dualH + dualSq + out.terms.main);
    return out;
}

LplusResidues lplus_residues(i64 a, i64 c) {
    if (c < 4 || c % 4 != 0) throw std::invalid_argument("lplus_residues: 4 | c required");
    a = ((a % c) + c) % c;
    if (std::gcd(a, c) != 1) throw std::invalid_argument("lplus_residues: (a, c) = 1 required");
    cdbl unit = (double)kronecker(-c, a) * std::conj(eps_d(a)) * unit_e(3.0 / 8.0);
    LplusResidues r;
    r.res_5_4 = -std::sqrt(2.0) * M_PI / (3.0 * std::pow((double)c, 1.5)) * unit;
    r.res_3_4 = 1.0 / (std::sqrt(8.0) * std::sqrt((double)c)) * unit;
    return r;
}

} // namespace heegner
