#include "heegner/lfun.hpp"

#include "heegner/gammafn.hpp"
#include "heegner/weights.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace heegner {

// Bernoulli B_{2k} for the Euler-Maclaurin tail
static const double B2K[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,      -1.0 / 30,
                             5.0 / 66,     -691.0 / 2730, 7.0 / 6,       -3617.0 / 510,
                             43867.0 / 798, -174611.0 / 330, 854513.0 / 138};

template <bool REAL>
static cdbl hurwitz_em(cdbl s, double a, bool drop_pole) {
    // N tuned so that the Bernoulli tail converges for |Im s| <= ~200
    int N = 24 + (int)(1.2 * std::abs(s.imag()));
    cdbl sum = 0;
    if constexpr (REAL) {
        double sr = s.real(), acc = 0;
        for (int n = 0; n < N; ++n) acc += std::pow(n + a, -sr);
        sum = acc;
    } else {
        for (int n = 0; n < N; ++n) sum += std::exp(-s * std::log(n + a));
    }
    double Na = N + a;
    cdbl lNa = std::log(cdbl(Na, 0));
    cdbl Nms = std::exp(-s * lNa); // (N+a)^{-s}
    // (N+a)^{1-s}/(s-1), or the pole-free [(N+a)^{1-s} - 1]/(s-1)
    cdbl tail1;
    cdbl w = (1.0 - s) * lNa;
    if (drop_pole) {
        if (std::abs(w) < 1e-8)
            tail1 = -lNa * (1.0 + w / 2.0);
        else
            tail1 = (std::exp(w) - 1.0) / (s - 1.0);
    } else {
        tail1 = std::exp(w) / (s - 1.0);
    }
    cdbl res = sum + tail1 + 0.5 * Nms;
    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (N+a)^{-s-2k+1}
    cdbl poch = s;
    double fact = 2.0;  // (2k)!
    cdbl pw = Nms / Na; // (N+a)^{-s-1}
    for (int k = 1; k <= 10; ++k) {
        res += B2K[k - 1] / fact * poch * pw * Na; // pw*Na = (N+a)^{-s-2k+1}
        poch *= (s + cdbl(2 * k - 1, 0)) * (s + cdbl(2 * k, 0));
        fact *= (2 * k + 1) * (2 * k + 2);
        pw /= Na * Na;
    }
    return res;
}

cdbl hurwitz_zeta(cdbl s, double a) {
    if (a <= 0 || a > 1) throw std::invalid_argument("hurwitz_zeta: 0 < a <= 1");
    if (s == cdbl(1, 0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    return (s.imag() == 0.0) ? hurwitz_em<true>(s, a, false) : hurwitz_em<false>(s, a, false);
}

cdbl hurwitz_zeta_reg(cdbl s, double a) {
    return (s.imag() == 0.0) ? hurwitz_em<true>(s, a, true) : hurwitz_em<false>(s, a, true);
}

cdbl zeta(cdbl s) {
    if (s == cdbl(1, 0)) throw std::domain_error("zeta: pole at s = 1");
    if (s.real() < 0.0) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        cdbl one_m = 1.0 - s;
        return std::pow(cdbl(2, 0), s) * std::pow(cdbl(M_PI, 0), s - 1.0) *
               std::sin(M_PI * s / 2.0) * std::exp(log_gamma(one_m)) * zeta(one_m);
    }
    return hurwitz_zeta(s, 1.0);
}

const std::vector<int>& character_table(i64 delta) {
    static std::unordered_map<i64, std::vector<int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(delta);
    if (it == cache.end()) {
        i64 q = std::llabs(delta);
        std::vector<int> tab(q);
        for (i64 r = 0; r < q; ++r) {
            if (std::gcd(r, q) != 1) { tab[r] = 0; continue; }
            tab[r] = kronecker(delta, r == 0 ? q : r);
        }
        it = cache.emplace(delta, std::move(tab)).first;
    }
    return it->second;
}

LSeriesPoint dirichlet_L(i64 delta, cdbl s) {
    if (!(delta == 1 || is_fundamental_discriminant(delta)))
        throw std::invalid_argument("dirichlet_L: Delta must be fundamental (or 1)");
    if (delta == 1) {
        cdbl z = zeta(s);
        return {z, 1e-12 * (1.0 + std::abs(z))};
    }
    i64 q = std::llabs(delta);
    const auto& chi = character_table(delta);
    // sum_r chi(r) [zeta(s, r/q) - pole]; the pole cancels since sum_r chi(r) = 0
    cdbl acc = 0;
    for (i64 r = 1; r <= q; ++r) {
        int c = chi[r % q];
        if (c == 0) continue;
        cdbl h = hurwitz_zeta_reg(s, (double)r / q);
        acc += (c > 0) ? h : -h;
    }
    cdbl val = acc * std::exp(-s * std::log((double)q));
    return {val, 1e-11 * (1.0 + std::abs(val))};
}

LSeriesPoint L_D(i64 D, cdbl s, bool alt_route) {
    auto [delta, f] = factor_discriminant(D);
    LSeriesPoint base = dirichlet_L(delta, s);
    const auto& chi = character_table(delta);
    i64 q = std::llabs(delta);
    cdbl corr = 0;
    for (i64 d : divisors(f)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        int c = chi[d % q];
        if (c == 0) continue;
        cdbl term;
        if (!alt_route) {
            term = sigma_s(f / d, 1.0 - 2.0 * s) * std::exp(-s * std::log((double)d));
        } else {
            term = rho_eigenvalue(s, f / d) / std::sqrt((double)d);
        }
        corr += double(mu * c) * term;
    }
    if (alt_route) corr *= std::exp((0.5 - s) * std::log((double)f));
    return {base.value * corr, base.achieved_err * (1.0 + std::abs(corr))};
}

cdbl Lambda_D(i64 D, cdbl s) {
    int a = D < 0 ? 1 : 0;
    cdbl L = L_D(D, s).value;
    return L * std::exp(0.5 * s * std::log((double)std::llabs(D))) *
           std::exp(log_gamma((s + cdbl(a, 0)) / 2.0)) * std::exp(-0.5 * s * std::log(M_PI));
}

cdbl rho_eigenvalue(cdbl s, i64 n) {
    return std::exp((s - 0.5) * std::log((double)n)) * sigma_s(n, 1.0 - 2.0 * s);
}

double rho_half_it(double t, i64 n) {
    // sum_{ab = n} (a/b)^{it} is real by the (a,b) <-> (b,a) pairing
    double acc = 0;
    for (i64 d : divisors(n)) acc += std::cos(t * std::log((double)d / ((double)n / d)));
    return acc;
}

double HeckeEigenvalues::operator()(i64 n) const {
    if (n < 1) throw std::invalid_argument("Hecke eigenvalue index must be >= 1");
    double out = 1.0;
    for (auto [p, e] : factorize(n)) {
        double lp = lp_((i64)p);
        double lm1 = 1.0, l0 = lp;
        for (int k = 2; k <= e; ++k) {
            double l1 = lp * l0 - lm1;
            lm1 = l0;
            l0 = l1;
        }
        out *= l0;
    }
    return out;
}

double eisenstein_polar_term(double t) {
    cdbl acc = 0;
    for (int sgn : {+1, -1}) {
        cdbl it(0, sgn * t);
        cdbl num = zeta(1.0 + 2.0 * it) * std::exp(log_gamma(0.5 + it)) *
                   std::exp(-it * std::log(M_PI)) * std::exp((0.5 + it) * (0.5 + it));
        cdbl den = (0.5 + it) * std::exp(log_gamma(cdbl(0.25, t / 2))) *
                   std::exp(log_gamma(cdbl(0.25, -t / 2)));
        acc += num / den;
    }
    return acc.real();
}

LSeriesPoint approx_L_half(const std::function<double(i64)>& lambda, i64 delta, double t,
                           bool eisenstein) {
    if (!(delta == 1 || is_fundamental_discriminant(delta)))
        throw std::invalid_argument("approx_L_half: Delta must be fundamental (or 1)");
    i64 q = std::llabs(delta);
    int frak_a = (delta < 0) ? 1 : 0;
    i64 N = (i64)((1.0 + std::abs(t)) * (double)q * 25.0) + 8;
    WtTable wt({t}, frak_a);
    double acc = 0;
    for (i64 n = 1; n <= N; ++n) {
        int c = (delta == 1) ? 1 : character_table(delta)[n % q];
        if (c == 0) continue;
        double w = wt.eval((double)n / (double)q)[0];
        acc += lambda(n) * c / std::sqrt((double)n) * w;
    }
    double val = 2.0 * acc;
    if (eisenstein && delta == 1) val -= eisenstein_polar_term(t);
    // W decays superpolynomially past n/|Delta| = 25 (1+|t|)
    double tail = 1e-9 + 4.0 / std::sqrt((double)N) * 1e-10;
    return {cdbl(val, 0), tail};
}

} // namespace heegner
