#include "heegner/quadrature.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>

namespace heegner {

static GLRule build_rule(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration on P_n from the Chebyshev initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const GLRule& gl_rule(int n) {
    static std::map<int, GLRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    const GLRule& r = gl_rule(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a), s = 0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

std::complex<double> integrate_gl_c(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, int n) {
    const GLRule& r = gl_rule(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> s = 0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

template <typename T, typename F>
static void adapt(const F& f, double a, double b, double tol, int depth, T& acc, double& errAcc) {
    T c1 = 0, c2 = 0;
    const GLRule& lo = gl_rule(16);
    const GLRule& hi = gl_rule(32);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < 16; ++i) c1 += lo.w[i] * f(mid + half * lo.x[i]);
    for (int i = 0; i < 32; ++i) c2 += hi.w[i] * f(mid + half * hi.x[i]);
    c1 *= half;
    c2 *= half;
    double e = std::abs(c2 - c1);
    if (e < tol || depth <= 0) {
        acc += c2;
        errAcc += e;
        return;
    }
    adapt(f, a, mid, tol / 2, depth - 1, acc, errAcc);
    adapt(f, mid, b, tol / 2, depth - 1, acc, errAcc);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol, int max_depth) {
    QuadResult out;
    adapt<double>(f, a, b, tol, max_depth, out.value, out.err);
    return out;
}

QuadResultC integrate_adaptive_c(const std::function<std::complex<double>(double)>& f,
                                 double a, double b, double tol, int max_depth) {
    QuadResultC out;
    adapt<std::complex<double>>(f, a, b, tol, max_depth, out.value, out.err);
    return out;
}

} // namespace heegner
