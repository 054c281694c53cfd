#pragma once
// Gauss-Legendre quadrature with cached node tables and panel-adaptive driver.

#include <complex>
#include <functional>
#include <vector>

namespace heegner {

struct GLRule {
    std::vector<double> x; // nodes on (-1, 1)
    std::vector<double> w;
};

// Cached rule of order n (node tables are built once and shared).
const GLRule& gl_rule(int n);

struct QuadResult {
    double value = 0;
    double err = 0;
};
struct QuadResultC {
    std::complex<double> value{0, 0};
    double err = 0;
};

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);
std::complex<double> integrate_gl_c(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, int n);

// Panel-bisecting adaptive integration; err is the achieved estimate.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol, int max_depth = 14);
QuadResultC integrate_adaptive_c(const std::function<std::complex<double>(double)>& f,
                                 double a, double b, double tol, int max_depth = 14);

} // namespace heegner
