#include "heegner/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace heegner {

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be positive odd");
    a %= n;
    if (a < 0) a += n;
    int s = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

int kronecker(i64 c, i64 d) {
    if (c == 0) throw std::invalid_argument("kronecker: c must be nonzero");
    if (d == 0) return (c == 1 || c == -1) ? 1 : 0;
    int sign = 1;
    if (d < 0) {
        d = -d;
        if (c < 0) sign = -sign; // chi_c(-1) = sign(c)
    }
    // chi_c(2): +1 if c = 1 (8), -1 if c = 5 (8), 0 if c even, undefined if c = 3 (4)
    int v2 = 0;
    while (d % 2 == 0) { d /= 2; ++v2; }
    if (v2 > 0) {
        i64 cm8 = ((c % 8) + 8) % 8;
        if (cm8 % 2 == 0) return 0;
        if (cm8 % 4 == 3) throw std::domain_error("kronecker: chi_c(2) undefined for c = 3 (mod 4)");
        int chi2 = (cm8 == 1) ? 1 : -1;
        if (chi2 == -1 && (v2 % 2 == 1)) sign = -sign;
    }
    // remaining d odd positive: ordinary Jacobi symbol (c/d)
    return sign * jacobi(c, d);
}

bool is_discriminant(i64 D) {
    if (D == 0) return false;
    i64 r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 0) return false;
    if (D == 1) return true;
    auto squarefree = [](i64 n) {
        if (n < 0) n = -n;
        for (i64 p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    i64 m = D / 4;
    i64 rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

std::pair<i64, i64> factor_discriminant(i64 D) {
    if (D >= 0 || !is_discriminant(D))
        throw std::invalid_argument("factor_discriminant: need D < 0 with D = 0,1 (mod 4)");
    auto fac = factorize(-D);
    i64 fmax = 1;
    for (auto [p, e] : fac)
        for (int i = 0; i < e / 2; ++i) fmax *= p;
    auto fs = divisors(fmax);
    std::sort(fs.begin(), fs.end(), std::greater<i64>());
    for (i64 f : fs) {
        i64 q = D / (f * f);
        if (is_fundamental_discriminant(q)) return {q, f};
    }
    throw std::logic_error("factor_discriminant: no decomposition found");
}

cdbl eps_d(i64 d) {
    i64 r = ((d % 4) + 4) % 4;
    if (r == 1) return {1.0, 0.0};
    if (r == 3) return {0.0, 1.0};
    throw std::invalid_argument("eps_d: d must be odd");
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n >= 1 required");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<i64> divisors(i64 n) {
    auto fac = factorize(n);
    std::vector<i64> ds{1};
    for (auto [p, e] : fac) {
        size_t m = ds.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

int moebius(i64 n) {
    auto fac = factorize(n);
    for (auto [p, e] : fac)
        if (e > 1) return 0;
    return (fac.size() % 2 == 0) ? 1 : -1;
}

i64 rad(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

i64 gcd_inf(i64 a, i64 b) {
    // (a, b^infty) = a / a1, a1 the largest divisor of a coprime to b
    i64 x = a;
    for (;;) {
        i64 g = std::gcd(x, b);
        if (g == 1) break;
        x /= g;
    }
    return a / x;
}

i64 sigma_int(i64 n, int k) {
    i64 s = 0;
    for (i64 d : divisors(n)) {
        i64 t = 1;
        for (int i = 0; i < k; ++i) t *= d;
        s += t;
    }
    return s;
}

cdbl sigma_s(i64 n, cdbl s) {
    cdbl acc = 0.0;
    for (i64 d : divisors(n)) acc += std::exp(s * std::log(static_cast<double>(d)));
    return acc;
}

i64 mod_inverse(i64 a, i64 m) {
    i64 t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return t < 0 ? t + m : t;
}

std::vector<i64> primes_below(i64 n) {
    std::vector<bool> comp(std::max<i64>(n, 2), false);
    std::vector<i64> ps;
    for (i64 i = 2; i < n; ++i) {
        if (!comp[i]) {
            ps.push_back(i);
            for (i64 j = i * i; j < n; j += i) comp[j] = true;
        }
    }
    return ps;
}

std::vector<int> moebius_table(i64 n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<i64> spf(n + 1, 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (i64 j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    mu[0] = 0;
    for (i64 i = 2; i <= n; ++i) {
        i64 p = spf[i], m = i / p;
        mu[i] = (m % p == 0) ? 0 : -mu[m];
    }
    return mu;
}

cdbl unit_e(double x) {
    double y = x - std::floor(x);
    return {std::cos(2.0 * M_PI * y), std::sin(2.0 * M_PI * y)};
}

void parallel_for(i64 n, int threads, const std::function<void(i64, i64)>& chunk_fn) {
    if (threads <= 1 || n < 2) {
        chunk_fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    i64 step = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        i64 lo = t * step, hi = std::min<i64>(n, lo + step);
        if (lo >= hi) break;
        pool.emplace_back(chunk_fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

} // namespace heegner
