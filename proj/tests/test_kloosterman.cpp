#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heegner/kloosterman.hpp"

#include <cmath>
#include <random>

using namespace heegner;

TEST_CASE("classical Kloosterman sums") {
    CHECK(kloosterman_s(3, 7, 1) == 1.0);
    // S(1,1,5) = 2 + 2 cos(4 pi / 5)
    CHECK(kloosterman_s(1, 1, 5) ==
          doctest::Approx(2 + 2 * std::cos(4 * M_PI / 5)).epsilon(1e-12));
    CHECK(kloosterman_s(1, 1, 5) == doctest::Approx(0.3819660112501051518).epsilon(1e-12));
    // symmetry S(m,n,c) = S(n,m,c)
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> md(-30, 30), cd(1, 500);
    for (int i = 0; i < 200; ++i) {
        i64 m = md(rng), n = md(rng), c = cd(rng);
        CHECK(kloosterman_s(m, n, c) == doctest::Approx(kloosterman_s(n, m, c)).epsilon(1e-9));
    }
    // twist invariance: S(m, n, c) = S(ma, n abar, c) for (a, c) = 1
    for (int i = 0; i < 100; ++i) {
        i64 c = cd(rng), m = std::abs(md(rng)) + 1, n = std::abs(md(rng)) + 1;
        i64 a = 1 + (i64)(rng() % (unsigned)c);
        if (std::gcd(a, c) != 1) continue;
        i64 ab = mod_inverse(a, c);
        CHECK(kloosterman_s(m, n, c) ==
              doctest::Approx(kloosterman_s(m * a % c, n * ab % c, c)).epsilon(1e-9));
    }
}

TEST_CASE("half-integral Kloosterman sums") {
    // c = 4, m = n = 1, kappa = 3/2: two-term sum over d in {1, 3}
    // d=1: eps^3 = 1, (4/1) = 1, e(2/4) = -1 ; d=3: eps^3 = -i, (4/3) = 1, e(6/4) = -1
    cdbl direct = cdbl(-1, 0) + cdbl(0, 1) * cdbl(-1.0, 0) * cdbl(0, +1); // -1 + (-i)(-1)
    cdbl got = kloosterman_k_half(1.5, 1, 1, 4);
    CHECK(std::abs(got - cdbl(-1, 1)) < 1e-13);
    (void)direct;
    // 2-periodicity in kappa
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        i64 c = 4 * (1 + (i64)(rng() % 40));
        i64 m = 1 + (i64)(rng() % 30), n = 1 + (i64)(rng() % 30);
        cdbl a = kloosterman_k_half(0.5, n, m, c);
        cdbl b = kloosterman_k_half(0.5 + 2.0, n, m, c);
        CHECK(std::abs(a - b) < 1e-10);
    }
    // |K_kappa| <= phi(c)
    for (i64 c : {4, 8, 12, 16, 36, 100}) {
        i64 phi = 0;
        for (i64 d = 1; d < c; ++d)
            if (std::gcd(d, c) == 1) ++phi;
        CHECK(std::abs(kloosterman_k_half(1.5, 3, 7, c)) <= (double)phi + 1e-9);
    }
    CHECK_THROWS_AS(kloosterman_k_half(0.5, 1, 1, 6), std::invalid_argument);
}

TEST_CASE("plus-space sums") {
    // odd c and c = 2 (mod 4) vanish
    for (i64 c : {1, 3, 5, 7, 9, 2, 6, 10})
        CHECK(std::abs(kloosterman_k_plus(1.5, 2, 5, c)) == 0.0);
    // 8 | c: weight 1
    CHECK(std::abs(kloosterman_k_plus(1.5, 1, 3, 8) - kloosterman_k_half(1.5, 1, 3, 8)) < 1e-13);
    // 4 || c: weight 2
    CHECK(std::abs(kloosterman_k_plus(1.5, 1, 3, 12) - 2.0 * kloosterman_k_half(1.5, 1, 3, 12)) < 1e-13);
    // symmetry in m and n
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        i64 c = 4 * (1 + (i64)(rng() % 60));
        i64 m = 1 + (i64)(rng() % 40), n = 1 + (i64)(rng() % 40);
        cdbl a = kloosterman_k_plus(1.5, m, n, c);
        cdbl b = kloosterman_k_plus(1.5, n, m, c);
        INFO("c=", c, " m=", m, " n=", n);
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("Weil-type ratio stays bounded on a sampled range") {
    // quick bounded-range scan (the full c <= 1e4 scan runs in the acceptance suite)
    double r = weil_ratio_scan(1.5, 20, 20, 1200, 0.05, 4);
    CHECK(r < 10.0);
    CHECK(r > 0.5); // sanity: the sums are not trivially small
}
