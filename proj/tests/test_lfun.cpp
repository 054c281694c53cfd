#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heegner/lfun.hpp"
#include "heegner/qforms.hpp"

#include <cmath>
#include <random>

using namespace heegner;

TEST_CASE("zeta reference values") {
    static const double ref[][4] = {
        {2.0, 0.0, 1.644934066848226436, 0.0},
        {4.0, 0.0, 1.082323233711138192, 0.0},
        {0.5, 0.0, -1.460354508809586813, 0.0},
        {0.5, 14.134, 0.00009058656819553876843, -0.0005679405478698981329},
        {1.5, 3.0, 0.719834124834530846, -0.1184490831887596963},
        {-0.5, 2.0, 0.2280949717165263298, -0.1445291717337135964},
        {1.0, 1.0, 0.5821580597520036482, -0.9268485643308070765},
        {3.0, -40.0, 0.9326091439284983606, 0.06375750607117759019},
        {0.5, 90.0, 1.863476335687842191, 2.926103607255752465},
    };
    for (auto& r : ref) {
        cdbl v = zeta(cdbl(r[0], r[1]));
        INFO("s=", r[0], "+", r[1], "i");
        CHECK(std::abs(v - cdbl(r[2], r[3])) < 1e-10 * (1 + std::abs(v)));
    }
    CHECK(zeta(cdbl(2, 0)).real() == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-13));
    CHECK(zeta(cdbl(4, 0)).real() == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-13));
    CHECK_THROWS_AS(zeta(cdbl(1, 0)), std::domain_error);
}

TEST_CASE("hurwitz zeta reference values") {
    static const double ref[][5] = {
        {2.0, 0.0, 0.25, 17.19732915450711074, 0.0},
        {0.5, 3.0, 0.7, 0.2573713597112670722, 0.7152311949366969384},
        {1.5, -20.0, 0.999, 0.8524340972020218971, 0.4164259137179417097},
        {3.0, 50.0, 0.2, 43.60465483902376795, -117.2355316378386301},
    };
    for (auto& r : ref) {
        cdbl v = hurwitz_zeta(cdbl(r[0], r[1]), r[2]);
        CHECK(std::abs(v - cdbl(r[3], r[4])) < 1e-9 * (1 + std::abs(v)));
    }
}

TEST_CASE("dirichlet L reference values") {
    static const double ref[][5] = {
        {-4, 1.0, 0.0, 0.7853981633974483096, 0.0},
        {-3, 1.0, 0.0, 0.6045997880780726169, 0.0},
        {-4, 0.5, 1.0, 0.7700860244736049857, 0.2656590886113714039},
        {-23, 0.5, 0.0, 2.455362513974258622, 0.0},
        {-163, 1.0, 0.0, 0.2460685275529602439, 0.0},
        {5, 0.5, 2.0, 0.70600643750771659, 0.9204192528654505641},
        {-8, 2.0, -3.0, 0.8821986200962827219, 0.03497060660453566062},
    };
    for (auto& r : ref) {
        auto v = dirichlet_L((i64)r[0], cdbl(r[1], r[2]));
        INFO("Delta=", r[0]);
        CHECK(std::abs(v.value - cdbl(r[3], r[4])) < 1e-9 * (1 + std::abs(v.value)));
    }
    CHECK(dirichlet_L(-4, cdbl(1, 0)).value.real() == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(dirichlet_L(-3, cdbl(1, 0)).value.real() ==
          doctest::Approx(M_PI / (3 * std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("central values are non-negative for fundamental discriminants") {
    for (i64 delta = -3; delta >= -200; --delta) {
        if (!is_fundamental_discriminant(delta)) continue;
        CHECK(dirichlet_L(delta, cdbl(0.5, 0)).value.real() > -1e-10);
    }
}

TEST_CASE("class number formula against form counting") {
    int tested = 0;
    for (i64 delta = -5; delta >= -10000; --delta) {
        if (!is_fundamental_discriminant(delta)) continue;
        double h = (double)class_number(delta);
        double cnf = std::sqrt((double)-delta) * dirichlet_L(delta, cdbl(1, 0)).value.real() / M_PI;
        REQUIRE(std::abs(h - cnf) / h < 1e-8);
        ++tested;
    }
    CHECK(tested > 3000);
}

TEST_CASE("L_D: both routes agree and f = 1 reduces to dirichlet_L") {
    CHECK(std::abs(L_D(-7, cdbl(1.3, 0.4)).value - dirichlet_L(-7, cdbl(1.3, 0.4)).value) < 1e-12);
    for (cdbl s : {cdbl(2, 0), cdbl(0.5, 1.0), cdbl(0.3, 0.7), cdbl(1.7, -2.2)}) {
        for (i64 D : {-12, -48, -75, -180, -2700}) {
            auto a = L_D(D, s, false), b = L_D(D, s, true);
            INFO("D=", D);
            CHECK(std::abs(a.value - b.value) < 1e-9 * (1 + std::abs(a.value)));
        }
    }
}

TEST_CASE("functional equation Lambda(D, s) = Lambda(D, 1-s)") {
    CHECK(std::abs(Lambda_D(-12, cdbl(0.3, 0.7)) - Lambda_D(-12, cdbl(0.7, -0.7))) < 1e-8);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<i64> nd(3, 10000);
    std::uniform_real_distribution<double> sr(0.1, 0.9), si(-3.0, 3.0);
    int done = 0;
    while (done < 100) {
        i64 n = nd(rng);
        if (n % 4 != 0 && n % 4 != 3) continue;
        cdbl s(sr(rng), si(rng));
        cdbl a = Lambda_D(-n, s), b = Lambda_D(-n, 1.0 - s);
        INFO("D=", -n, " s=", s.real(), "+", s.imag(), "i");
        REQUIRE(std::abs(a - b) < 1e-8 * (1 + std::abs(a)));
        ++done;
    }
}

TEST_CASE("rho eigenvalues") {
    CHECK(std::abs(rho_eigenvalue(cdbl(0.77, 1.3), 1) - 1.0) < 1e-15);
    for (i64 n : {2, 6, 12, 35}) {
        for (cdbl s : {cdbl(0.3, 0.2), cdbl(0.9, -1.1), cdbl(0.5, 2.0)}) {
            CHECK(std::abs(rho_eigenvalue(s, n) - rho_eigenvalue(1.0 - s, n)) < 1e-12);
        }
    }
    for (i64 n : {2, 9, 30})
        CHECK(rho_half_it(1.4, n) ==
              doctest::Approx(rho_eigenvalue(cdbl(0.5, 1.4), n).real()).epsilon(1e-12));
    double t = 0.9;
    CHECK(rho_half_it(t, 6) == doctest::Approx(rho_half_it(t, 2) * rho_half_it(t, 3)).epsilon(1e-12));
    CHECK(rho_half_it(t, 4) ==
          doctest::Approx(rho_half_it(t, 2) * rho_half_it(t, 2) - 1.0).epsilon(1e-12));
}

TEST_CASE("hecke_extend reproduces multiplicative extension") {
    double t = 1.23;
    HeckeEigenvalues lam([&](i64 p) { return rho_half_it(t, p); });
    for (i64 n = 1; n <= 60; ++n)
        CHECK(lam(n) == doctest::Approx(rho_half_it(t, n)).epsilon(1e-10));
}

TEST_CASE("key factorization for Eisenstein eigenvalues") {
    for (i64 delta : {-3, -4, -8, -20}) {
        for (i64 f = 1; f <= 8; ++f) {
            for (double t : {0.5, 1.0, 2.0}) {
                cdbl s(0.5, t);
                cdbl lhs = L_D(delta * f * f, s).value;
                const auto& chi = character_table(delta);
                i64 q = std::llabs(delta);
                cdbl fac = 0;
                for (i64 d : divisors(f)) {
                    int mu = moebius(d);
                    int c = chi[d % q];
                    if (mu == 0 || c == 0) continue;
                    fac += double(mu * c) * rho_eigenvalue(s, f / d) / std::sqrt((double)d);
                }
                double l2 = std::norm(lhs);
                double r2 = std::norm(dirichlet_L(delta, s).value) * std::norm(fac);
                INFO("Delta=", delta, " f=", f, " t=", t);
                CHECK(std::abs(l2 - r2) < 1e-6 * (1 + l2));
            }
        }
    }
}

TEST_CASE("Kim-Sarnak style bound for the Eisenstein correction factor") {
    double C = 0;
    for (i64 delta : {-3, -4, -7}) {
        const auto& chi = character_table(delta);
        i64 q = std::llabs(delta);
        for (i64 f = 1; f <= 64; ++f) {
            for (double t : {0.0, 1.0, 5.0}) {
                cdbl fac = 0;
                for (i64 d : divisors(f)) {
                    int mu = moebius(d);
                    int c = chi[d % q];
                    if (mu == 0 || c == 0) continue;
                    fac += double(mu * c) * rho_eigenvalue(cdbl(0.5, t), f / d) / std::sqrt((double)d);
                }
                C = std::max(C, std::norm(fac) / std::cbrt((double)f));
            }
        }
    }
    CHECK(C < 12.0);
}

TEST_CASE("approximate central values against direct evaluation") {
    for (double t : {1.0, 2.5}) {
        auto ap = approx_L_half([&](i64 n) { return rho_half_it(t, n); }, -4, t, true);
        double direct = std::norm(dirichlet_L(-4, cdbl(0.5, t)).value);
        INFO("t=", t);
        CHECK(std::abs(ap.value.real() - direct) < 1e-6);
    }
    static const double zref[][2] = {{1.0, 0.5421457346482550154}, {2.5, 0.2769738000234260526}};
    for (auto& r : zref) {
        auto ap = approx_L_half([&](i64 n) { return rho_half_it(r[0], n); }, 1, r[0], true);
        CHECK(std::abs(ap.value.real() - r[1]) < 1e-6);
    }
    auto a = approx_L_half([](i64 n) { return rho_half_it(0.0, n); }, -3, 0.0, true);
    auto b = approx_L_half([](i64 n) { return rho_half_it(0.0, n); }, -3, -0.0, true);
    CHECK(a.value.real() == doctest::Approx(b.value.real()).epsilon(1e-12));
}
