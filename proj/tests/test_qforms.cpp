#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heegner/qforms.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace heegner;

// Independent oracle: exhaustive scan over |b| <= a <= sqrt(|D|/3), c = (b^2+|D|)/4a.
static std::set<std::array<i64, 3>> forms_oracle(i64 D) {
    std::set<std::array<i64, 3>> out;
    i64 n = -D;
    for (i64 a = 1; 3 * a * a <= n + 3; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            i64 num = b * b + n;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if ((b == -a && a != c) || (a == c && b < 0)) continue; // tie-break b >= 0
            if (b == -a && a == c) continue;
            out.insert({a, b, c});
        }
    }
    return out;
}

TEST_CASE("reduced forms for small discriminants") {
    auto f3 = reduced_forms(-3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].a == 1); CHECK(f3[0].b == 1); CHECK(f3[0].c == 1);

    auto f4 = reduced_forms(-4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].a == 1); CHECK(f4[0].b == 0); CHECK(f4[0].c == 1);

    auto f12 = reduced_forms(-12);
    std::set<std::array<i64, 3>> got;
    for (auto& f : f12) got.insert({f.a, f.b, f.c});
    CHECK(got == std::set<std::array<i64, 3>>{{1, 0, 3}, {2, 2, 2}});

    CHECK(reduced_forms(-23).size() == 3);
}

TEST_CASE("reduced forms match the exhaustive oracle") {
    for (i64 D = -3; D >= -2000; --D) {
        if (!is_discriminant(D)) continue;
        auto got = reduced_forms(D);
        std::set<std::array<i64, 3>> s;
        for (auto& f : got) {
            REQUIRE(f.disc() == D);
            s.insert({f.a, f.b, f.c});
        }
        REQUIRE(s.size() == got.size()); // no duplicates
        REQUIRE(s == forms_oracle(D));
    }
}

TEST_CASE("Hurwitz class numbers") {
    CHECK(hurwitz(-3).num == 1); CHECK(hurwitz(-3).den == 3);
    CHECK(hurwitz(-4).num == 1); CHECK(hurwitz(-4).den == 2);
    CHECK(hurwitz(-23).num == 3); CHECK(hurwitz(-23).den == 1);
    CHECK(hurwitz(-27).num == 4); CHECK(hurwitz(-27).den == 3); // (1,1,7) + 3(1,1,1)
    CHECK(hurwitz(-15).num == 2); CHECK(hurwitz(-15).den == 1);
}

TEST_CASE("Heegner points") {
    auto p4 = heegner_points(-4);
    REQUIRE(p4.size() == 1);
    CHECK(std::abs(p4[0].z - cdbl(0, 1)) < 1e-15);
    CHECK(p4[0].stabilizer == 2);

    auto p3 = heegner_points(-3);
    REQUIRE(p3.size() == 1);
    CHECK(std::abs(p3[0].z - cdbl(-0.5, std::sqrt(3.0) / 2)) < 1e-15);
    CHECK(p3[0].stabilizer == 3);

    auto p23 = heegner_points(-23);
    REQUIRE(p23.size() == 3);
    for (auto& p : p23) {
        CHECK(p.z.imag() >= std::sqrt(3.0) / 2 - 1e-12); // fundamental domain
        CHECK(std::abs(p.z.real()) <= 0.5 + 1e-12);
        CHECK(p.stabilizer == 1);
    }
}

TEST_CASE("Hurwitz sieve agrees with per-D evaluation") {
    HurwitzTable table(4, 1);
    CHECK(table.H(-3).num == 1); CHECK(table.H(-3).den == 3);
    CHECK(table.H(-4).num == 1); CHECK(table.H(-4).den == 2);

    HurwitzTable t20(20, 1);
    CHECK(t20.H(-15).num == 2); CHECK(t20.H(-15).den == 1); // forms (1,1,4),(2,1,2)

    HurwitzTable big(20000, 4);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> dd(3, 20000);
    int checked = 0;
    while (checked < 1000) {
        i64 n = dd(rng);
        if (n % 4 != 0 && n % 4 != 3) continue;
        auto a = big.H(-n);
        auto b = hurwitz(-n);
        REQUIRE(a.num == b.num);
        REQUIRE(a.den == b.den);
        ++checked;
    }
}

TEST_CASE("sieve paper anchors and memory cap") {
    HurwitzTable t(1000, 2);
    double sum = 0;
    for (i64 n = 3; n <= 1000; ++n)
        if (n % 4 == 0 || n % 4 == 3) sum += t.Hd(-n);
    CHECK(sum == doctest::Approx(5280.5).epsilon(1e-12));
    CHECK_THROWS_AS(HurwitzTable(1000000, 1, 1024), std::length_error);
}

TEST_CASE("parallel sieve equals serial sieve") {
    HurwitzTable s(5000, 1), p(5000, 8);
    for (i64 n = 3; n <= 5000; ++n)
        if (n % 4 == 0 || n % 4 == 3) CHECK(s.sixH(-n) == p.sixH(-n));
}

TEST_CASE("H(D)^2 partial sums obey the quadratic bound") {
    // single empirical constant over x <= 1e5
    HurwitzTable t(100000, 8);
    double acc = 0;
    double worst = 0;
    for (i64 n = 3; n <= 100000; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        double h = t.Hd(-n);
        acc += h * h;
        if (n >= 100) worst = std::max(worst, acc / (double(n) * double(n)));
    }
    CHECK(worst < 1.0); // empirical C
}
