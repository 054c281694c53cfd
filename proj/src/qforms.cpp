#include "heegner/qforms.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace heegner {

static void check_disc(i64 D) {
    if (D >= 0 || !is_discriminant(D))
        throw std::invalid_argument("need a negative discriminant (D = 0,1 mod 4)");
}

std::vector<QuadForm> reduced_forms(i64 D, bool primitive_only) {
    check_disc(D);
    std::vector<QuadForm> out;
    i64 n = -D;
    i64 bmax = static_cast<i64>(std::sqrt(static_cast<double>(n) / 3.0)) + 1;
    for (i64 b = (n % 2 == 0 ? 0 : 1); b <= bmax; b += 2) {
        if ((b * b - D) % 4 != 0) continue;
        i64 ac = (b * b + n) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            i64 c = ac / a;
            // reduced: |b| <= a <= c, with b >= 0 if |b| = a or a = c
            if (primitive_only && std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
            if (b != 0 && b != a && a != c) out.push_back({a, -b, c});
        }
    }
    return out;
}

Rational hurwitz(i64 D) {
    check_disc(D);
    i64 six = 0;
    for (const auto& f : reduced_forms(D)) six += 6 / f.stabilizer();
    i64 g = std::gcd(six, i64(6));
    return {six / g, 6 / g};
}

i64 class_number(i64 D) {
    return static_cast<i64>(reduced_forms(D, true).size());
}

std::vector<HeegnerPoint> heegner_points(i64 D) {
    check_disc(D);
    std::vector<HeegnerPoint> pts;
    double s = std::sqrt(static_cast<double>(-D));
    for (const auto& f : reduced_forms(D)) {
        cdbl z(-static_cast<double>(f.b) / (2.0 * f.a), s / (2.0 * f.a));
        pts.push_back({z, f.stabilizer(), f});
    }
    return pts;
}

HurwitzTable::HurwitzTable(i64 X, int threads, i64 mem_cap_bytes) : X_(X) {
    if (X < 3) throw std::invalid_argument("HurwitzTable: X >= 3 required");
    i64 bytes = (X + 1) * static_cast<i64>(sizeof(std::int32_t));
    if (bytes > mem_cap_bytes)
        throw std::length_error("HurwitzTable: estimated " + std::to_string(bytes) +
                                " bytes exceeds cap " + std::to_string(mem_cap_bytes));
    sixH_.assign(X + 1, 0);

    // Enumerate reduced forms (a, b, c), |b| <= a <= c, b^2 - 4ac = D, |D| <= X.
    // Partition work by a; each worker fills a private array, merged afterwards.
    i64 amax = static_cast<i64>(std::sqrt(static_cast<double>(X) / 3.0)) + 1;
    int nthreads = std::max(1, threads);
    std::vector<std::vector<std::int32_t>> parts(nthreads);
    auto worker = [&](i64 lo, i64 hi, std::vector<std::int32_t>& acc) {
        acc.assign(X_ + 1, 0);
        for (i64 a = lo; a < hi; ++a) {
            for (i64 b = 0; b <= a; ++b) {
                // c >= a, D = b^2 - 4ac, need -X <= D < 0
                i64 cmin = a;
                if (b * b - 4 * a * cmin >= 0) cmin = b * b / (4 * a) + 1;
                i64 cmax = (X_ + b * b) / (4 * a);
                for (i64 c = cmin; c <= cmax; ++c) {
                    i64 n = 4 * a * c - b * b; // = |D|
                    if (n <= 0 || n > X_) continue;
                    int weight; // 6/stab times the +-b multiplicity
                    if (a == b && a == c) weight = 2;        // (a,a,a), stab 3
                    else if (b == 0 && a == c) weight = 3;   // (a,0,a), stab 2
                    else if (b == 0 || b == a || a == c) weight = 6;
                    else weight = 12;                        // counts (a,b,c) and (a,-b,c)
                    acc[n] += weight;
                }
            }
        }
    };
    if (nthreads == 1) {
        worker(1, amax + 1, parts[0]);
    } else {
        std::vector<std::thread> pool;
        i64 step = amax / nthreads + 1;
        for (int t = 0; t < nthreads; ++t) {
            i64 lo = 1 + t * step, hi = std::min<i64>(amax + 1, lo + step);
            if (lo >= hi) { parts[t].assign(X_ + 1, 0); continue; }
            pool.emplace_back(worker, lo, hi, std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
    }
    for (auto& part : parts)
        for (i64 i = 0; i <= X_ && i < static_cast<i64>(part.size()); ++i) sixH_[i] += part[i];
}

Rational HurwitzTable::H(i64 D) const {
    if (!has(D)) throw std::out_of_range("HurwitzTable: D outside table");
    i64 six = sixH_[-D];
    i64 g = std::gcd(six, i64(6));
    return {six / g, six == 0 ? 1 : 6 / g};
}

void HurwitzTable::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "D,H_num,H_den\n";
    for (i64 n = 3; n <= X_; ++n) {
        i64 r = n % 4;
        if (r != 0 && r != 3) continue; // D = -n must be 0,1 (mod 4)
        auto h = H(-n);
        out << -n << "," << h.num << "," << h.den << "\n";
    }
}

} // namespace heegner
