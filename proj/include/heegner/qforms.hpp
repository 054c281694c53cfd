#pragma once
// Binary quadratic forms, Heegner points, Hurwitz class numbers and a batched sieve.

#include "heegner/arith.hpp"

#include <complex>
#include <string>
#include <vector>

namespace heegner {

struct QuadForm {
    i64 a, b, c;
    i64 disc() const { return b * b - 4 * a * c; }
    // Order of the stabilizer in PSL(2,Z): 3 for multiples of (1,1,1),
    // 2 for multiples of (1,0,1), else 1.
    int stabilizer() const {
        if (a == c && b == a) return 3;
        if (a == c && b == 0) return 2;
        return 1;
    }
};

struct HeegnerPoint {
    cdbl z;
    int stabilizer;
    QuadForm form;
};

// Exact rational with small denominator (Hurwitz class numbers live in (1/6)Z).
struct Rational {
    i64 num = 0, den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// All reduced integral forms (a,b,c) of discriminant D < 0: |b| <= a <= c and
// b >= 0 when |b| = a or a = c. Includes imprimitive forms unless primitive_only.
std::vector<QuadForm> reduced_forms(i64 D, bool primitive_only = false);

// Hurwitz class number H(D) = sum over reduced forms of 1/stabilizer, exact.
Rational hurwitz(i64 D);

i64 class_number(i64 D); // number of primitive classes

std::vector<HeegnerPoint> heegner_points(i64 D);

// Batched table of H(D) for 0 < |D| <= X, filled by direct form enumeration in
// O(X^{3/2}); rows are exact (stored as 6*H, an integer).
class HurwitzTable {
  public:
    // mem_cap_bytes guards the backing array; throws std::length_error beyond it.
    explicit HurwitzTable(i64 X, int threads = 1, i64 mem_cap_bytes = i64(1) << 31);
    i64 xmax() const { return X_; }
    bool has(i64 D) const { return D < 0 && -D <= X_; }
    Rational H(i64 D) const;
    double Hd(i64 D) const { return sixH_[-D] / 6.0; }
    i64 sixH(i64 D) const { return sixH_[-D]; }
    // CSV rows "D,H_num,H_den" for all discriminants 0 < |D| <= X.
    void write_csv(const std::string& path) const;

  private:
    i64 X_;
    std::vector<std::int32_t> sixH_;
};

} // namespace heegner
