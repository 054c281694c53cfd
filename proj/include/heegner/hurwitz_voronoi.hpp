#pragma once
// Partial/twisted sums of Hurwitz class numbers, the Voronoi dual-side identity,
// and the residues of the twisted Dirichlet series L_+(s, a/c).

#include "heegner/arith.hpp"
#include "heegner/qforms.hpp"
#include "heegner/smoothweight.hpp"

namespace heegner {

struct TwistSpec {
    i64 a = 0, c = 0; // gcd(a, c) = 1, 4 | c; untwisted when c = 0
    bool untwisted() const { return c == 0; }
};

struct SharpSum {
    double sum;      // exact rational sum, as double (denominator divides 6)
    i64 sum_num6;    // 6 * sum, exact
    double main;     // main term
};

// sum_{-X < D < 0, D = delta (mod 4)} H(D) and its main term pi/36 X^{3/2} - X/8;
// delta = -1 combines both classes (main term pi/18 X^{3/2} - X/4).
SharpSum sharp_sum(const HurwitzTable& table, double X, int delta_class);

struct VoronoiTerms {
    cdbl dual_H;       // dual Hurwitz sum against the sin-kernel
    cdbl dual_square;  // square-indexed sum against the exp-kernel
    cdbl main;         // the two main-term integrals
    double tail_bound; // truncation bound for the dual sums
};

struct VoronoiResult {
    cdbl lhs, rhs;
    VoronoiTerms terms;
};

// Both sides of the Hurwitz class-number summation formula for a smooth bump phi
// supported in (0, infinity) and twist e(a|D|/c) with 4 | c, (a, c) = 1.
// The table must cover supp(phi).
VoronoiResult voronoi_both_sides(const HurwitzTable& table, const SmoothBump& phi, i64 a, i64 c,
                                 double tol = 1e-8);

struct LplusResidues {
    cdbl res_5_4, res_3_4;
};
// Residues of L_+(s, a/c) = sum_{D<0} H(D) e(a|D|/c) |D|^{-1/4-s} at s = 5/4, 3/4.
LplusResidues lplus_residues(i64 a, i64 c);

} // namespace heegner
