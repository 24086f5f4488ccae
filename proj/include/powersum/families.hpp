#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "powersum/multipoly.hpp"
#include "powersum/pair.hpp"

namespace powersum::families {

// ---- degree 2 ----------------------------------------------------------

// Rational point of x^2 + xy + y^2 = norm.
struct ConicPoint {
    Rational x, y, norm;
    bool tangent_base = false;  // line met the base point twice
};

// Second intersection of the line {(x0+t, y0+k t)} with the conic through
// (x0, y0); closed form t = -(2x0 + y0 + k(x0 + 2y0)) / (k^2 + k + 1).
ConicPoint conic_line_parameterize(const Rational& x0, const Rational& y0, const Rational& k);

PowerSumPair deg2_family(const Rational& k);

// ---- degree 3 ----------------------------------------------------------

struct Deg3ShiftResult {
    Rational x;
    PowerSumPair pair;
};

// First method: shift a known cubic identity (A_i)^3 = (P_i)^3 to
// ((A_i x + 1)) = ((P_i x + 1)) with x = -(sum A - sum P)/(sum A^2 - sum P^2).
Deg3ShiftResult deg3_shift_family(const std::array<Integer, 6>& base_a,
                                  const std::array<Integer, 6>& base_p);

// Second method: requires A^2 + C^2 + E^2 = B^2 + D^2 + F^2.
PowerSumPair deg3_symmetric_family(const std::array<Integer, 6>& coeff, const Rational& x);

// ---- degree 4 ----------------------------------------------------------

PowerSumPair deg4_family(const Rational& k);

// ---- degree 5 ----------------------------------------------------------

// A^5 + B^5 + C^5 + D^5 + E^5 + F^5 = 2 T^5, with the empirical shape
// A+B = C+D = E+F shared by both printed bases.
struct Deg5Base {
    Integer a, b, c, d, e, f, t;
    void validate() const;  // throws MathError if the quintic identity fails
};

Deg5Base deg5_base1();  // (91, 7, -21, 119, 161, -63), T = 147
Deg5Base deg5_base2();  // (159, -61, 127, -29, 81, 17), T = 147

// U = 2(D-F), V = 2(2D-3B+F), W = 2(-D+3B-2F); U+V+W = 4(D-F).
std::array<Integer, 3> deg5_uvw(const Integer& b, const Integer& d, const Integer& f);

// 6-vs-2 shape: [Am^2+Um+3B, ...] = [T(m^2+3), T(m^2+3)] at fifth powers.
PowerSumPair deg5_half_identity(const Deg5Base& base, const Rational& m);

// Equates the two half identities: 6-vs-6, valid at k=5 for every m.
PowerSumPair deg5_66_family(const Rational& m);

// ---- degree 6 ----------------------------------------------------------

// Twelve quadratic forms in u = k*b2 and v = a1.
PowerSumPair deg6_family(const Integer& a1, const Integer& b2, const Integer& k);

struct Deg6CaseReport {
    MultiPoly residual;                  // sum A_i^6 - sum B_i^6, expanded
    bool listed_case = false;            // one of the seven printed tuples
    MultiPoly display;                   // the paper's displayed product (if listed)
    bool divisible = false;              // residual exactly divisible by display
    std::optional<MultiPoly> quotient;   // present iff divisible
};

Deg6CaseReport deg6_case_residual(long m, long n, long p, long q, long r, long t);

// ---- degree 7 ----------------------------------------------------------

// Nonnegative (c, d) with 15c^2 = (4q^2-p^2)b^2 + (4p^2-q^2)a^2 and
// 15d^2 = (4p^2-q^2)b^2 + (4q^2-p^2)a^2; throws "not representable".
std::pair<Rational, Rational> deg7_conditions(const Integer& p, const Integer& q,
                                              const Integer& a, const Integer& b);

// The 4-vs-4 identity valid at k = 2, 4, 6 under the side conditions.
PowerSumPair deg7_piezas(const Integer& p, const Integer& q, const Integer& a, const Integer& b);

// {t + a_i} u {t - a_i} vs {t + b_i} u {t - b_i}; input must verify at all
// even k = 2..2n, output is valid for k = 1..2n+1.
PowerSumPair shift_extend(const PowerSumPair& pair, const Rational& t);

// Removes {v, -v} sub-pairs within a side and values shared across sides;
// odd-degree residuals are unchanged.
PowerSumPair odd_cancel(const PowerSumPair& pair);

PowerSumPair deg7_family(const Integer& p, const Integer& q, const Integer& a, const Integer& b);

// ---- degree 8 ----------------------------------------------------------

Rational deg8_condition_f(const Rational& x, const Rational& a, const Rational& b);
Rational deg8_discriminant(const Rational& x);

// Rational roots of f(x, a, b) = 0 as ratios (a : b), coprime integers.
std::vector<std::pair<Integer, Integer>> deg8_solve_ab(const Rational& x);

// Triples with equal sums of squares (identically) and of fourth powers
// (because f = 0); preconditions of Sinha's lift.
struct Deg8Triples {
    Rational a1, a2, a3, b1, b2, b3;
    void validate() const;
};

Deg8Triples deg8_triples(const Rational& x, const Rational& a, const Rational& b);

// 7-vs-7 equality of eighth powers from a Deg8Triples.
PowerSumPair sinha_lift(const Deg8Triples& tr);

// 6-vs-6: sinha_lift minus the canceling pair A1 = -B1, canonicalized.
PowerSumPair deg8_family(const Rational& x, const Rational& a, const Rational& b);

// ---- degree 9 ----------------------------------------------------------

struct Deg9Params {
    Rational a, b, t, m, n, w;
};

// The twelve linear forms; degrees {1,2,3} always, with 9 added when the
// k=9 residual happens to vanish.
PowerSumPair deg9_forms(const Deg9Params& pr);

// Coefficients (coef_n2, coef_m2) of the condition quadratic
// coef_n2 * n^2 + coef_m2 * m^2 = 0.
std::pair<Rational, Rational> deg9_condition(const Rational& a, const Rational& b,
                                             const Rational& t);

// Coefficients (t^4 .. t^0) of the quartic s^2 = q(t); equals
// -coef_n2*coef_m2 as a polynomial identity.
std::array<Rational, 5> deg9_quartic_rhs(const Rational& a, const Rational& b);

// Coprime (m, n) annihilating the condition quadratic; throws
// "no rational (m:n)" when -coef_n2*coef_m2 is not a square.
std::pair<Integer, Integer> deg9_solve_mn(const Rational& a, const Rational& b,
                                          const Rational& t);

// k=9 residual of the forms as a polynomial in w: c1 w + c3 w^3 + c5 w^5.
struct Deg9WResidual {
    Rational c1, c3, c5;
    Rational eval(const Rational& w) const;
    std::string str() const;
};

Deg9WResidual deg9_w_residual(const Rational& a, const Rational& b, const Rational& t,
                              const Rational& m, const Rational& n);

// Positive rational roots of the w-residual (the admissible nonzero w).
std::vector<Rational> deg9_admissible_w(const Rational& a, const Rational& b, const Rational& t,
                                        const Rational& m, const Rational& n);

// Full construction: solves (m:n), validates the given w (or solves for the
// smallest admissible one), verifies k in {1,2,3,9} and canonicalizes.
PowerSumPair deg9_family(const Rational& a, const Rational& b, const Rational& t,
                         std::optional<Rational> w = std::nullopt);

}  // namespace powersum::families
