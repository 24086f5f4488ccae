#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "powersum/multipoly.hpp"

using namespace powersum;
using MP = MultiPoly;

namespace {

MP var(const std::string& n) { return MP::variable(n); }
MP c(long v) { return MP::constant(Rational(v)); }

MP random_poly(std::mt19937& rng, int max_terms = 4) {
    static const char* names[] = {"x", "y", "z"};
    std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-5, 5), expo(0, 3);
    MP p;
    for (int t = 0; t < nterms(rng); ++t) {
        MP term = MP::constant(Rational(coeff(rng)));
        for (const char* n : names) term = term * var(n).pow(expo(rng));
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("pow examples") {
    MP x = var("x"), y = var("y"), m = var("m");
    CHECK((x + c(1)).pow(2) == x * x + c(2) * x + c(1));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((m * m + c(3)).pow(2) == m.pow(4) + c(6) * m * m + c(9));
    CHECK_THROWS_AS(x.pow(-1), MathError);
}

TEST_CASE("substitute") {
    MP k = var("k");
    MP p = c(30) * k * k - c(2) * k - c(31);
    CHECK(p.substitute_values({{"k", Rational(2)}}).constant_value() == Rational(85));
    CHECK(p.substitute({}) == p);

    // partial substitution leaves unbound symbols
    MP q = var("x") * var("y") + var("x");
    MP r = q.substitute_values({{"y", Rational(3)}});
    CHECK(r == c(4) * var("x"));
}

TEST_CASE("substitute by polynomial") {
    MP x = var("x"), u = var("u");
    MP p = x * x + c(1);
    CHECK(p.substitute({{"x", u + c(1)}}) == u * u + c(2) * u + c(2));
}

TEST_CASE("is_zero") {
    MP x = var("x"), y = var("y");
    MP p = x * x + y;
    CHECK((p - p).is_zero());
    CHECK((x * x - x * x + c(0) * y).is_zero());
    CHECK(!c(1).is_zero());
}

TEST_CASE("evaluate requires bound variables") {
    MP p = var("x") + var("y");
    CHECK(p.evaluate({{"x", Rational(1)}, {"y", Rational(2)}}) == Rational(3));
    CHECK_THROWS_AS(p.evaluate({{"x", Rational(1)}}), MathError);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        MP a = random_poly(rng), b = random_poly(rng), cc = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
    }
}

TEST_CASE("substitution commutes with evaluation") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        MP p = random_poly(rng);
        std::uniform_int_distribution<int> val(-4, 4);
        std::map<std::string, Rational> env = {{"x", Rational(val(rng))},
                                               {"y", Rational(val(rng))},
                                               {"z", Rational(val(rng))}};
        // term-by-term evaluation
        Rational direct(0);
        for (const auto& [e, coef] : p.terms()) {
            Rational t = coef;
            for (size_t i = 0; i < e.size(); ++i)
                t *= env.at(p.variables()[i]).pow(static_cast<long>(e[i]));
            direct += t;
        }
        CHECK(p.evaluate(env) == direct);
    }
}

TEST_CASE("exact division") {
    MP x = var("x"), y = var("y");
    MP d = x + y;
    MP p = d * (x * x - y + c(7));
    auto q = p.divide_exact(d);
    REQUIRE(q);
    CHECK(*q == x * x - y + c(7));
    CHECK(!(p + c(1)).divide_exact(d));
    CHECK_THROWS_AS(p.divide_exact(MP()), MathError);

    // multivariate: residual of the degree-3 symmetric family
    MP A = var("A"), B = var("B"), C = var("C"), D = var("D"), E = var("E"), F = var("F");
    MP t = var("t");
    MP cond = A * A + C * C + E * E - B * B - D * D - F * F;
    MP res;
    for (const MP* v : {&A, &C, &E}) res += (*v * t + c(1)).pow(3) - (*v * t - c(1)).pow(3);
    for (const MP* v : {&B, &D, &F}) res += (*v * t - c(1)).pow(3) - (*v * t + c(1)).pow(3);
    auto quot = res.divide_exact(cond);
    REQUIRE(quot);
    CHECK(*quot == c(6) * t * t);
}

TEST_CASE("coefficient extraction") {
    MP x = var("x"), w = var("w");
    MP p = c(3) * w.pow(5) * x + c(2) * w - x;
    CHECK(p.coefficient("w", 5) == c(3) * x);
    CHECK(p.coefficient("w", 1) == c(2));
    CHECK(p.coefficient("w", 0) == -x);
    CHECK(p.coefficient("w", 2).is_zero());
    CHECK(p.coefficient("absent", 0) == p);
}

TEST_CASE("degree-9 condition polynomial specializes to the paper's factors") {
    // coef_n2 * n^2 + coef_m2 * m^2 at (a,b,t) = (3,4,27/41) equals
    // 160/68921 * (139 n - 164 m)(139 n + 164 m)
    MP a = var("a"), b = var("b"), t = var("t"), mm = var("m"), nn = var("n");
    MP coef_n2 = c(-14) * b * t * t - c(7) * b * a * t + a.pow(3) + c(2) * a * b * b +
                 c(14) * a * t * t - c(2) * a * a * b - b.pow(3) + c(7) * a * a * t +
                 c(7) * b * b * t + c(14) * t.pow(3);
    MP coef_m2 = c(-4) * a * b * b - c(5) * b.pow(3) + c(4) * a * a * b + c(5) * a.pow(3) +
                 c(7) * b * b * t + c(7) * a * a * t + c(7) * b * a * t;
    MP cond = coef_n2 * nn * nn + coef_m2 * mm * mm;
    MP special = cond.substitute_values(
        {{"a", Rational(3)}, {"b", Rational(4)}, {"t", Rational(27, 41)}});
    MP expected = MP::constant(Rational(160, 68921)) *
                  (c(139) * nn - c(164) * mm) * (c(139) * nn + c(164) * mm);
    CHECK(special == expected);
}
