#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "powersum/pair.hpp"

using namespace powersum;

TEST_CASE("degree classes") {
    CHECK(degree_class({2, 4, 8}) == DegreeClass::all_even);
    CHECK(degree_class({1, 3, 5, 7}) == DegreeClass::all_odd);
    CHECK(degree_class({1, 2, 3, 9}) == DegreeClass::mixed);
}

TEST_CASE("power_sum_residual") {
    PowerSumPair t3 = make_pair_int({11, 22, 4, 3, 21, 5}, {20, 7, 6, 23, 9, 1}, {3});
    CHECK(power_sum_residual(t3, 3).is_zero());

    PowerSumPair same = make_pair_int({1}, {1}, {9});
    CHECK(power_sum_residual(same, 9).is_zero());

    PowerSumPair off = make_pair_int({1, 2}, {3}, {2});
    CHECK(power_sum_residual(off, 2) == Rational(-4));
}

TEST_CASE("verify_pair") {
    PowerSumPair d7 = make_pair_int({-13, 33, -59, 23, -5, -51}, {39, -19, -55, 19, -57, 1},
                                    {1, 3, 5, 7});
    VerifyReport rep = verify_pair(d7);
    CHECK(rep.pass);
    CHECK(rep.residuals.size() == 4);
    for (const auto& [k, r] : rep.residuals) CHECK(r.is_zero());

    PowerSumPair t8 = make_pair_int({3, 6, 8, 10, 15, 23}, {5, 9, 12, 9, 20, 22}, {8});
    CHECK(verify_pair(t8).pass);
    t8.lhs[0] += Rational(1);  // perturb
    VerifyReport bad = verify_pair(t8);
    CHECK(!bad.pass);
    CHECK(!bad.residuals.at(8).is_zero());
}

TEST_CASE("canonicalize: deg4 raw k=2") {
    PowerSumPair raw = make_pair_int({3888, -2528, 1360, 3724, 5586, 9310},
                                     {2394, 6650, 2352, 9044, 1568, 3920}, {4});
    PowerSumPair c = canonicalize(raw);
    PowerSumPair want = make_pair_int({4655, 2793, 1944, 1862, 1264, 680},
                                      {4522, 3325, 1960, 1197, 1176, 784}, {4});
    CHECK(c.lhs == want.lhs);
    CHECK(c.rhs == want.rhs);
}

TEST_CASE("canonicalize: zeros dropped") {
    PowerSumPair p = make_pair_int({0, 1}, {1, 0}, {3});
    PowerSumPair c = canonicalize(p);
    CHECK(c.lhs == std::vector<Rational>{Rational(1)});
    CHECK(c.rhs == std::vector<Rational>{Rational(1)});
}

TEST_CASE("canonicalize: deg5 raw m=2 moves negatives across sides") {
    PowerSumPair raw = make_pair_int({1113, -427, 889, -203, 567, 119},
                                     {269, 417, 989, -303, -377, 1063}, {5});
    PowerSumPair c = canonicalize(raw);
    PowerSumPair want = make_pair_int({1113, 889, 567, 377, 303, 119},
                                      {1063, 989, 427, 417, 269, 203}, {5});
    CHECK(c.lhs == want.lhs);
    CHECK(c.rhs == want.rhs);
}

TEST_CASE("canonicalize clears denominators") {
    PowerSumPair p;
    p.lhs = {Rational(4, 5), Rational(3, 5), Rational(1, 5), Rational(-3, 5), Rational(-4, 5),
             Rational(-7, 5)};
    p.rhs = {Rational(2, 5), Rational(0), Rational(-1, 5), Rational(-2, 5), Rational(-1),
             Rational(-6, 5)};
    p.degrees = {3};
    PowerSumPair c = canonicalize(p);
    for (const auto& v : c.lhs) CHECK(v.is_integer());
    for (const auto& v : c.rhs) CHECK(v.is_integer());
    // lhs >= rhs lexicographically
    CHECK(c.lhs.front() == Rational(7));
    CHECK(verify_pair(c).pass);
}

TEST_CASE("canonicalize mixed pairs negates only globally") {
    PowerSumPair p = make_pair_int({-5, 2}, {-4, -4, 1}, {1, 2});
    PowerSumPair c = canonicalize(p);
    // maximal magnitude entry was -5: everything negated
    CHECK(c.lhs.front() == Rational(5));
    // residuals preserved up to global sign pattern: re-verify both
    CHECK(verify_pair(p).pass == verify_pair(c).pass);
}

namespace {

std::mt19937 rng(2024);

PowerSumPair random_pair() {
    std::uniform_int_distribution<int> len(1, 5), val(-20, 20), den(1, 6), deg(1, 6),
        ndeg(1, 3);
    PowerSumPair p;
    int nl = len(rng), nr = len(rng);
    for (int i = 0; i < nl; ++i) p.lhs.emplace_back(Rational(val(rng), den(rng)));
    for (int i = 0; i < nr; ++i) p.rhs.emplace_back(Rational(val(rng), den(rng)));
    int nd = ndeg(rng);
    for (int i = 0; i < nd; ++i) p.degrees.insert(static_cast<unsigned>(deg(rng)));
    return p;
}

}  // namespace

TEST_CASE("canonicalize is idempotent") {
    for (int i = 0; i < 300; ++i) {
        PowerSumPair p = random_pair();
        PowerSumPair c1 = canonicalize(p);
        PowerSumPair c2 = canonicalize(c1);
        CHECK(c1.lhs == c2.lhs);
        CHECK(c1.rhs == c2.rhs);
    }
}

TEST_CASE("canonicalize preserves validity per degree") {
    for (int i = 0; i < 300; ++i) {
        PowerSumPair p = random_pair();
        PowerSumPair c = canonicalize(p);
        for (unsigned k : p.degrees) {
            CHECK(power_sum_residual(p, k).is_zero() == power_sum_residual(c, k).is_zero());
        }
    }
}

TEST_CASE("sorting ties put the positive entry first") {
    PowerSumPair p = make_pair_int({-3, 3, 1}, {2, -3, 3, -1}, {1, 2});
    PowerSumPair c = canonicalize(p);
    for (const auto& side : {c.lhs, c.rhs}) {
        for (size_t i = 0; i + 1 < side.size(); ++i) {
            CHECK(!canonical_entry_precedes(side[i + 1], side[i]));
        }
    }
    // the +3 lands before the -3 on each side that has both
    CHECK(c.lhs[0] == Rational(3));
    CHECK(c.lhs[1] == Rational(-3));
}
