#include "powersum/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace powersum::families {

namespace {

Rational rsum(const std::vector<Rational>& vs) {
    Rational acc(0);
    for (const auto& v : vs) acc += v;
    return acc;
}

PowerSumPair raw_pair(std::vector<Rational> lhs, std::vector<Rational> rhs,
                      std::set<unsigned> degrees, std::string source) {
    PowerSumPair p;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
    p.degrees = std::move(degrees);
    p.source = std::move(source);
    return p;
}

bool same_abs_multiset(const PowerSumPair& p) {
    std::vector<Rational> l, r;
    for (const auto& v : p.lhs) l.push_back(v.abs());
    for (const auto& v : p.rhs) r.push_back(v.abs());
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    return l == r;
}

}  // namespace

// ---- degree 2 ----------------------------------------------------------

ConicPoint conic_line_parameterize(const Rational& x0, const Rational& y0, const Rational& k) {
    Rational norm = x0 * x0 + x0 * y0 + y0 * y0;
    Rational t = -(Rational(2) * x0 + y0 + k * (x0 + Rational(2) * y0)) / (k * k + k + Rational(1));
    ConicPoint pt;
    pt.x = x0 + t;
    pt.y = y0 + k * t;
    pt.norm = norm;
    pt.tangent_base = t.is_zero();
    return pt;
}

PowerSumPair deg2_family(const Rational& k) {
    Rational d = k * k + k + Rational(1);
    std::vector<Rational> lhs = {
        Rational(30) * k * k - Rational(2) * k - Rational(31),
        Rational(-31) * k * k - Rational(60) * k + Rational(1),
        -(k * k) - Rational(62) * k - Rational(30),
        Rational(36) * d,
        Rational(7) * d,
        Rational(17) * d,
    };
    std::vector<Rational> rhs;
    for (long v : {3, 4, 19, 27, 34, 35}) rhs.push_back(Rational(v) * d);
    return raw_pair(std::move(lhs), std::move(rhs), {2}, "deg2_family k=" + k.str());
}

// ---- degree 3 ----------------------------------------------------------

Deg3ShiftResult deg3_shift_family(const std::array<Integer, 6>& base_a,
                                  const std::array<Integer, 6>& base_p) {
    Rational s1a(0), s1p(0), s2a(0), s2p(0), s3a(0), s3p(0);
    for (const auto& v : base_a) {
        Rational r{v};
        s1a += r;
        s2a += r * r;
        s3a += r * r * r;
    }
    for (const auto& v : base_p) {
        Rational r{v};
        s1p += r;
        s2p += r * r;
        s3p += r * r * r;
    }
    if (s3a != s3p) throw MathError("deg3_shift_family: base is not a cubic identity");

    Deg3ShiftResult out;
    auto build = [&](const Rational& x) {
        std::vector<Rational> lhs, rhs;
        for (const auto& v : base_a) lhs.push_back(Rational{v} * x + Rational(1));
        for (const auto& v : base_p) rhs.push_back(Rational{v} * x + Rational(1));
        return raw_pair(std::move(lhs), std::move(rhs), {3}, "deg3_shift_family x=" + x.str());
    };

    if (s2a == s2p) {
        if (s1a != s1p) throw MathError("degenerate shift");
        out.x = Rational(0);
        out.pair = build(out.x);
        out.pair.flag = "degenerate";
        return out;
    }
    out.x = -(s1a - s1p) / (s2a - s2p);
    out.pair = build(out.x);
    return out;
}

PowerSumPair deg3_symmetric_family(const std::array<Integer, 6>& coeff, const Rational& x) {
    const Rational A{coeff[0]}, B{coeff[1]}, C{coeff[2]}, D{coeff[3]}, E{coeff[4]}, F{coeff[5]};
    if (A * A + C * C + E * E != B * B + D * D + F * F)
        throw MathError("symmetry condition fails");
    const Rational one(1);
    std::vector<Rational> lhs = {A * x + one, B * x - one, C * x + one,
                                 D * x - one, E * x + one, F * x - one};
    std::vector<Rational> rhs = {A * x - one, B * x + one, C * x - one,
                                 D * x + one, E * x - one, F * x + one};
    return raw_pair(std::move(lhs), std::move(rhs), {3}, "deg3_symmetric_family x=" + x.str());
}

// ---- degree 4 ----------------------------------------------------------

PowerSumPair deg4_family(const Rational& k) {
    Rational d = k * k + k + Rational(1);
    std::vector<Rational> lhs = {
        Rational(496) * k * k + Rational(960) * k - Rational(16),
        Rational(-16) * k * k - Rational(992) * k - Rational(480),
        Rational(480) * k * k - Rational(32) * k - Rational(496),
        Rational(532) * d,
        Rational(798) * d,
        Rational(1330) * d,
    };
    std::vector<Rational> rhs;
    for (long v : {342, 336, 224, 560, 950, 1292}) rhs.push_back(Rational(v) * d);
    return raw_pair(std::move(lhs), std::move(rhs), {4}, "deg4_family k=" + k.str());
}

// ---- degree 5 ----------------------------------------------------------

void Deg5Base::validate() const {
    Rational acc(0);
    for (const Integer* v : {&a, &b, &c, &d, &e, &f}) acc += Rational{*v}.pow(5);
    if (acc != Rational(2) * Rational{t}.pow(5))
        throw MathError("Deg5Base: A^5+..+F^5 != 2 T^5");
}

Deg5Base deg5_base1() { return Deg5Base{91, 7, -21, 119, 161, -63, 147}; }
Deg5Base deg5_base2() { return Deg5Base{159, -61, 127, -29, 81, 17, 147}; }

std::array<Integer, 3> deg5_uvw(const Integer& b, const Integer& d, const Integer& f) {
    return {2 * (d - f), 2 * (2 * d - 3 * b + f), 2 * (-d + 3 * b - 2 * f)};
}

PowerSumPair deg5_half_identity(const Deg5Base& base, const Rational& m) {
    base.validate();
    auto [U, V, W] = deg5_uvw(base.b, base.d, base.f);
    const Rational u{U}, v{V}, w{W};
    const Rational A{base.a}, B{base.b}, C{base.c}, D{base.d}, E{base.e}, F{base.f}, T{base.t};
    Rational m2 = m * m;
    std::vector<Rational> lhs = {
        A * m2 + u * m + Rational(3) * B, B * m2 - u * m + Rational(3) * A,
        C * m2 + v * m + Rational(3) * D, D * m2 - v * m + Rational(3) * C,
        E * m2 + w * m + Rational(3) * F, F * m2 - w * m + Rational(3) * E,
    };
    Rational t = T * (m2 + Rational(3));
    return raw_pair(std::move(lhs), {t, t}, {5}, "deg5_half_identity m=" + m.str());
}

PowerSumPair deg5_66_family(const Rational& m) {
    PowerSumPair h1 = deg5_half_identity(deg5_base1(), m);
    PowerSumPair h2 = deg5_half_identity(deg5_base2(), m);
    return raw_pair(std::move(h1.lhs), std::move(h2.lhs), {5}, "deg5_66_family m=" + m.str());
}

// ---- degree 6 ----------------------------------------------------------

PowerSumPair deg6_family(const Integer& a1, const Integer& b2, const Integer& k) {
    if (a1 == 0 && b2 == 0) throw MathError("deg6_family: (a1, b2) = (0, 0)");
    Rational u{k * b2}, v{a1};
    Rational u2 = u * u, uv = u * v, v2 = v * v;
    auto q = [&](long cu, long cuv, long cv) {
        return Rational(cu) * u2 + Rational(cuv) * uv + Rational(cv) * v2;
    };
    std::vector<Rational> lhs = {q(7, 0, -4),    q(-9, -32, -68), q(3, 20, 44),
                                 q(15, 20, -28), q(11, -20, -52), q(1, -44, -36)};
    std::vector<Rational> rhs = {q(-1, -16, -36), q(15, 16, 28),   q(-9, -4, -4),
                                 q(11, 12, -44),  q(7, -28, -68),  q(-3, -52, -52)};
    PowerSumPair p = raw_pair(std::move(lhs), std::move(rhs), {6},
                              "deg6_family a1=" + a1.get_str() + " b2=" + b2.get_str() +
                                  " k=" + k.get_str());
    if (same_abs_multiset(p)) p.flag = "trivial";
    return p;
}

Deg6CaseReport deg6_case_residual(long m, long n, long p, long q, long r, long t) {
    using MP = MultiPoly;
    MP a1 = MP::variable("a1"), b1 = MP::variable("b1"), b2 = MP::variable("b2");
    MP a = MP::variable("a"), b = MP::variable("b"), c2 = MP::variable("c2");
    auto C = [](long v) { return MP::constant(Rational(v)); };

    MP a2 = C(m) * a1, a3 = C(n) * a1, a4 = C(p) * a1;
    MP c1 = C(q) * c2, c3 = C(r) * c2, c4 = C(t) * c2;
    std::vector<MP> A = {a1 * a + b1 * b - c1, a3 * a + c3,      a4 * a + c4,
                         a1 * a - b2 * b + c2, a2 * a - b1 * b + c2, a2 * a + b2 * b + c2};
    std::vector<MP> B = {a1 * a + b1 * b + c1, a3 * a - c3,      a4 * a - c4,
                         a1 * a - b2 * b - c2, a2 * a - b1 * b - c2, a2 * a + b2 * b - c2};
    MP res;
    for (const auto& f : A) res += f.pow(6);
    for (const auto& f : B) res -= f.pow(6);

    Deg6CaseReport rep;
    rep.residual = res;

    // the paper's seven displayed factorizations, keyed by (m,n,p,q,r,t)
    struct Case {
        std::array<long, 6> tuple;
        long lead;                    // +-240
        std::array<long, 4> f1, f2;   // coeffs of c2^2, b2^2 b^2, a1 b2 b a, a^2 a1^2
    };
    static const Case cases[] = {
        {{3, 1, -1, -2, -6, 3}, 240, {19, 1, 2, 4}, {21, 1, 2, 6}},
        {{3, 1, -1, -1, -5, 3}, 240, {14, 1, 2, 6}, {-12, 1, 2, 4}},
        {{3, 1, -1, 2, -2, 3}, 240, {5, 1, 2, 6}, {-3, 1, 2, 4}},
        {{3, 1, -1, 3, -3, 1}, 240, {6, 1, 2, 6}, {-4, 1, 2, 4}},
        {{3, 2, -4, 3, 2, 2}, -240, {5, 1, 2, 15}, {3, -1, -2, 5}},
        {{3, 3, -5, 3, 2, 2}, -240, {3, -1, 2, 12}, {5, 1, 2, 22}},
        {{3, 4, -6, 3, 2, 2}, -240, {3, -1, -2, 21}, {5, 1, 2, 31}},
    };
    std::array<long, 6> key = {m, n, p, q, r, t};
    for (const auto& c : cases) {
        if (c.tuple != key) continue;
        rep.listed_case = true;
        auto quad = [&](const std::array<long, 4>& f) {
            return C(f[0]) * c2 * c2 + C(f[1]) * b2 * b2 * b * b + C(f[2]) * a1 * b2 * b * a +
                   C(f[3]) * a * a * a1 * a1;
        };
        rep.display = C(c.lead) * a1 * a * c2 * quad(c.f1) * quad(c.f2);
        if (auto quot = res.divide_exact(rep.display)) {
            rep.divisible = true;
            rep.quotient = std::move(*quot);
        }
        break;
    }
    return rep;
}

// ---- degree 7 ----------------------------------------------------------

std::pair<Rational, Rational> deg7_conditions(const Integer& p, const Integer& q,
                                              const Integer& a, const Integer& b) {
    Rational P{p}, Q{q}, A{a}, B{b};
    Rational cp = Rational(4) * Q * Q - P * P;
    Rational cq = Rational(4) * P * P - Q * Q;
    Rational rc = (cp * B * B + cq * A * A) / Rational(15);
    Rational rd = (cq * B * B + cp * A * A) / Rational(15);
    auto c = rc.sqrt();
    auto d = rd.sqrt();
    if (!c || !d) throw MathError("not representable");
    return {*c, *d};
}

PowerSumPair deg7_piezas(const Integer& p, const Integer& q, const Integer& a, const Integer& b) {
    auto [c, d] = deg7_conditions(p, q, a, b);
    Rational P{p}, Q{q}, A{a}, B{b};
    Rational bp = B * P, aq = A * Q, ap = A * P, bq = B * Q;
    std::vector<Rational> lhs = {c + bp + aq, c - bp - aq, d + ap - bq, d - ap + bq};
    std::vector<Rational> rhs = {c + bp - aq, c - bp + aq, d + ap + bq, d - ap - bq};
    return raw_pair(std::move(lhs), std::move(rhs), {2, 4, 6},
                    "deg7_piezas p=" + p.get_str() + " q=" + q.get_str() + " a=" + a.get_str() +
                        " b=" + b.get_str());
}

PowerSumPair shift_extend(const PowerSumPair& pair, const Rational& t) {
    if (pair.degrees.empty()) throw MathError("shift_extend: empty degree set");
    unsigned top = *pair.degrees.rbegin();
    std::set<unsigned> expected;
    for (unsigned k = 2; k <= top; k += 2) expected.insert(k);
    if (pair.degrees != expected)
        throw MathError("shift_extend: degrees must be exactly {2,4,...,2n}");
    std::string failing;
    for (unsigned k : pair.degrees) {
        if (!power_sum_residual(pair, k).is_zero()) failing += " k=" + std::to_string(k);
    }
    if (!failing.empty()) throw MathError("shift_extend: input invalid at" + failing);

    std::vector<Rational> lhs, rhs;
    for (const auto& v : pair.lhs) lhs.push_back(t + v);
    for (const auto& v : pair.lhs) lhs.push_back(t - v);
    for (const auto& v : pair.rhs) rhs.push_back(t + v);
    for (const auto& v : pair.rhs) rhs.push_back(t - v);
    std::set<unsigned> degrees;
    for (unsigned k = 1; k <= top + 1; ++k) degrees.insert(k);
    return raw_pair(std::move(lhs), std::move(rhs), std::move(degrees),
                    pair.source + " shifted t=" + t.str());
}

PowerSumPair odd_cancel(const PowerSumPair& pair) {
    if (degree_class(pair.degrees) != DegreeClass::all_odd)
        throw MathError("odd_cancel: degree set contains an even k");

    auto cancel_within = [](const std::vector<Rational>& side) {
        std::multiset<Rational> pool(side.begin(), side.end());
        std::vector<Rational> out;
        while (!pool.empty()) {
            Rational v = *pool.begin();
            pool.erase(pool.begin());
            auto mirror = pool.find(-v);
            if (mirror != pool.end() && !(v.is_zero()))
                pool.erase(mirror);
            else
                out.push_back(v);
        }
        return out;
    };
    std::vector<Rational> lhs = cancel_within(pair.lhs);
    std::vector<Rational> rhs = cancel_within(pair.rhs);

    // drop values appearing on both sides, once per occurrence
    std::multiset<Rational> rpool(rhs.begin(), rhs.end());
    std::vector<Rational> lkeep;
    for (const auto& v : lhs) {
        auto it = rpool.find(v);
        if (it != rpool.end())
            rpool.erase(it);
        else
            lkeep.push_back(v);
    }
    PowerSumPair out = pair;
    out.lhs = std::move(lkeep);
    out.rhs.assign(rpool.begin(), rpool.end());
    return out;
}

PowerSumPair deg7_family(const Integer& p, const Integer& q, const Integer& a, const Integer& b) {
    auto [c, d] = deg7_conditions(p, q, a, b);
    PowerSumPair base = deg7_piezas(p, q, a, b);
    PowerSumPair shifted = shift_extend(base, -c);
    shifted.degrees = {1, 3, 5, 7};  // odd sub-grades survive the t = -c specialization
    PowerSumPair out = odd_cancel(shifted);
    out.source = "deg7_family p=" + p.get_str() + " q=" + q.get_str() + " a=" + a.get_str() +
                 " b=" + b.get_str();
    return out;
}

// ---- degree 8 ----------------------------------------------------------

namespace {

// f = P(x) a^2 + Q(x) ab + R(x) b^2
void deg8_pqr(const Rational& x, Rational& P, Rational& Q, Rational& R) {
    P = Rational(8) * x * x + Rational(21) * x - Rational(275);
    Q = Rational(-5) * x * x - Rational(24) * x + Rational(170);
    R = Rational(3) * x - Rational(3);
}

std::pair<Integer, Integer> ratio_to_coprime(const Rational& r) {
    return {r.num(), r.den()};
}

}  // namespace

Rational deg8_condition_f(const Rational& x, const Rational& a, const Rational& b) {
    Rational P, Q, R;
    deg8_pqr(x, P, Q, R);
    return P * a * a + Q * a * b + R * b * b;
}

Rational deg8_discriminant(const Rational& x) {
    return Rational(25) * x.pow(4) + Rational(144) * x.pow(3) - Rational(1280) * x * x -
           Rational(4608) * x + Rational(25600);
}

std::vector<std::pair<Integer, Integer>> deg8_solve_ab(const Rational& x) {
    Rational P, Q, R;
    deg8_pqr(x, P, Q, R);
    Rational disc = Q * Q - Rational(4) * P * R;  // equals deg8_discriminant(x)
    auto sq = disc.sqrt();
    if (!sq) throw MathError("no rational root");
    std::vector<std::pair<Integer, Integer>> out;
    if (P.is_zero()) {
        if (!Q.is_zero()) out.push_back(ratio_to_coprime(-R / Q));
        out.emplace_back(1, 0);  // the projective root b = 0
        return out;
    }
    Rational r1 = (-Q + *sq) / (Rational(2) * P);
    Rational r2 = (-Q - *sq) / (Rational(2) * P);
    out.push_back(ratio_to_coprime(r1));
    if (r2 != r1) out.push_back(ratio_to_coprime(r2));
    return out;
}

void Deg8Triples::validate() const {
    Rational s2 = a1 * a1 + a2 * a2 + a3 * a3 - b1 * b1 - b2 * b2 - b3 * b3;
    if (!s2.is_zero()) throw MathError("Deg8Triples: unequal sums of squares");
    Rational s4 = a1.pow(4) + a2.pow(4) + a3.pow(4) - b1.pow(4) - b2.pow(4) - b3.pow(4);
    if (!s4.is_zero()) throw MathError("Deg8Triples: unequal sums of fourth powers");
}

Deg8Triples deg8_triples(const Rational& x, const Rational& a, const Rational& b) {
    if (!deg8_condition_f(x, a, b).is_zero()) throw MathError("quartic condition fails");
    Rational s1 = Rational(5) * a - Rational(3) * b;
    Rational s2 = Rational(19) * a - Rational(5) * b;
    Deg8Triples tr;
    tr.a1 = a * x + s1;
    tr.a2 = b * x + s2;
    tr.a3 = tr.a2 - Rational(3) * tr.a1;
    tr.b1 = a * x - s2;
    tr.b2 = b * x - s1;
    tr.b3 = (b - Rational(3) * a) * x - s2 + Rational(3) * s1;
    tr.validate();
    return tr;
}

PowerSumPair sinha_lift(const Deg8Triples& tr) {
    tr.validate();
    const Rational &a1 = tr.a1, &a2 = tr.a2, &a3 = tr.a3, &b1 = tr.b1, &b2 = tr.b2, &b3 = tr.b3;
    const Rational two(2);
    std::vector<Rational> A = {two * a1,      two * a2,       b1 + b2 + b3, two * a3,
                               b1 - b2 + b3,  -b1 + b2 + b3,  b1 + b2 - b3};
    std::vector<Rational> B = {a1 - a2 + a3,  -a1 + a2 + a3,  two * b3,     a1 + a2 + a3,
                               two * b1,      two * b2,       a1 + a2 - a3};
    return raw_pair(std::move(A), std::move(B), {8}, "sinha_lift");
}

PowerSumPair deg8_family(const Rational& x, const Rational& a, const Rational& b) {
    PowerSumPair lifted = sinha_lift(deg8_triples(x, a, b));
    if (lifted.lhs[0] + lifted.rhs[0] != Rational(0))
        throw MathError("deg8_family: A1 + B1 != 0");
    lifted.lhs.erase(lifted.lhs.begin());
    lifted.rhs.erase(lifted.rhs.begin());
    lifted.source = "deg8_family x=" + x.str() + " a=" + a.str() + " b=" + b.str();
    return canonicalize(lifted);
}

// ---- degree 9 ----------------------------------------------------------

namespace {

std::vector<Rational> deg9_x_forms(const Deg9Params& pr) {
    const Rational &a = pr.a, &b = pr.b, &t = pr.t, &m = pr.m, &n = pr.n, &w = pr.w;
    const Rational two(2);
    return {
        two * (a + b) * m + (a - b + t) * n + w,
        -two * a * m + (a + b + t) * n + w,
        -two * b * m - (a + b - t) * n + w,
        -two * (a + b) * m + (a - b + t) * n - w,
        two * a * m + (a + b + t) * n - w,
        two * b * m - (a + b - t) * n - w,
    };
}

}  // namespace

PowerSumPair deg9_forms(const Deg9Params& pr) {
    std::vector<Rational> xs = deg9_x_forms(pr);
    Deg9Params mirror = pr;
    mirror.w = -pr.w;
    std::vector<Rational> ys = deg9_x_forms(mirror);
    PowerSumPair p = raw_pair(std::move(xs), std::move(ys), {1, 2, 3},
                              "deg9_forms a=" + pr.a.str() + " b=" + pr.b.str() + " t=" +
                                  pr.t.str() + " m=" + pr.m.str() + " n=" + pr.n.str() +
                                  " w=" + pr.w.str());
    if (power_sum_residual(p, 9).is_zero()) p.degrees.insert(9);
    return p;
}

std::pair<Rational, Rational> deg9_condition(const Rational& a, const Rational& b,
                                             const Rational& t) {
    Rational coef_n2 = Rational(-14) * b * t * t - Rational(7) * b * a * t + a.pow(3) +
                       Rational(2) * a * b * b + Rational(14) * a * t * t -
                       Rational(2) * a * a * b - b.pow(3) + Rational(7) * a * a * t +
                       Rational(7) * b * b * t + Rational(14) * t.pow(3);
    Rational coef_m2 = Rational(-4) * a * b * b - Rational(5) * b.pow(3) +
                       Rational(4) * a * a * b + Rational(5) * a.pow(3) +
                       Rational(7) * b * b * t + Rational(7) * a * a * t +
                       Rational(7) * b * a * t;
    return {coef_n2, coef_m2};
}

std::array<Rational, 5> deg9_quartic_rhs(const Rational& a, const Rational& b) {
    Rational a2 = a * a, b2 = b * b, ab = a * b;
    return {
        Rational(-98) * (a2 + ab + b2),
        Rational(56) * a * b2 - Rational(56) * a2 * b + Rational(168) * b.pow(3) -
            Rational(168) * a.pow(3),
        Rational(63) * a2 * b2 - Rational(119) * a.pow(4) + Rational(14) * a * b.pow(3) -
            Rational(119) * b.pow(4) + Rational(14) * a.pow(3) * b,
        Rational(14) * a.pow(3) * b2 - Rational(14) * a2 * b.pow(3) - Rational(42) * a.pow(5) +
            Rational(42) * b.pow(5) - Rational(14) * a * b.pow(4) + Rational(14) * a.pow(4) * b,
        Rational(6) * a * b.pow(5) + Rational(6) * a.pow(5) * b - Rational(5) * a.pow(6) +
            Rational(2) * a.pow(4) * b2 - Rational(5) * b.pow(6) -
            Rational(6) * a.pow(3) * b.pow(3) + Rational(2) * a2 * b.pow(4),
    };
}

std::pair<Integer, Integer> deg9_solve_mn(const Rational& a, const Rational& b,
                                          const Rational& t) {
    auto [cn2, cm2] = deg9_condition(a, b, t);
    if (cm2.is_zero()) {
        if (cn2.is_zero()) return {1, 1};  // condition vacuous
        return {1, 0};                     // need n = 0
    }
    if (cn2.is_zero()) return {0, 1};
    auto s = (-(cn2 * cm2)).sqrt();
    if (!s) throw MathError("no rational (m:n)");
    Rational ratio = cn2 / *s;  // m : n
    return {ratio.num(), ratio.den()};
}

Rational Deg9WResidual::eval(const Rational& w) const {
    return c1 * w + c3 * w.pow(3) + c5 * w.pow(5);
}

std::string Deg9WResidual::str() const {
    std::ostringstream os;
    os << "(" << c5.str() << ")*w^5 + (" << c3.str() << ")*w^3 + (" << c1.str() << ")*w";
    return os.str();
}

Deg9WResidual deg9_w_residual(const Rational& a, const Rational& b, const Rational& t,
                              const Rational& m, const Rational& n) {
    // expand sum x_i(w)^9 - sum x_i(-w)^9 symbolically in w
    using MP = MultiPoly;
    MP w = MP::variable("w");
    Deg9Params pr{a, b, t, m, n, Rational(0)};
    std::vector<Rational> lin = deg9_x_forms(pr);  // w = 0 gives the linear parts
    std::array<int, 6> wsign = {1, 1, 1, -1, -1, -1};
    MP res;
    for (size_t i = 0; i < 6; ++i) {
        MP xi = MP::constant(lin[i]) + Rational(wsign[i]) * w;
        MP yi = MP::constant(lin[i]) - Rational(wsign[i]) * w;
        res += xi.pow(9) - yi.pow(9);
    }
    Deg9WResidual out;
    out.c1 = res.coefficient("w", 1).constant_value();
    out.c3 = res.coefficient("w", 3).constant_value();
    out.c5 = res.coefficient("w", 5).constant_value();
    for (unsigned e : {0u, 2u, 4u, 6u, 7u, 8u, 9u}) {
        if (!res.coefficient("w", e).is_zero())
            throw MathError("deg9_w_residual: unexpected w^" + std::to_string(e) + " term");
    }
    return out;
}

std::vector<Rational> deg9_admissible_w(const Rational& a, const Rational& b, const Rational& t,
                                        const Rational& m, const Rational& n) {
    Deg9WResidual R = deg9_w_residual(a, b, t, m, n);
    std::vector<Rational> out;
    auto push_if_square = [&out](const Rational& w2) {
        if (w2.sign() <= 0) return;
        if (auto w = w2.sqrt()) out.push_back(*w);
    };
    if (R.c5.is_zero()) {
        if (!R.c3.is_zero()) push_if_square(-R.c1 / R.c3);
        std::sort(out.begin(), out.end());
        return out;
    }
    Rational disc = R.c3 * R.c3 - Rational(4) * R.c5 * R.c1;
    auto sd = disc.sqrt();
    if (!sd) return out;
    push_if_square((-R.c3 + *sd) / (Rational(2) * R.c5));
    push_if_square((-R.c3 - *sd) / (Rational(2) * R.c5));
    std::sort(out.begin(), out.end());
    return out;
}

PowerSumPair deg9_family(const Rational& a, const Rational& b, const Rational& t,
                         std::optional<Rational> w) {
    auto [m, n] = deg9_solve_mn(a, b, t);
    Rational mr{m}, nr{n};
    Rational wv;
    if (w) {
        wv = *w;
        if (wv.is_zero()) throw MathError("deg9_family: w = 0 gives the trivial pair");
        Deg9WResidual R = deg9_w_residual(a, b, t, mr, nr);
        if (!R.eval(wv).is_zero())
            throw MathError("w not admissible; k=9 residual " + R.str() + " at w=" + wv.str() +
                            " is " + R.eval(wv).str());
    } else {
        auto ws = deg9_admissible_w(a, b, t, mr, nr);
        if (ws.empty()) throw MathError("deg9_family: no admissible rational w");
        wv = ws.front();
    }
    PowerSumPair p = deg9_forms(Deg9Params{a, b, t, mr, nr, wv});
    if (p.degrees.count(9) == 0) throw MathError("deg9_family: k=9 residual nonzero");
    VerifyReport rep = verify_pair(p);
    if (!rep.pass) throw MathError("deg9_family: verification failed");
    p.source = "deg9_family a=" + a.str() + " b=" + b.str() + " t=" + t.str() + " w=" + wv.str();
    return canonicalize(p);
}

}  // namespace powersum::families
