#include "powersum/elliptic.hpp"

namespace powersum::elliptic {

Rational WeierstrassCurve::b2() const { return a1 * a1 + Rational(4) * a2; }
Rational WeierstrassCurve::b4() const { return Rational(2) * a4 + a1 * a3; }
Rational WeierstrassCurve::b6() const { return a3 * a3 + Rational(4) * a6; }
Rational WeierstrassCurve::b8() const {
    return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rational WeierstrassCurve::c4() const { return b2() * b2() - Rational(24) * b4(); }
Rational WeierstrassCurve::c6() const {
    return -b2().pow(3) + Rational(36) * b2() * b4() - Rational(216) * b6();
}
Rational WeierstrassCurve::discriminant() const {
    Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - Rational(8) * B4.pow(3) - Rational(27) * B6 * B6 +
           Rational(9) * B2 * B4 * B6;
}

bool on_curve(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.infinity) return true;
    Rational lhs = p.y * p.y + c.a1 * p.x * p.y + c.a3 * p.y;
    Rational rhs = p.x.pow(3) + c.a2 * p.x * p.x + c.a4 * p.x + c.a6;
    return lhs == rhs;
}

CurvePoint point_negate(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint(p.x, -p.y - c.a1 * p.x - c.a3);
}

CurvePoint point_add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    if (!on_curve(c, p) || !on_curve(c, q)) throw MathError("point_add: input off curve");
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rational lambda;
    if (p.x == q.x) {
        if (q.y == -p.y - c.a1 * p.x - c.a3) return CurvePoint::at_infinity();
        lambda = (Rational(3) * p.x * p.x + Rational(2) * c.a2 * p.x + c.a4 - c.a1 * p.y) /
                 (Rational(2) * p.y + c.a1 * p.x + c.a3);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Rational nu = p.y - lambda * p.x;
    Rational x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
    Rational y3 = -(lambda + c.a1) * x3 - nu - c.a3;
    return CurvePoint(x3, y3);
}

CurvePoint point_double(const WeierstrassCurve& c, const CurvePoint& p) {
    return point_add(c, p, p);
}

CurvePoint scalar_mul(const WeierstrassCurve& c, const Integer& k, const CurvePoint& p) {
    Integer n = k;
    CurvePoint base = p;
    if (n < 0) {
        base = point_negate(c, base);
        n = -n;
    }
    CurvePoint acc = CurvePoint::at_infinity();
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = point_add(c, acc, base);
        n >>= 1;
        if (n > 0) base = point_double(c, base);
    }
    return acc;
}

bool integrality_check(const CurvePoint& p) {
    if (p.infinity) return false;
    return p.x.is_integer() && p.y.is_integer();
}

Rational QuarticModel::eval(const Rational& u) const {
    return c4 * u.pow(4) + c3 * u.pow(3) + c2 * u * u + c1 * u + c0;
}

bool on_model(const QuarticModel& m, const QuarticPoint& p) { return p.v * p.v == m.eval(p.u); }

// ---- degree 8 fixed maps -------------------------------------------------

WeierstrassCurve deg8_curve() { return {Rational(0), Rational(1), Rational(0), Rational(-920), Rational(10404)}; }

QuarticModel deg8_model() {
    return {Rational(25), Rational(144), Rational(-1280), Rational(-4608), Rational(25600)};
}

QuarticPoint deg8_weier_to_quartic_raw(const Rational& X, const Rational& Y) {
    Rational den = Rational(5) * Y + Rational(9) * X - Rational(162);
    if (den.is_zero()) throw ExceptionalPoint("exceptional point: 5Y + 9X - 162 = 0",
                                              CurvePoint(X, Y));
    Rational U = (Rational(200) * X - Rational(3248)) / den;
    Rational V = (Rational(25344) * Y - Rational(194880) * X * X + Rational(3550080) * X -
                  Rational(23468800) + Rational(4000) * X.pow(3)) /
                 (den * den);
    return {U, V};
}

QuarticPoint deg8_weier_to_quartic(const Rational& X, const Rational& Y) {
    QuarticPoint p = deg8_weier_to_quartic_raw(X, Y);
    // designated pairing on the exceptional fiber U = 0 (paper: Q <-> (0, 160))
    if (p.u.is_zero()) return {Rational(0), Rational(160)};
    return p;
}

CurvePoint deg8_quartic_to_weier(const Rational& U, const Rational& V) {
    if (U.is_zero())
        throw ExceptionalPoint(
            "exceptional point; use the paper's designated image (406/25, -396/125)");
    Rational X = (Rational(5) * V + Rational(800) - Rational(72) * U - Rational(7) * U * U) /
                 (U * U);
    Rational Y = (Rational(200) * V + Rational(32000) - Rational(4320) * U -
                  Rational(800) * U * U - Rational(9) * V * U + Rational(45) * U.pow(3)) /
                 U.pow(3);
    return CurvePoint(X, Y);
}

QuarticBridge deg8_paper_bridge() {
    QuarticBridge b;
    b.curve = deg8_curve();
    b.to_curve = [](const QuarticPoint& p) -> CurvePoint {
        if (p.u.is_zero())  // designated image of the U = 0 fiber
            return CurvePoint(Rational(406, 25), Rational(-396, 125));
        return deg8_quartic_to_weier(p.u, p.v);
    };
    b.to_quartic = [](const CurvePoint& p) -> QuarticPoint {
        if (p.infinity) throw ExceptionalPoint("deg8 bridge: origin has no affine image", p);
        return deg8_weier_to_quartic(p.x, p.y);
    };
    return b;
}

// ---- generic bridge ------------------------------------------------------

MordellBridge::MordellBridge(const QuarticModel& model, const QuarticPoint& marked)
    : model_(model), marked_(marked) {
    if (marked.v.is_zero()) throw MathError("MordellBridge: marked point must have v != 0");
    if (!on_model(model, marked)) throw MathError("MordellBridge: marked point off model");
    const Rational& u0 = marked.u;
    t4_ = model.c4;
    t3_ = Rational(4) * model.c4 * u0 + model.c3;
    t2_ = Rational(6) * model.c4 * u0 * u0 + Rational(3) * model.c3 * u0 + model.c2;
    t1_ = Rational(4) * model.c4 * u0.pow(3) + Rational(3) * model.c3 * u0 * u0 +
          Rational(2) * model.c2 * u0 + model.c1;
    q_ = -marked.v;
    Rational q2 = q_ * q_;
    curve_ = WeierstrassCurve{t1_ / q_, t2_ - t1_ * t1_ / (Rational(4) * q2),
                              Rational(2) * q_ * t3_, Rational(-4) * q2 * t4_,
                              t4_ * (t1_ * t1_ - Rational(4) * q2 * t2_)};
    x0_ = t1_ * t1_ / (Rational(4) * q2) - t2_;
    y0_ = -(t1_.pow(3) - Rational(4) * q2 * t1_ * t2_ + Rational(8) * q2 * q2 * t3_) /
          (Rational(4) * q_.pow(3));
    // second point of the x0 fiber: z* = (2 x0 t1 + 4 q^2 t3)/(x0^2 - 4 q^2 t4)
    Rational zden = x0_ * x0_ - Rational(4) * q2 * t4_;
    if (zden.is_zero()) throw MathError("MordellBridge: degenerate x0 fiber");
    Rational zs = (Rational(2) * x0_ * t1_ + Rational(4) * q2 * t3_) / zden;
    Rational vs = (x0_ * zs * zs - t1_ * zs) / (Rational(2) * q_) - q_;
    partner_ = {u0 + zs, vs};
}

CurvePoint MordellBridge::to_curve(const QuarticPoint& p) const {
    if (!on_model(model_, p)) throw MathError("MordellBridge: point off model");
    Rational z = p.u - marked_.u;
    if (z.is_zero()) {
        if (p.v == q_) return CurvePoint::at_infinity();
        return CurvePoint(x0_, y0_);
    }
    Rational x = (Rational(2) * q_ * (p.v + q_) + t1_ * z) / (z * z);
    Rational y = (Rational(4) * q_ * q_ * (p.v + q_) + Rational(2) * q_ * (t2_ * z * z + t1_ * z) -
                  t1_ * t1_ * z * z / (Rational(2) * q_)) /
                 z.pow(3);
    return CurvePoint(x, y);
}

QuarticPoint MordellBridge::to_quartic(const CurvePoint& p) const {
    if (p.infinity) return {marked_.u, q_};
    if (!on_curve(curve_, p)) throw MathError("MordellBridge: point off curve");
    Rational znum = Rational(4) * q_ * q_ * (p.x + t2_) - t1_ * t1_;
    if (znum.is_zero()) {
        // the x0 fiber: the marked image and its partner
        if (p.y == y0_) return marked_;
        return partner_;
    }
    if (p.y.is_zero())
        throw ExceptionalPoint("MordellBridge: image at quartic infinity", p);
    Rational z = znum / (Rational(2) * q_ * p.y);
    Rational v = (p.x * z * z - t1_ * z) / (Rational(2) * q_) - q_;
    return {marked_.u + z, v};
}

QuarticBridge MordellBridge::bridge() const {
    QuarticBridge b;
    b.curve = curve_;
    MordellBridge self = *this;
    b.to_curve = [self](const QuarticPoint& p) { return self.to_curve(p); };
    b.to_quartic = [self](const CurvePoint& p) { return self.to_quartic(p); };
    return b;
}

QuarticPoint quartic_double(const QuarticModel& model, const QuarticPoint& pt,
                            const QuarticBridge& bridge) {
    if (!on_model(model, pt)) throw MathError("quartic_double: point off model");
    CurvePoint w = bridge.to_curve(pt);
    QuarticPoint out = bridge.to_quartic(point_double(bridge.curve, w));
    if (!on_model(model, out)) throw MathError("quartic_double: image off model");
    return out;
}

std::vector<QuarticPoint> generate_parameters(const QuarticModel& model, const QuarticPoint& base,
                                              unsigned count, const QuarticBridge& bridge) {
    std::vector<QuarticPoint> out;
    if (count == 0) return out;
    CurvePoint w = bridge.to_curve(base);
    CurvePoint step = point_double(bridge.curve, w);
    CurvePoint acc = CurvePoint::at_infinity();
    for (unsigned i = 1; i <= count; ++i) {
        acc = point_add(bridge.curve, acc, step);  // acc = 2i * w
        try {
            QuarticPoint p = bridge.to_quartic(acc);
            if (!on_model(model, p)) throw MathError("generate_parameters: image off model");
            out.push_back(p);
        } catch (const ExceptionalPoint&) {
            // skip to the next multiple
        }
    }
    return out;
}

// ---- isomorphisms --------------------------------------------------------

std::optional<WeierstrassIso> find_isomorphism(const WeierstrassCurve& from,
                                               const WeierstrassCurve& to) {
    Rational c4f = from.c4(), c6f = from.c6();
    Rational c4t = to.c4(), c6t = to.c6();
    std::vector<Rational> candidates;
    if (!c4f.is_zero() && !c6f.is_zero()) {
        if (c4t.is_zero() || c6t.is_zero()) return std::nullopt;
        // u^4 = c4f/c4t, u^6 = c6f/c6t  =>  u^2 = (c6f/c6t)/(c4f/c4t)
        Rational u2 = (c6f / c6t) / (c4f / c4t);
        if (u2.sign() <= 0) return std::nullopt;
        auto u = u2.sqrt();
        if (!u) return std::nullopt;
        if ((c4f / c4t) != u2 * u2 || (c6f / c6t) != u2.pow(3)) return std::nullopt;
        candidates = {*u, -*u};
    } else if (c4f.is_zero() && c4t.is_zero() && !c6f.is_zero() && !c6t.is_zero()) {
        // u^6 = c6f/c6t; try square u^2 candidates (rational cube root)
        Rational r = c6f / c6t;
        if (r.sign() <= 0) return std::nullopt;
        Integer n = r.num(), d = r.den();
        Integer nr, dr;
        if (mpz_root(nr.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
        if (mpz_root(dr.get_mpz_t(), d.get_mpz_t(), 3) == 0) return std::nullopt;
        auto u = Rational(nr, dr).sqrt();
        if (!u) return std::nullopt;
        candidates = {*u, -*u};
    } else {
        return std::nullopt;  // c4 = 0 on one side only, or c6 degenerate
    }

    for (const Rational& u : candidates) {
        WeierstrassIso iso;
        iso.u = u;
        iso.s = (u * to.a1 - from.a1) / Rational(2);
        iso.r = (u * u * to.a2 - from.a2 + iso.s * from.a1 + iso.s * iso.s) / Rational(3);
        iso.t = (u.pow(3) * to.a3 - from.a3 - iso.r * from.a1) / Rational(2);
        bool ok4 = u.pow(4) * to.a4 == from.a4 - iso.s * from.a3 + Rational(2) * iso.r * from.a2 -
                                           (iso.t + iso.r * iso.s) * from.a1 +
                                           Rational(3) * iso.r * iso.r -
                                           Rational(2) * iso.s * iso.t;
        bool ok6 = u.pow(6) * to.a6 ==
                   from.a6 + iso.r * from.a4 + iso.r * iso.r * from.a2 + iso.r.pow(3) -
                       iso.t * from.a3 - iso.t * iso.t - iso.r * iso.t * from.a1;
        if (ok4 && ok6) return iso;
    }
    return std::nullopt;
}

CurvePoint apply_isomorphism(const WeierstrassIso& iso, const CurvePoint& p) {
    if (p.infinity) return p;
    Rational xp = (p.x - iso.r) / (iso.u * iso.u);
    Rational yp = (p.y - iso.s * (p.x - iso.r) - iso.t) / iso.u.pow(3);
    return CurvePoint(xp, yp);
}

// ---- degree 9 objects ----------------------------------------------------

WeierstrassCurve deg9_curve() {
    return {Rational(1), Rational(0), Rational(1), Rational(-7166374),
            Rational(Integer("-22875861928"))};
}

QuarticModel deg9_model() {
    return {Rational(-3626), Rational(6888), Rational(-26831), Rational(24570), Rational(-3029)};
}

QuarticPoint deg9_base_point() {
    return {Rational(27, 41), Rational(Integer(-3647360), Integer(68921))};
}

QuarticPoint deg9_root_point() { return {Rational(233, 259), Rational(0)}; }

CurvePoint deg9_paper_point() {
    return CurvePoint(Rational(Integer(1026337), Integer(64)),
                      Rational(Integer("-1026359837"), Integer(512)));
}

}  // namespace powersum::elliptic
