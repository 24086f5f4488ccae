#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum::elliptic {

// Affine rational point or the point at infinity.
struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    CurvePoint() = default;
    CurvePoint(Rational px, Rational py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static CurvePoint at_infinity() { return CurvePoint(); }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

// Long Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const;
    Rational b4() const;
    Rational b6() const;
    Rational b8() const;
    Rational c4() const;
    Rational c6() const;
    Rational discriminant() const;
};

bool on_curve(const WeierstrassCurve& c, const CurvePoint& p);
CurvePoint point_negate(const WeierstrassCurve& c, const CurvePoint& p);
CurvePoint point_add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_double(const WeierstrassCurve& c, const CurvePoint& p);
CurvePoint scalar_mul(const WeierstrassCurve& c, const Integer& k, const CurvePoint& p);

// True iff both coordinates are integers. Non-integral multiples are
// computational evidence of infinite order (Nagell-Lutz), not a proof.
bool integrality_check(const CurvePoint& p);

// v^2 = c4 u^4 + c3 u^3 + c2 u^2 + c1 u + c0.
struct QuarticModel {
    Rational c4, c3, c2, c1, c0;
    Rational eval(const Rational& u) const;
};

struct QuarticPoint {
    Rational u, v;
    friend bool operator==(const QuarticPoint& a, const QuarticPoint& b) {
        return a.u == b.u && a.v == b.v;
    }
};

bool on_model(const QuarticModel& m, const QuarticPoint& p);

// A map hit a point where its rational formulas degenerate; carries the
// Weierstrass point when the quartic image does not exist (so the caller
// can continue on the curve side).
struct ExceptionalPoint : MathError {
    std::optional<CurvePoint> curve_point;
    explicit ExceptionalPoint(const std::string& msg,
                              std::optional<CurvePoint> pt = std::nullopt)
        : MathError(msg), curve_point(std::move(pt)) {}
};

// Birational correspondence between a quartic model and a Weierstrass curve.
struct QuarticBridge {
    WeierstrassCurve curve;
    std::function<CurvePoint(const QuarticPoint&)> to_curve;
    std::function<QuarticPoint(const CurvePoint&)> to_quartic;
};

// ---- the paper's fixed degree-8 objects --------------------------------

WeierstrassCurve deg8_curve();  // Y^2 = X^3 + X^2 - 920 X + 10404
QuarticModel deg8_model();      // V^2 = 25U^4 + 144U^3 - 1280U^2 - 4608U + 25600

// Map (5). On the exceptional fiber U = 0 the designated image (0, 160)
// is returned (the raw formula lands on its v-mirror there).
QuarticPoint deg8_weier_to_quartic(const Rational& X, const Rational& Y);
// Same formula without the fiber designation (exposed for the erratum audit).
QuarticPoint deg8_weier_to_quartic_raw(const Rational& X, const Rational& Y);

// Map (6); U = 0 throws ("use the designated image (406/25, -396/125)").
CurvePoint deg8_quartic_to_weier(const Rational& U, const Rational& V);

// Bridge assembled from the paper's maps with the designated images.
QuarticBridge deg8_paper_bridge();

// ---- generic quartic <-> Weierstrass bridge ----------------------------

// Classical construction from a marked rational point (u0, v0), v0 != 0:
// translate the marked point to z = 0, take q = -v0, and map
//   x = (2q(v+q) + t1 z)/z^2,
//   y = (4q^2(v+q) + 2q(t2 z^2 + t1 z) - t1^2 z^2/(2q))/z^3
// onto  y^2 + (t1/q) xy + 2q t3 y = x^3 + (t2 - t1^2/(4q^2)) x^2
//        - 4q^2 t4 x + t4 (t1^2 - 4q^2 t2),
// where p(z + u0) = t4 z^4 + t3 z^3 + t2 z^2 + t1 z + q^2.
// The marked point maps to a finite designated point and its v-mirror to
// the curve origin.
class MordellBridge {
  public:
    MordellBridge(const QuarticModel& model, const QuarticPoint& marked);

    const WeierstrassCurve& curve() const { return curve_; }
    const QuarticPoint& marked() const { return marked_; }
    CurvePoint marked_image() const { return CurvePoint(x0_, y0_); }

    CurvePoint to_curve(const QuarticPoint& p) const;
    QuarticPoint to_quartic(const CurvePoint& p) const;
    QuarticBridge bridge() const;

  private:
    QuarticModel model_;
    QuarticPoint marked_;
    Rational q_, t1_, t2_, t3_, t4_;
    Rational x0_, y0_;           // designated image of the marked point
    QuarticPoint partner_;       // designated image of the second x0-fiber point
    WeierstrassCurve curve_;
};

// Image of doubling through the bridge.
QuarticPoint quartic_double(const QuarticModel& model, const QuarticPoint& pt,
                            const QuarticBridge& bridge);

// Successive even multiples 2P, 4P, ... of the base through the bridge;
// exceptional multiples are skipped.
std::vector<QuarticPoint> generate_parameters(const QuarticModel& model,
                                              const QuarticPoint& base, unsigned count,
                                              const QuarticBridge& bridge);

// ---- Weierstrass model isomorphisms -------------------------------------

// (x, y) = (u^2 x' + r,  u^3 y' + s u^2 x' + t) identifies `from` with `to`.
struct WeierstrassIso {
    Rational u, r, s, t;
};

std::optional<WeierstrassIso> find_isomorphism(const WeierstrassCurve& from,
                                               const WeierstrassCurve& to);
CurvePoint apply_isomorphism(const WeierstrassIso& iso, const CurvePoint& p);  // from -> to

// ---- the paper's degree-9 objects ---------------------------------------

// Resolved constant term: V^2 + UV + V = U^3 - 7166374 U - 22875861928.
WeierstrassCurve deg9_curve();
// s^2 = -3626 t^4 + 6888 t^3 - 26831 t^2 + 24570 t - 3029 (a, b) = (3, 4).
QuarticModel deg9_model();
// The computer-search solution t = 27/41 as a model point (v = -3647360/68921,
// the anchoring that reproduces the paper's (t, s) pair for P exactly).
QuarticPoint deg9_base_point();
// The rational root of the quartic, (233/259, 0); corresponds to -P.
QuarticPoint deg9_root_point();
// Paper's P = (1026337/64, -1026359837/512).
CurvePoint deg9_paper_point();

}  // namespace powersum::elliptic
