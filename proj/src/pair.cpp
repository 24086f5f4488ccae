#include "powersum/pair.hpp"

#include <algorithm>

namespace powersum {

DegreeClass degree_class(const std::set<unsigned>& degrees) {
    bool any_even = false, any_odd = false;
    for (unsigned k : degrees) ((k % 2 == 0) ? any_even : any_odd) = true;
    if (any_even && any_odd) return DegreeClass::mixed;
    if (any_odd) return DegreeClass::all_odd;
    return DegreeClass::all_even;
}

Rational power_sum_residual(const PowerSumPair& pair, unsigned k) {
    Rational acc(0);
    for (const auto& v : pair.lhs) acc += v.pow(static_cast<long>(k));
    for (const auto& v : pair.rhs) acc -= v.pow(static_cast<long>(k));
    return acc;
}

VerifyReport verify_pair(const PowerSumPair& pair) {
    VerifyReport rep;
    rep.pass = true;
    for (unsigned k : pair.degrees) {
        Rational r = power_sum_residual(pair, k);
        if (!r.is_zero()) rep.pass = false;
        rep.residuals.emplace(k, std::move(r));
    }
    return rep;
}

bool canonical_entry_precedes(const Rational& a, const Rational& b) {
    Rational aa = a.abs(), ba = b.abs();
    if (aa != ba) return aa > ba;
    return a > b;  // equal magnitude: positive entry first
}

namespace {

// lexicographic side comparison under canonical entry precedence;
// a strict prefix follows the longer side
bool side_lex_precedes(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return canonical_entry_precedes(a[i], b[i]);
    }
    return a.size() > b.size();
}

}  // namespace

PowerSumPair canonicalize(const PowerSumPair& pair) {
    PowerSumPair out = pair;

    // (1) clear denominators by the collective lcm (scales both sides alike)
    Integer den(1);
    for (const auto& v : out.lhs) den = lcm(den, v.den());
    for (const auto& v : out.rhs) den = lcm(den, v.den());
    if (den != 1) {
        Rational scale{den};
        for (auto& v : out.lhs) v *= scale;
        for (auto& v : out.rhs) v *= scale;
    }

    // (2) drop zero entries
    auto drop_zeros = [](std::vector<Rational>& side) {
        side.erase(std::remove_if(side.begin(), side.end(),
                                  [](const Rational& v) { return v.is_zero(); }),
                   side.end());
    };
    drop_zeros(out.lhs);
    drop_zeros(out.rhs);

    // (3) divide by the collective gcd
    Integer g(0);
    for (const auto& v : out.lhs) g = gcd(g, v.num());
    for (const auto& v : out.rhs) g = gcd(g, v.num());
    if (g > 1) {
        Rational inv(Integer(1), g);
        for (auto& v : out.lhs) v *= inv;
        for (auto& v : out.rhs) v *= inv;
    }

    // (4)-(6) sign normalization per degree class
    switch (degree_class(out.degrees)) {
        case DegreeClass::all_even:
            for (auto& v : out.lhs) v = v.abs();
            for (auto& v : out.rhs) v = v.abs();
            break;
        case DegreeClass::all_odd: {
            std::vector<Rational> nl, nr;
            for (const auto& v : out.lhs) (v.sign() > 0 ? nl : nr).push_back(v.abs());
            for (const auto& v : out.rhs) (v.sign() > 0 ? nr : nl).push_back(v.abs());
            out.lhs = std::move(nl);
            out.rhs = std::move(nr);
            break;
        }
        case DegreeClass::mixed: {
            // negate everything iff no maximal-magnitude entry is positive
            Rational maxabs(0);
            bool max_positive = false;
            auto scan = [&](const std::vector<Rational>& side) {
                for (const auto& v : side) {
                    Rational a = v.abs();
                    if (a > maxabs) {
                        maxabs = a;
                        max_positive = v.sign() > 0;
                    } else if (a == maxabs && v.sign() > 0) {
                        max_positive = true;
                    }
                }
            };
            scan(out.lhs);
            scan(out.rhs);
            if (!maxabs.is_zero() && !max_positive) {
                for (auto& v : out.lhs) v = -v;
                for (auto& v : out.rhs) v = -v;
            }
            break;
        }
    }

    // (7) sort each side
    std::sort(out.lhs.begin(), out.lhs.end(), canonical_entry_precedes);
    std::sort(out.rhs.begin(), out.rhs.end(), canonical_entry_precedes);

    // (8) side order
    if (side_lex_precedes(out.rhs, out.lhs)) std::swap(out.lhs, out.rhs);

    return out;
}

bool canonical_equal(const PowerSumPair& a, const PowerSumPair& b) {
    PowerSumPair ca = canonicalize(a), cb = canonicalize(b);
    return ca.degrees == cb.degrees && ca.lhs == cb.lhs && ca.rhs == cb.rhs;
}

bool pair_less(const PowerSumPair& a, const PowerSumPair& b) {
    auto cmp_side = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_side(a.lhs, b.lhs);
    if (c != 0) return c < 0;
    c = cmp_side(a.rhs, b.rhs);
    if (c != 0) return c < 0;
    return a.degrees < b.degrees;
}

PowerSumPair make_pair_int(const std::vector<long>& lhs, const std::vector<long>& rhs,
                           const std::set<unsigned>& degrees, const std::string& source) {
    PowerSumPair p;
    for (long v : lhs) p.lhs.emplace_back(v);
    for (long v : rhs) p.rhs.emplace_back(v);
    p.degrees = degrees;
    p.source = source;
    return p;
}

}  // namespace powersum
