#include "powersum/rational.hpp"

namespace powersum {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_perfect_square(const Integer& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt_exact(const Integer& n) {
    if (!is_perfect_square(n)) throw MathError("isqrt_exact: not a perfect square");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw MathError("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw MathError("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (is_zero()) throw MathError("Rational: 0 to a negative power");
        Rational inv(den(), num());
        return inv.pow(-e);
    }
    Rational r(ipow(num(), static_cast<unsigned long>(e)),
               ipow(den(), static_cast<unsigned long>(e)));
    return r;
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (!is_perfect_square(num()) || !is_perfect_square(den())) return std::nullopt;
    return Rational(isqrt_exact(num()), isqrt_exact(den()));
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace powersum
