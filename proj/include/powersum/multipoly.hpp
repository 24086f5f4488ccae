#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

// Sparse multivariate polynomial over Rational. Variables are kept as a
// sorted list of names; exponent vectors always have the same arity as the
// variable list and no stored coefficient is zero. Operands with different
// variable universes are aligned by union before combining.
class MultiPoly {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the value if is_constant()).
    Rational constant_value() const;
    long total_degree() const;
    long degree_in(const std::string& var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    MultiPoly pow(long e) const;  // e < 0 -> MathError

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    // Exact substitution followed by expansion; unbound symbols remain.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
    MultiPoly substitute_values(const std::map<std::string, Rational>& bindings) const;
    // Every variable must be bound.
    Rational evaluate(const std::map<std::string, Rational>& bindings) const;

    // Quotient if divisor divides exactly, otherwise nullopt. Uses single-
    // divisor reduction in lexicographic order, which decides divisibility.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    // Coefficient of var^power, as a polynomial without var.
    MultiPoly coefficient(const std::string& var, unsigned power) const;

    std::string str() const;

  private:
    void insert_term(const Exponents& e, const Rational& c);
    static void align(MultiPoly& a, MultiPoly& b);
    MultiPoly remapped(const std::vector<std::string>& new_vars) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace powersum
