#include "powersum/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace powersum {

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = Rational(1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw MathError("MultiPoly: not a constant");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (unsigned x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

long MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
    return d;
}

void MultiPoly::insert_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::remapped(const std::vector<std::string>& new_vars) const {
    MultiPoly out;
    out.vars_ = new_vars;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = static_cast<size_t>(it - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_[ne] = c;
    }
    return out;
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> merged;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged));
    if (merged != a.vars_) a = a.remapped(merged);
    if (merged != b.vars_) b = b.remapped(merged);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    MultiPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly lhs = a, rhs = b;
    MultiPoly::align(lhs, rhs);
    MultiPoly out;
    out.vars_ = lhs.vars_;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out;
    if (c.is_zero()) return out;
    out.vars_ = p.vars_;
    for (const auto& [e, pc] : p.terms_) out.terms_[e] = c * pc;
    return out;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw MathError("MultiPoly: negative exponent");
    MultiPoly result = constant(Rational(1));
    MultiPoly base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly lhs = a, rhs = b;
    MultiPoly::align(lhs, rhs);
    return lhs.terms_ == rhs.terms_;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(vars_[i]);
            MultiPoly base = (it != bindings.end()) ? it->second : variable(vars_[i]);
            term = term * base.pow(static_cast<long>(e[i]));
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::substitute_values(const std::map<std::string, Rational>& bindings) const {
    std::map<std::string, MultiPoly> polys;
    for (const auto& [k, v] : bindings) polys.emplace(k, constant(v));
    return substitute(polys);
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
    for (const auto& v : vars_) {
        if (degree_in(v) > 0 && bindings.find(v) == bindings.end())
            throw MathError("MultiPoly: evaluate with unbound variable " + v);
    }
    return substitute_values(bindings).constant_value();
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw MathError("MultiPoly: division by zero polynomial");
    MultiPoly rem = *this, div = divisor;
    align(rem, div);
    MultiPoly quot;
    quot.vars_ = rem.vars_;
    const auto& dlead = *div.terms_.rbegin();
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents qe(rlead.first.size());
        for (size_t i = 0; i < qe.size(); ++i) {
            if (rlead.first[i] < dlead.first[i]) return std::nullopt;
            qe[i] = rlead.first[i] - dlead.first[i];
        }
        Rational qc = rlead.second / dlead.second;
        MultiPoly qterm;
        qterm.vars_ = rem.vars_;
        qterm.terms_[qe] = qc;
        quot.insert_term(qe, qc);
        rem -= qterm * div;
    }
    return quot;
}

MultiPoly MultiPoly::coefficient(const std::string& var, unsigned power) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (power == 0) return *this;
        return MultiPoly();
    }
    size_t idx = static_cast<size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<long>(idx));
    MultiPoly out;
    out.vars_ = rest;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != power) continue;
        Exponents ne(e);
        ne.erase(ne.begin() + static_cast<long>(idx));
        out.insert_term(ne, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational ac = c.abs();
        bool need_coeff = true;
        std::ostringstream mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.str().empty()) mono << "*";
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!mono.str().empty() && ac == Rational(1)) need_coeff = false;
        if (need_coeff) os << ac.str();
        if (!mono.str().empty()) {
            if (need_coeff) os << "*";
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace powersum
