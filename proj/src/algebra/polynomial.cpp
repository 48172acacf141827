#include "psym/algebra/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace psym {

Polynomial::Polynomial(std::size_t variables, const Rational& constant) : vars_(variables) {
    if (!psym::is_zero(constant)) terms_.emplace(Exponents(variables, 0), constant);
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
    if (index >= variables) throw DimensionError("polynomial variable index out of range");
    Exponents e(variables, 0);
    e[index] = 1;
    return monomial(variables, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t variables, Exponents exponents, const Rational& coefficient) {
    if (exponents.size() != variables) throw DimensionError("monomial exponent vector has wrong length");
    Polynomial p(variables);
    if (!psym::is_zero(coefficient)) p.terms_.emplace(std::move(exponents), coefficient);
    return p;
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
    return best;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (!terms_.empty() && point.size() != vars_)
        throw DimensionError("evaluate: point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                             std::to_string(vars_) + " variables");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            mpq_class power;
            mpz_pow_ui(power.get_num_mpz_t(), point[j].get_num_mpz_t(), e[j]);
            mpz_pow_ui(power.get_den_mpz_t(), point[j].get_den_mpz_t(), e[j]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    if (index >= vars_) throw DimensionError("derivative: variable index out of range");
    Polynomial d(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents lowered = e;
        lowered[index] -= 1;
        d.add_term(lowered, c * e[index]);
    }
    return d;
}

std::size_t Polynomial::merge_vars(const Polynomial& other) const {
    if (vars_ == 0) return other.vars_;
    if (other.vars_ == 0 || other.vars_ == vars_) return vars_;
    throw DimensionError("polynomial variable-count mismatch: " + std::to_string(vars_) + " vs " +
                         std::to_string(other.vars_));
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (psym::is_zero(it->second)) terms_.erase(it);
    } else if (psym::is_zero(it->second)) {
        terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    vars_ = merge_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    vars_ = merge_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.merge_vars(b));
    if (a.is_zero() || b.is_zero()) return out;
    Polynomial::Exponents e(out.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (psym::is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("exact_quotient: division by zero");
    const std::size_t vars = std::max(a.variables(), d.variables());
    const auto& [lead_e, lead_c] = *d.terms().rbegin();
    if (d.terms().size() == 1 && std::all_of(lead_e.begin(), lead_e.end(), [](auto x) { return x == 0; }))
        return a * (1 / lead_c);
    Polynomial q(vars), r = a;
    // Lex-leading terms; each step cancels the leading term of the remainder.
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().rbegin();
        Polynomial::Exponents e(vars, 0);
        for (std::size_t j = 0; j < vars; ++j) {
            std::uint32_t top = j < re.size() ? re[j] : 0, bottom = j < lead_e.size() ? lead_e[j] : 0;
            if (top < bottom) throw std::domain_error("exact_quotient: divisor does not divide");
            e[j] = top - bottom;
        }
        Polynomial t = Polynomial::monomial(vars, std::move(e), rc / lead_c);
        r -= t * d;
        q += t;
    }
    return q;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (constant || mag != 1) {
            out << psym::to_string(mag);
            wrote = true;
        }
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (wrote) out << "*";
            out << "y" << (j + 1);
            if (e[j] > 1) out << "^" << e[j];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace psym
