#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "psym/algebra/rational.hpp"

namespace psym {

/// Multivariate polynomial with rational coefficients in canonical form:
/// no zero coefficients are stored, monomials are ordered lexicographically
/// on their exponent vectors.
///
/// A default-constructed polynomial is zero with an unspecified variable
/// count and combines with polynomials of any arity. Any other pair of
/// operands must agree on the number of variables.
class Polynomial {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Terms = std::map<Exponents, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t variables) : vars_(variables) {}
    Polynomial(std::size_t variables, const Rational& constant);

    static Polynomial variable(std::size_t variables, std::size_t index);
    static Polynomial monomial(std::size_t variables, Exponents exponents, const Rational& coefficient);

    std::size_t variables() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of the given monomial (zero when absent).
    Rational coefficient(const Exponents& exponents) const;

    std::uint32_t total_degree() const;

    Rational evaluate(std::span<const Rational> point) const;
    Polynomial derivative(std::size_t index) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Human-readable form, e.g. "1/4*y1^2 + 1/2*y1 + 1/4".
    std::string to_string() const;

private:
    std::size_t merge_vars(const Polynomial& other) const;
    void add_term(const Exponents& e, const Rational& c);

    std::size_t vars_ = 0;
    Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// a / d when d divides a in Q[y]; throws std::domain_error otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& d);

}  // namespace psym
