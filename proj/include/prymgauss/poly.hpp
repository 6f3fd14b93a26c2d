#pragma once

#include "prymgauss/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace prymgauss {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree. The last stored coefficient is never zero; the zero
/// polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(std::initializer_list<Rational> coefficients);

    static Poly constant(const Rational& c);
    /// The monomial c * t^n.
    static Poly monomial(const Rational& c, std::size_t n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of t^n; zero past the degree.
    Rational coefficient(std::size_t n) const;
    Rational leading() const;

    Rational operator()(const Rational& t) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator-(Poly p) { return p *= Rational(-1); }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly poly_derivative(const Poly& p);

/// Monic polynomial prod (t - r) over the multiset `roots`.
Poly poly_from_roots(std::span<const Rational> roots);

/// Returns q with p = (t - root) q. Throws std::domain_error("not a root")
/// when the remainder p(root) is nonzero.
Poly poly_div_linear(const Poly& p, const Rational& root);

/// p(t) shifted by t^n.
Poly shift_up(const Poly& p, std::size_t n);

}  // namespace prymgauss
