#include "prymgauss/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace prymgauss {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[n] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = coeffs_.size(); n-- > 0;) {
        const Rational& c = coeffs_[n];
        if (c == 0) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        const Rational mag = abs(c);
        if (n == 0 || mag != 1) os << prymgauss::to_string(mag);
        if (n > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (n > 1) os << "^" << n;
        }
        first = false;
    }
    return os.str();
}

Poly poly_derivative(const Poly& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t n = 1; n < c.size(); ++n) out[n - 1] = c[n] * static_cast<unsigned long>(n);
    return Poly(std::move(out));
}

Poly poly_from_roots(std::span<const Rational> roots) {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        // c(t) * (t - r)
        c.emplace_back(0);
        for (std::size_t n = c.size() - 1; n > 0; --n) c[n] = c[n - 1] - r * c[n];
        c[0] = -r * c[0];
    }
    return Poly(std::move(c));
}

Poly poly_div_linear(const Poly& p, const Rational& root) {
    const auto& c = p.coefficients();
    if (c.empty()) return {};
    // Synthetic division: q_{n-1} = c_n, q_{m-1} = c_m + root * q_m.
    std::vector<Rational> q(c.size() - 1);
    Rational carry = c.back();
    for (std::size_t m = c.size() - 1; m > 0; --m) {
        q[m - 1] = carry;
        carry = c[m - 1] + root * carry;
    }
    if (carry != 0) throw std::domain_error("not a root");
    return Poly(std::move(q));
}

Poly shift_up(const Poly& p, std::size_t n) {
    if (p.is_zero()) return {};
    std::vector<Rational> v(n);
    v.insert(v.end(), p.coefficients().begin(), p.coefficients().end());
    return Poly(std::move(v));
}

}  // namespace prymgauss
