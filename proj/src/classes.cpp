#include "prymgauss/classes.hpp"

#include <sstream>
#include <stdexcept>

namespace prymgauss {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    for (std::size_t n = 0; n < 4; ++n) c[n] += o.c[n];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    for (std::size_t n = 0; n < 4; ++n) c[n] -= o.c[n];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
    for (auto& x : c) x *= s;
    return *this;
}

bool DivisorClass::is_zero() const {
    for (const auto& x : c) {
        if (x != 0) return false;
    }
    return true;
}

bool DivisorClass::is_nonnegative() const {
    for (const auto& x : c) {
        if (x < 0) return false;
    }
    return true;
}

std::string DivisorClass::to_string() const {
    static const char* names[4] = {"lambda", "delta'_0", "delta''_0", "delta_0^ram"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < 4; ++n) {
        if (c[n] == 0) continue;
        if (!first) os << (sgn(c[n]) < 0 ? " - " : " + ");
        else if (sgn(c[n]) < 0) os << "-";
        const Rational mag = abs(c[n]);
        if (mag != 1) os << prymgauss::to_string(mag) << " ";
        os << names[n];
        first = false;
    }
    return first ? "0" : os.str();
}

SurfaceClassExpr& SurfaceClassExpr::operator+=(const SurfaceClassExpr& o) {
    omega2 += o.omega2;
    omegaP += o.omegaP;
    P2 += o.P2;
    Z += o.Z;
    return *this;
}

SurfaceClassExpr& SurfaceClassExpr::operator*=(const Rational& s) {
    omega2 *= s;
    omegaP *= s;
    P2 *= s;
    Z *= s;
    return *this;
}

DivisorClass pushforward(const SurfaceClassExpr& e) {
    const DivisorClass z = DivisorClass::make(0, 1, 1, 2);
    const DivisorClass omega2 = DivisorClass::make(12, 0, 0, 0) - z;
    const DivisorClass p2 = DivisorClass::make(0, 0, 0, Rational(-1, 2));
    return e.omega2 * omega2 + e.P2 * p2 + e.Z * z;
}

DivisorClass grr_c1(long a_omega, long b_prym, bool with_ideal_sheaf) {
    const Rational a(a_omega), b(b_prym);
    // L^2/2 with L = a omega + b P
    SurfaceClassExpr e{a * a / 2, a * b, b * b / 2, 0};
    // - L omega / 2
    e += SurfaceClassExpr{-a / 2, -b / 2, 0, 0};
    // todd class, degree 2
    e += SurfaceClassExpr{Rational(1, 12), 0, 0, Rational(1, 12)};
    if (with_ideal_sheaf) e.Z -= 1;
    return pushforward(e);
}

DivisorClass hodge_c1(long i) {
    const Rational q(i);
    const DivisorClass mumford = DivisorClass::make(12, -1, -1, -2);
    return Rational(q * (q - 1) / 2) * mumford + DivisorClass::make(1, 0, 0, Rational(-q * q / 4));
}

DivisorClass degeneracy_formula(const DivisorClass& target_c1, long target_rank, const DivisorClass& source_c1,
                                long source_rank) {
    return Rational(source_rank) * target_c1 - Rational(target_rank) * source_c1;
}

DivisorClass degeneracy_class() {
    constexpr long rank = 55;
    constexpr long sections = 11;  // rank of psi_*(omega (x) P) in genus 12
    const DivisorClass source = Rational(sections - 1) * hodge_c1(1);
    return degeneracy_formula(grr_c1(3, 2, true), rank, source, rank);
}

DivisorClass interior_part(const DivisorClass& d) { return DivisorClass::make(d.lambda(), 0, 0, 0); }

Rational boundary_slope(const DivisorClass& d) {
    if (d.delta_prime() != d.delta_second()) {
        throw std::invalid_argument("slope needs equal delta'_0 and delta''_0 coefficients");
    }
    if (d.delta_prime() == 0) throw std::domain_error("slope undefined for vanishing boundary coefficient");
    return d.lambda() / -d.delta_prime();
}

KodairaReport kodaira_report() {
    KodairaReport r;
    r.canonical = DivisorClass::make(13, -2, -2, -3);
    r.koszul = Rational(56) * DivisorClass::make(Rational(13, 2), -1, -1, Rational(-3, 2));
    r.difference = r.canonical - Rational(1, 28) * r.koszul;
    r.nonnegative = r.difference.is_nonnegative();
    return r;
}

}  // namespace prymgauss
