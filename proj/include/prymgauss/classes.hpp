#pragma once

#include "prymgauss/rational.hpp"

#include <array>
#include <string>

namespace prymgauss {

/// Rational combination of (lambda, delta'_0, delta''_0, delta_0^ram).
struct DivisorClass {
    std::array<Rational, 4> c{};

    static DivisorClass make(const Rational& lambda, const Rational& delta1, const Rational& delta2,
                             const Rational& ram) {
        return DivisorClass{{lambda, delta1, delta2, ram}};
    }

    const Rational& lambda() const { return c[0]; }
    const Rational& delta_prime() const { return c[1]; }
    const Rational& delta_second() const { return c[2]; }
    const Rational& delta_ram() const { return c[3]; }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& s);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    bool is_zero() const;
    bool is_nonnegative() const;
    std::string to_string() const;
};

/// Degree-2 class on the universal curve: coefficients of omega^2,
/// omega*P, P^2 and [Z], where omega = c_1(omega_psi), P = c_1(Prym bundle)
/// and Z the singular locus.
struct SurfaceClassExpr {
    Rational omega2, omegaP, P2, Z;

    SurfaceClassExpr& operator+=(const SurfaceClassExpr& o);
    SurfaceClassExpr& operator*=(const Rational& s);
    friend SurfaceClassExpr operator+(SurfaceClassExpr a, const SurfaceClassExpr& b) { return a += b; }
    friend SurfaceClassExpr operator*(const Rational& s, SurfaceClassExpr a) { return a *= s; }
};

/// Linear pushforward along the universal family:
/// omega*P -> 0, P^2 -> -ram/2, [Z] -> delta' + delta'' + 2 ram,
/// omega^2 -> 12 lambda - psi_*[Z].
DivisorClass pushforward(const SurfaceClassExpr& e);

/// c_1 of psi_*(L) or psi_*(L (x) I_Z) for L = omega^a (x) P^b, by GRR:
/// the pushforward of L^2/2 - L omega/2 + (omega^2 + [Z])/12 (- [Z]).
DivisorClass grr_c1(long a_omega, long b_prym, bool with_ideal_sheaf);

/// c_1(F_i) = i(i-1)/2 (12 lambda - delta' - delta'' - 2 ram) + lambda - i^2/4 ram.
DivisorClass hodge_c1(long i);

/// c_1(target) rk(source) - c_1(source) rk(target) for a map of bundles.
DivisorClass degeneracy_formula(const DivisorClass& target_c1, long target_rank, const DivisorClass& source_c1,
                                long source_rank);

/// The genus-12 instance: source Lambda^2 psi_*(omega (x) P) of rank 55,
/// c_1 = 10 c_1(F_1); target psi_*(omega^3 (x) P^2 (x) I_Z) of rank 55.
DivisorClass degeneracy_class();

/// Restriction to the interior (boundary classes dropped).
DivisorClass interior_part(const DivisorClass& d);

/// lambda coefficient over minus the common delta'_0, delta''_0 coefficient.
Rational boundary_slope(const DivisorClass& d);

struct KodairaReport {
    DivisorClass canonical;      ///< 13 lambda - 2(delta' + delta'') - 3 ram
    DivisorClass koszul;         ///< 56(13/2 lambda - (delta' + delta'') - 3/2 ram)
    DivisorClass difference;     ///< canonical - koszul / 28
    bool nonnegative = false;
};

KodairaReport kodaira_report();

}  // namespace prymgauss
