#pragma once

#include "prymgauss/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace prymgauss {

/// Fixed list of primes in (2^30, 2^31). Residues fit in 31 bits, so a
/// product of two residues fits in an unsigned 64-bit accumulator.
std::span<const std::uint64_t> word_primes();

/// The prime at position (offset + n) mod |list|.
std::uint64_t word_prime(std::uint64_t offset, std::size_t n);

/// Element of Z/pZ, 0 <= residue < modulus.
struct PrimeFieldElement {
    std::uint64_t residue = 0;

    friend bool operator==(PrimeFieldElement, PrimeFieldElement) = default;
};

class PrimeField {
public:
    explicit PrimeField(std::uint64_t modulus);

    std::uint64_t modulus() const { return p_; }

    PrimeFieldElement element(std::int64_t value) const;
    PrimeFieldElement add(PrimeFieldElement a, PrimeFieldElement b) const {
        std::uint64_t s = a.residue + b.residue;
        return {s >= p_ ? s - p_ : s};
    }
    PrimeFieldElement sub(PrimeFieldElement a, PrimeFieldElement b) const {
        return {a.residue >= b.residue ? a.residue - b.residue : a.residue + p_ - b.residue};
    }
    PrimeFieldElement neg(PrimeFieldElement a) const { return {a.residue == 0 ? 0 : p_ - a.residue}; }
    PrimeFieldElement mul(PrimeFieldElement a, PrimeFieldElement b) const {
        return {(a.residue * b.residue) % p_};
    }
    PrimeFieldElement pow(PrimeFieldElement a, std::uint64_t e) const;
    /// Fermat inverse; a must be nonzero.
    PrimeFieldElement inv(PrimeFieldElement a) const;

    PrimeFieldElement reduce(const Integer& z) const;
    /// Image of a rational under Z_(p) -> F_p; nullopt when p divides the
    /// denominator.
    std::optional<PrimeFieldElement> reduce(const Rational& q) const;

private:
    std::uint64_t p_;
};

}  // namespace prymgauss
