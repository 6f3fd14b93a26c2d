#include "prymgauss/prime_field.hpp"

#include <array>
#include <stdexcept>

namespace prymgauss {

namespace {

// The sixteen largest primes below 2^31.
constexpr std::array<std::uint64_t, 16> kWordPrimes = {
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249,
};

}  // namespace

std::span<const std::uint64_t> word_primes() { return kWordPrimes; }

std::uint64_t word_prime(std::uint64_t offset, std::size_t n) {
    return kWordPrimes[(offset % kWordPrimes.size() + n) % kWordPrimes.size()];
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
    if (modulus <= (std::uint64_t{1} << 30) || modulus >= (std::uint64_t{1} << 32)) {
        throw std::invalid_argument("prime field modulus must lie in (2^30, 2^32)");
    }
}

PrimeFieldElement PrimeField::element(std::int64_t value) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r)};
}

PrimeFieldElement PrimeField::pow(PrimeFieldElement a, std::uint64_t e) const {
    PrimeFieldElement result{1 % p_};
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

PrimeFieldElement PrimeField::inv(PrimeFieldElement a) const {
    if (a.residue == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
}

PrimeFieldElement PrimeField::reduce(const Integer& z) const {
    // mpz_fdiv_ui returns the nonnegative remainder.
    return {mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p_))};
}

std::optional<PrimeFieldElement> PrimeField::reduce(const Rational& q) const {
    const PrimeFieldElement den = reduce(q.get_den());
    if (den.residue == 0) return std::nullopt;
    return mul(reduce(q.get_num()), inv(den));
}

}  // namespace prymgauss
