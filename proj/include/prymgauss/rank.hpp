#pragma once

#include "prymgauss/matrix.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace prymgauss {

/// Rank over F_p by row-echelon elimination, or nullopt when p divides some
/// entry's denominator ("bad prime"). Never exceeds the rational rank.
std::optional<std::size_t> rank_mod_p(const RationalMatrix& m, std::uint64_t p);

/// Rational rank by fraction-free (Bareiss) elimination over the integers
/// after clearing row denominators. Pivots are chosen by minimal bit length.
std::size_t rank_exact(const RationalMatrix& m);

/// Exact determinant of a square matrix.
Rational determinant(const RationalMatrix& m);

enum class RankPolicy {
    fast,   ///< modular first, exact fallback only if no prime reaches min(R, C)
    exact,  ///< fraction-free elimination only
};

enum class RankMethod { modular, bareiss, both };

std::string_view to_string(RankPolicy p);
std::string_view to_string(RankMethod m);
RankPolicy parse_rank_policy(std::string_view name);

struct CertifyOptions {
    RankPolicy policy = RankPolicy::fast;
    /// Offset into word_primes(); the CLI derives it from the seed.
    std::uint64_t prime_offset = 0;
    /// Good primes tried before falling back to exact elimination.
    unsigned modular_attempts = 3;
    unsigned threads = 1;
};

struct RankCertificate {
    int genus = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t max_possible = 0;
    bool is_maximal = false;
    RankMethod method = RankMethod::bareiss;
    /// Good primes in evaluation order, with their ranks.
    std::vector<std::uint64_t> primes_used;
    std::vector<std::size_t> modular_ranks;
    std::chrono::milliseconds elapsed{0};
};

/// Strongest sound rank claim for `m`. A modular rank equal to min(R, C)
/// proves maximality on its own; every other claim comes from exact
/// elimination. The certificate (timing aside) does not depend on
/// options.threads.
RankCertificate certify(const RationalMatrix& m, int genus, const CertifyOptions& options = {});

}  // namespace prymgauss
