#include "prymgauss/rank.hpp"

#include "prymgauss/detail/parallel.hpp"
#include "prymgauss/prime_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace prymgauss {

std::optional<std::size_t> rank_mod_p(const RationalMatrix& m, std::uint64_t p) {
    const PrimeField field(p);
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::uint64_t> a(R * C);
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) {
            const auto e = field.reduce(m(r, c));
            if (!e) return std::nullopt;
            a[r * C + c] = e->residue;
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t pivot = rank;
        while (pivot < R && a[pivot * C + c] == 0) ++pivot;
        if (pivot == R) continue;
        if (pivot != rank) {
            std::swap_ranges(a.begin() + std::ptrdiff_t(pivot * C), a.begin() + std::ptrdiff_t(pivot * C + C),
                             a.begin() + std::ptrdiff_t(rank * C));
        }
        const std::uint64_t inv = field.inv({a[rank * C + c]}).residue;
        for (std::size_t j = c; j < C; ++j) a[rank * C + j] = a[rank * C + j] * inv % p;
        for (std::size_t i = rank + 1; i < R; ++i) {
            const std::uint64_t f = a[i * C + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < C; ++j) {
                // a_ij -= f * a_rj  (mod p)
                const std::uint64_t t = f * a[rank * C + j] % p;
                const std::uint64_t x = a[i * C + j];
                a[i * C + j] = x >= t ? x - t : x + p - t;
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<Integer> integer_rows(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Integer> a(R * C);
    for (std::size_t r = 0; r < R; ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < C; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < C; ++c) {
            Integer& out = a[r * C + c];
            mpz_divexact(out.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
            out *= m(r, c).get_num();
        }
    }
    return a;
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Integer> a = integer_rows(m);
    Integer prev = 1;
    Integer t1, t2;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t pivot = R;
        std::size_t best_bits = 0;
        for (std::size_t i = rank; i < R; ++i) {
            const Integer& x = a[i * C + c];
            if (x == 0) continue;
            const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
            if (pivot == R || bits < best_bits) {
                pivot = i;
                best_bits = bits;
            }
        }
        if (pivot == R) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < C; ++j) std::swap(a[pivot * C + j], a[rank * C + j]);
        }
        const Integer& pv = a[rank * C + c];
        for (std::size_t i = rank + 1; i < R; ++i) {
            Integer& lead = a[i * C + c];
            for (std::size_t j = c + 1; j < C; ++j) {
                Integer& x = a[i * C + j];
                // x = (pv * x - lead * a_rj) / prev, exact by Sylvester's identity
                mpz_mul(t1.get_mpz_t(), pv.get_mpz_t(), x.get_mpz_t());
                mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), a[rank * C + j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::string_view to_string(RankPolicy p) { return p == RankPolicy::fast ? "fast" : "exact"; }

std::string_view to_string(RankMethod m) {
    switch (m) {
        case RankMethod::modular: return "modular";
        case RankMethod::bareiss: return "bareiss";
        case RankMethod::both: return "both";
    }
    return "unknown";
}

RankPolicy parse_rank_policy(std::string_view name) {
    if (name == "fast") return RankPolicy::fast;
    if (name == "exact") return RankPolicy::exact;
    throw std::invalid_argument("unknown rank policy '" + std::string(name) + "' (expected fast|exact)");
}

RankCertificate certify(const RationalMatrix& m, int genus, const CertifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    RankCertificate cert;
    cert.genus = genus;
    cert.rows = m.rows();
    cert.cols = m.cols();
    cert.max_possible = std::min(m.rows(), m.cols());

    if (options.policy == RankPolicy::fast) {
        const std::size_t candidates = word_primes().size();
        const std::size_t batch = options.threads > 1 ? std::max(1u, options.modular_attempts) : 1;
        std::size_t next = 0;
        bool done = false;
        while (!done && next < candidates && cert.primes_used.size() < options.modular_attempts) {
            const std::size_t count = std::min(batch, candidates - next);
            std::vector<std::optional<std::size_t>> ranks(count);
            detail::parallel_for(count, options.threads, [&](std::size_t n) {
                ranks[n] = rank_mod_p(m, word_prime(options.prime_offset, next + n));
            });
            // Consume in list order so the outcome is independent of the batch size.
            for (std::size_t n = 0; n < count; ++n) {
                if (!ranks[n]) continue;
                cert.primes_used.push_back(word_prime(options.prime_offset, next + n));
                cert.modular_ranks.push_back(*ranks[n]);
                if (*ranks[n] == cert.max_possible) {
                    cert.rank = *ranks[n];
                    cert.is_maximal = true;
                    cert.method = RankMethod::modular;
                    done = true;
                    break;
                }
                if (cert.primes_used.size() == options.modular_attempts) {
                    done = true;
                    break;
                }
            }
            next += count;
        }
    }

    if (!cert.is_maximal) {
        cert.rank = rank_exact(m);
        cert.is_maximal = cert.rank == cert.max_possible;
        cert.method = cert.primes_used.empty() ? RankMethod::bareiss : RankMethod::both;
        for (std::size_t r : cert.modular_ranks) {
            if (r > cert.rank) throw std::logic_error("modular rank exceeds exact rank");
        }
    }
    cert.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return cert;
}

}  // namespace prymgauss
