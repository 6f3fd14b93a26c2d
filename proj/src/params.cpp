#include "prymgauss/params.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

namespace prymgauss {

namespace {

constexpr std::array<long, 11> kMapleA = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
constexpr std::array<long, 11> kMapleB = {326, -28, -875, -97, 20, -651, -523, -306, 369, -31, 99};

// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream;
// std::uniform_int_distribution is not specified bit-for-bit.
long draw(std::mt19937_64& rng, long lo, long hi) {
    const std::uint64_t range = std::uint64_t(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + long(x % range);
}

}  // namespace

CurveParams paper_params(int genus, Convention convention) {
    if (genus < 3 || genus > 12) {
        throw ValidationError("--paper-params covers genus 3..12, got " + std::to_string(genus));
    }
    CurveParams p;
    p.genus = genus;
    p.convention = convention;
    for (int i = 0; i < genus - 1; ++i) {
        p.a1.emplace_back(kMapleA[std::size_t(i)]);
        p.a2.emplace_back(kMapleB[std::size_t(i)]);
    }
    return p;
}

CurveParams seeded_params(int genus, std::uint64_t seed, Convention convention) {
    if (genus < 3) throw ValidationError("genus must be >= 3, got " + std::to_string(genus));
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(genus)};
    std::mt19937_64 rng(seq);
    CurveParams p;
    p.genus = genus;
    p.convention = convention;
    for (auto* row : {&p.a1, &p.a2}) {
        while (row->size() < std::size_t(genus - 1)) {
            long num = 0;
            while (num == 0) num = draw(rng, -10000, 10000);
            const long den = draw(rng, 1, 100);
            const Rational value = make_rational(num, den);
            if (std::find(row->begin(), row->end(), value) == row->end()) row->push_back(value);
        }
    }
    return p;
}

}  // namespace prymgauss
