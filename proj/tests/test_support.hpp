#pragma once

#include "prymgauss/poly.hpp"
#include "prymgauss/rational.hpp"

#include <random>
#include <string>
#include <vector>

namespace prymgauss::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 50, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    return make_rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(std::size_t(deg(rng) + 1));
    for (auto& x : c) x = random_rational(rng);
    return Poly(std::move(c));
}

}  // namespace prymgauss::testing
