#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymgauss/gauss_map.hpp"
#include "prymgauss/induction.hpp"
#include "prymgauss/rank.hpp"
#include "test_support.hpp"

using namespace prymgauss;
using prymgauss::testing::q;

namespace {

using Cols = std::vector<std::pair<int, int>>;

Integer det4_laplace(const RationalMatrix& m) {
    auto det3 = [&](std::size_t skip) -> Rational {
        std::vector<std::size_t> c;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != skip) c.push_back(j);
        return m(1, c[0]) * (m(2, c[1]) * m(3, c[2]) - m(2, c[2]) * m(3, c[1])) -
               m(1, c[1]) * (m(2, c[0]) * m(3, c[2]) - m(2, c[2]) * m(3, c[0])) +
               m(1, c[2]) * (m(2, c[0]) * m(3, c[1]) - m(2, c[1]) * m(3, c[0]));
    };
    Rational d = 0;
    for (std::size_t j = 0; j < 4; ++j) d += (j % 2 ? -1 : 1) * m(0, j) * det3(j);
    REQUIRE(d.get_den() == 1);
    return d.get_num();
}

}  // namespace

TEST_CASE("selected columns") {
    CHECK(induction_columns(14) == Cols{{1, 7}, {2, 7}, {7, 12}, {7, 13}, {6, 8}});
    CHECK(induction_columns(13) == Cols{{2, 7}, {3, 7}, {7, 11}, {7, 12}, {5, 8}});
    const InductionSubmatrix s = build_induction_submatrix(14, 2);
    CHECK(s.node == 7);
    CHECK(s.parity == Parity::even);
    const InductionSubmatrix o = build_induction_submatrix(13, 2);
    CHECK(o.node == 7);
    CHECK(o.parity == Parity::odd);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(verify_det5(14, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_det5(14, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_det5(12, 2), std::invalid_argument);
}

TEST_CASE("nu rows vanish off the projected node") {
    for (int g : {13, 14, 21, 30}) {
        for (const Rational& a : {Rational(2), q("-5/7")}) {
            const InductionSubmatrix s = build_induction_submatrix(g, a);
            for (std::size_t row = 0; row < 4; ++row) {
                CHECK(s.matrix(row, 4) == 0);
                for (std::size_t col = 0; col < 4; ++col) CHECK(s.matrix(row, col) != 0);
            }
        }
    }
}

TEST_CASE("determinant factors through the torsion entry") {
    for (int g : {13, 14, 15, 16}) {
        const InductionSubmatrix s = build_induction_submatrix(g, 3);
        RationalMatrix block(4, 4);
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t c = 0; c < 4; ++c) block(p, c) = s.matrix(p, c);
        CHECK(determinant(s.matrix) == s.matrix(4, 4) * determinant(block));
    }
}

TEST_CASE("det5 is nonzero") {
    for (int g : {13, 14}) {
        const InductionReport r = verify_det5(g, 2);
        CHECK(r.det5_nonzero);
        CHECK(r.det5 != 0);
        CHECK(r.selected_columns == induction_columns(g));
    }
}

TEST_CASE("scaled target matrices") {
    const RationalMatrix even = scaled_target_matrix(14);
    CHECK(even(0, 0) == -35);
    CHECK(even(0, 1) == -42);
    CHECK(even(0, 2) == -72);
    CHECK(even(0, 3) == -65);
    const RationalMatrix odd = scaled_target_matrix(13);
    CHECK(odd(0, 0) == -35);
    CHECK(odd(0, 1) == -28);
    CHECK(odd(0, 2) == -4);
    CHECK(odd(0, 3) == -5);
    for (int k = 6; k <= 50; ++k) {
        CAPTURE(k);
        const Integer de = det4_laplace(scaled_target_matrix(2 * k));
        const Integer dodd = det4_laplace(scaled_target_matrix(2 * k + 1));
        CHECK(de != 0);
        CHECK(dodd != 0);
        CHECK(determinant(scaled_target_matrix(2 * k)) == Rational(de));
    }
    for (int g : {13, 14, 19, 24}) {
        const ScaledMatrixCheck c = check_scaled_matrix(g, 2);
        CHECK_MESSAGE(c.matches, c.detail);
    }
}

TEST_CASE("tau closed forms") {
    // Odd genus: the displayed value is exact.
    for (int g : {13, 15, 27}) {
        for (const Rational& a : {Rational(2), Rational(3), q("-5/7")}) {
            const TauClosedFormCheck c = check_tau_closed_form(g, a);
            CHECK(c.pair == std::pair{g / 2 - 1, g / 2 + 2});
            CHECK(c.node == g / 2 + 1);
            CHECK(c.exact_match);
            CHECK(c.nonzero);
        }
    }
    // Even genus: tau_{k-1,k+1}(P_k) equals minus the displayed expression.
    for (int g : {14, 16, 28}) {
        for (const Rational& a : {Rational(2), Rational(3), q("-5/7")}) {
            const TauClosedFormCheck c = check_tau_closed_form(g, a);
            CHECK(c.pair == std::pair{g / 2 - 1, g / 2 + 1});
            CHECK(c.node == g / 2);
            CHECK_FALSE(c.exact_match);
            CHECK(c.negated_match);
            CHECK(c.nonzero);
        }
    }
    // g = 14, a = 2 evaluated by hand from the displayed formula: 2*7*8*2^12/13! * prod (7-l)^2.
    Rational expected = Rational(2 * 7 * 8 * 4096);
    Integer fact = 1;
    for (int n = 2; n <= 13; ++n) fact *= n;
    expected /= Rational(fact);
    for (int l = 1; l <= 13; ++l)
        if (l < 6 || l > 8) expected *= (7 - l) * (7 - l);
    CHECK(check_tau_closed_form(14, 2).closed_form == expected);
    CHECK(check_tau_closed_form(14, 2).computed == -expected);
}

TEST_CASE("submatrix agrees with the assembled Gauss matrix") {
    for (int g : {13, 14}) {
        const PrymBinaryCurve c = induction_curve(g, q("-5/7"));
        const GaussMatrix m = assemble_matrix(c);
        const InductionSubmatrix s = build_induction_submatrix(c);
        for (std::size_t col = 0; col < 5; ++col) {
            const auto [i, j] = s.columns[col];
            const std::size_t row = m.layout.row_of(i, j);
            for (int h = 1; h <= 2; ++h) {
                std::vector<Rational> coeffs;
                for (std::size_t n = 0; n < m.layout.nu_block_width(); ++n)
                    coeffs.push_back(m.entries(row, m.layout.nu_offset(h) + n));
                const Poly nu(coeffs);
                const Rational x = c.a(s.node, h);
                CHECK(s.matrix(std::size_t(2 * (h - 1)), col) == nu(x));
                CHECK(s.matrix(std::size_t(2 * (h - 1) + 1), col) == poly_derivative(nu)(x));
            }
            CHECK(s.matrix(4, col) == m.entries(row, m.layout.tau_offset() + std::size_t(s.node - 1)));
        }
    }
}

TEST_CASE("sweep ordering") {
    const std::vector<Rational> values{Rational(2), q("-5/7")};
    const auto reports = induction_sweep(13, 16, values, 3);
    REQUIRE(reports.size() == 8);
    for (std::size_t n = 0; n < reports.size(); ++n) {
        CHECK(reports[n].genus == 13 + int(n / 2));
        CHECK(reports[n].a == values[n % 2]);
        CHECK(reports[n].det5_nonzero);
        CHECK(reports[n].scaled4x4_matches_paper);
    }
    CHECK_THROWS_AS(induction_sweep(16, 13, values), std::invalid_argument);
}
