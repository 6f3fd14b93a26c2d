#include "prymgauss/gauss_map.hpp"

#include "prymgauss/detail/parallel.hpp"

#include <stdexcept>

namespace prymgauss {

std::size_t MatrixLayout::row_of(int i, int j) const {
    if (!(1 <= i && i < j && j <= genus - 1)) throw std::out_of_range("pair index out of range");
    // Pairs with first index < i precede; each first index p contributes g-1-p rows.
    const int n = genus - 1;
    const int before = (i - 1) * n - (i - 1) * i / 2;
    return std::size_t(before + (j - i - 1));
}

MatrixLayout matrix_layout(int genus) {
    MatrixLayout layout;
    layout.genus = genus;
    for (int i = 1; i <= genus - 2; ++i) {
        for (int j = i + 1; j <= genus - 1; ++j) layout.row_pairs.emplace_back(i, j);
    }
    return layout;
}

Poly nu_wronskian(const PrymBinaryCurve& curve, int i, int j, int h) {
    return curve.alpha(i, h) * curve.alpha_prime(j, h) - curve.alpha(j, h) * curve.alpha_prime(i, h);
}

std::pair<Rational, Rational> nu_jet(const PrymBinaryCurve& curve, int i, int j, int h, const Rational& x) {
    const Rational ai = curve.alpha(i, h)(x), aj = curve.alpha(j, h)(x);
    const Rational di = curve.alpha_prime(i, h)(x), dj = curve.alpha_prime(j, h)(x);
    const Rational ddi = poly_derivative(curve.alpha_prime(i, h))(x);
    const Rational ddj = poly_derivative(curve.alpha_prime(j, h))(x);
    return {ai * dj - aj * di, ai * ddj - aj * ddi};
}

Poly nu_closed_form(const PrymBinaryCurve& curve, int i, int j, int h) {
    if (curve.convention() != Convention::paper) {
        throw std::invalid_argument("closed forms are defined for the paper convention only");
    }
    if (!(i < j)) throw std::invalid_argument("closed forms require i < j");
    const int k = curve.k();
    const Rational& ai = curve.a(i, h);
    const Rational& aj = curve.a(j, h);
    const Rational& A2 = curve.A(2);
    // M_h / ((t - a_i)(t - a_j)), squared.
    const Poly q = poly_div_linear(poly_div_linear(curve.M(h), ai), aj);
    const Poly q2 = q * q;
    if (j <= k) return shift_up(q2, 2) * Rational(ai - aj);
    if (i >= k + 1) return q2 * Rational((ai - aj) * ai * aj / (A2 * A2));
    const Rational sign = h % 2 == 0 ? 1 : -1;
    const Poly quadratic{Rational(ai * aj), Rational(-2 * ai), Rational(1)};
    return quadratic * q2 * Rational(sign * aj / A2);
}

Rational tau_interior(const PrymBinaryCurve& curve, int i, int j, int h) {
    if (h < 1 || h > curve.genus()) throw std::out_of_range("interior node index out of range");
    const Rational x1 = curve.node_point(h, 1);
    const Rational x2 = curve.node_point(h, 2);
    return curve.alpha_prime(j, 1)(x1) * curve.alpha_prime(i, 2)(x2) -
           curve.alpha_prime(i, 1)(x1) * curve.alpha_prime(j, 2)(x2);
}

Rational tau_infinity(const PrymBinaryCurve& curve, int i, int j) {
    auto slope = [&](int idx, int eps) { return curve.uchart(idx, eps).coefficient(1); };
    return slope(j, 1) * slope(i, 2) - slope(i, 1) * slope(j, 2);
}

std::vector<Rational> assemble_row(const PrymBinaryCurve& curve, int i, int j) {
    const MatrixLayout layout = matrix_layout(curve.genus());
    std::vector<Rational> row(layout.cols());
    for (int h = 1; h <= 2; ++h) {
        const Poly nu = nu_wronskian(curve, i, j, h);
        for (std::size_t n = 0; n < layout.nu_block_width(); ++n) {
            row[layout.nu_offset(h) + n] = nu.coefficient(n);
        }
    }
    for (int h = 1; h <= curve.genus(); ++h) {
        row[layout.tau_offset() + std::size_t(h - 1)] = tau_interior(curve, i, j, h);
    }
    row[layout.tau_infinity_column()] = tau_infinity(curve, i, j);
    return row;
}

GaussMatrix assemble_matrix(const PrymBinaryCurve& curve, unsigned threads) {
    const int g = curve.genus();
    GaussMatrix m;
    m.genus = g;
    m.convention = curve.convention();
    m.layout = matrix_layout(g);
    m.entries = RationalMatrix(m.layout.rows(), m.layout.cols());

    // slopes[eps][i][h] = alpha'_{i,eps} at node P_h (h = 1..g)
    const std::size_t n = std::size_t(g - 1);
    std::vector<Rational> slopes(2 * n * std::size_t(g));
    auto slope_at = [&](int eps, int i, int h) -> Rational& {
        return slopes[(std::size_t(eps - 1) * n + std::size_t(i - 1)) * std::size_t(g) + std::size_t(h - 1)];
    };
    detail::parallel_for(2 * n, threads, [&](std::size_t s) {
        const int eps = int(s / n) + 1;
        const int i = int(s % n) + 1;
        for (int h = 1; h <= g; ++h) slope_at(eps, i, h) = curve.alpha_prime(i, eps)(curve.node_point(h, eps));
    });

    const MatrixLayout& layout = m.layout;
    detail::parallel_for(layout.rows(), threads, [&](std::size_t r) {
        const auto [i, j] = layout.row_pairs[r];
        for (int h = 1; h <= 2; ++h) {
            const Poly nu = nu_wronskian(curve, i, j, h);
            if (nu.degree() > 2 * g - 4) throw std::logic_error("Wronskian exceeds degree 2g-4");
            for (std::size_t c = 0; c < layout.nu_block_width(); ++c) {
                m.entries(r, layout.nu_offset(h) + c) = nu.coefficient(c);
            }
        }
        for (int h = 1; h <= g; ++h) {
            m.entries(r, layout.tau_offset() + std::size_t(h - 1)) =
                slope_at(1, j, h) * slope_at(2, i, h) - slope_at(1, i, h) * slope_at(2, j, h);
        }
        m.entries(r, layout.tau_infinity_column()) = tau_infinity(curve, i, j);
    });
    return m;
}

}  // namespace prymgauss
