#pragma once

#include "prymgauss/curve.hpp"
#include "prymgauss/matrix.hpp"
#include "prymgauss/poly.hpp"

#include <utility>
#include <vector>

namespace prymgauss {

/// Row/column bookkeeping of the matrix of mu_A = nu_A (+) tau.
///
/// Row r corresponds to sigma_i ^ sigma_j for the r-th pair (i, j),
/// 1 <= i < j <= g-1 in lexicographic order. Columns, left to right:
/// the 2g-3 coefficients of nu_{ij,1} (ascending degree), the 2g-3
/// coefficients of nu_{ij,2}, tau at P_1..P_g, and tau at P_{g+1}.
struct MatrixLayout {
    int genus = 0;
    std::vector<std::pair<int, int>> row_pairs;

    std::size_t rows() const { return row_pairs.size(); }
    std::size_t cols() const { return std::size_t(5 * genus - 5); }
    std::size_t nu_block_width() const { return std::size_t(2 * genus - 3); }
    std::size_t nu_offset(int h) const { return h == 1 ? 0 : nu_block_width(); }
    std::size_t tau_offset() const { return 2 * nu_block_width(); }
    std::size_t tau_infinity_column() const { return cols() - 1; }
    /// Row of the pair (i, j), i < j.
    std::size_t row_of(int i, int j) const;
};

MatrixLayout matrix_layout(int genus);

struct GaussMatrix {
    int genus = 0;
    Convention convention = Convention::paper;
    MatrixLayout layout;
    RationalMatrix entries;
};

/// nu_{ij,h} = alpha_{i,h} alpha_{j,h}' - alpha_{j,h} alpha_{i,h}'.
Poly nu_wronskian(const PrymBinaryCurve& curve, int i, int j, int h);

/// (nu_{ij,h}(x), nu_{ij,h}'(x)) from the one-jets of alpha_i, alpha_j:
/// nu' = alpha_i alpha_j'' - alpha_j alpha_i''. Agrees with evaluating
/// nu_wronskian and its derivative at x.
std::pair<Rational, Rational> nu_jet(const PrymBinaryCurve& curve, int i, int j, int h, const Rational& x);

/// The three-regime factored expression of nu_{ij,h}. Defined only for the
/// paper convention and i < j; throws std::invalid_argument otherwise.
Poly nu_closed_form(const PrymBinaryCurve& curve, int i, int j, int h);

/// Torsion component at node P_h, h = 1..g (P_g sits at t = 0):
/// alpha'_{j,1}(a_{h,1}) alpha'_{i,2}(a_{h,2}) - alpha'_{i,1}(a_{h,1}) alpha'_{j,2}(a_{h,2}).
Rational tau_interior(const PrymBinaryCurve& curve, int i, int j, int h);

/// Torsion component at P_{g+1} from the u-chart:
/// g'_{j,1}(0) g'_{i,2}(0) - g'_{i,1}(0) g'_{j,2}(0).
Rational tau_infinity(const PrymBinaryCurve& curve, int i, int j);

/// Full (g-1)(g-2)/2 x (5g-5) matrix. Rows are independent and may be
/// filled by up to `threads` workers; the result does not depend on it.
GaussMatrix assemble_matrix(const PrymBinaryCurve& curve, unsigned threads = 1);

/// Fills one matrix row for the pair (i, j); i > j yields the negated row.
std::vector<Rational> assemble_row(const PrymBinaryCurve& curve, int i, int j);

}  // namespace prymgauss
