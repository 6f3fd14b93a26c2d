#pragma once

#include "prymgauss/poly.hpp"
#include "prymgauss/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prymgauss {

/// Coordinate normalisation on component C_1 for the coordinates i > k.
/// `paper` uses the closed embedding with d_2 = 1, d_1 = -A_1/A_2; `script`
/// reproduces the Maple coordinates, which differ on those coordinates by
/// the factor A_2^2.
enum class Convention { paper, script };

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view name);

/// Parameter-table or genus violation. The message names the offending
/// entry as a[i][eps] (1-based).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CurveParams {
    int genus = 0;
    Convention convention = Convention::paper;
    std::vector<Rational> a1;  ///< a[i][1], i = 1..g-1
    std::vector<Rational> a2;  ///< a[i][2], i = 1..g-1
};

/// Two rational components meeting at g+1 nodes, embedded in P^{g-2} by the
/// Prym-canonical system. Immutable after construction.
///
/// Indices follow the mathematical convention: coordinates i = 1..g-1,
/// components eps = 1, 2.
class PrymBinaryCurve {
public:
    /// Throws ValidationError for g < 3, wrong row lengths, or a zero or
    /// repeated parameter within a component.
    static PrymBinaryCurve build(const CurveParams& params);
    static PrymBinaryCurve build(int genus, std::vector<Rational> a1, std::vector<Rational> a2,
                                 Convention convention = Convention::paper);

    int genus() const { return params_.genus; }
    /// floor(g/2): coordinates 1..k carry the factor t.
    int k() const { return params_.genus / 2; }
    Convention convention() const { return params_.convention; }
    const CurveParams& params() const { return params_; }

    const Rational& a(int i, int eps) const;
    /// Evaluation point of node P_h on component eps: a[h][eps] for h <= g-1
    /// and 0 for h = g.
    Rational node_point(int h, int eps) const;

    /// A_eps = prod_i a[i][eps].
    const Rational& A(int eps) const { return A_[eps - 1]; }
    Rational d(int eps) const;
    /// M_eps(t) = prod_r (t - a[r][eps]).
    const Poly& M(int eps) const { return M_[eps - 1]; }

    /// i-th coordinate of phi_eps(t, 1).
    const Poly& alpha(int i, int eps) const;
    const Poly& alpha_prime(int i, int eps) const;
    /// i-th coordinate of phi_eps(1, u), a polynomial in u.
    const Poly& uchart(int i, int eps) const;

private:
    PrymBinaryCurve() = default;
    std::size_t slot(int i, int eps) const;

    CurveParams params_;
    Rational A_[2];
    Poly M_[2];
    std::vector<Poly> alpha_;
    std::vector<Poly> alpha_prime_;
    std::vector<Poly> uchart_;
};

/// Node coordinates P_1..P_{g+1} in P^{g-2} as 0/1 vectors.
struct NodeTable {
    int genus = 0;
    std::vector<std::vector<int>> nodes;  ///< nodes[h-1] = P_h
};

NodeTable node_table(int genus);

struct NodeCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks phi_eps(a[l][eps], 1) ~ P_l, phi_eps(0, 1) ~ P_g and
/// phi_eps(1, 0) ~ P_{g+1} for both components.
NodeCheckReport node_check(const PrymBinaryCurve& curve);

/// Index of the node deleted by the genus-lowering projection:
/// k for even g, k+1 for odd g.
int projection_node(int genus);

/// Partial normalisation at P_r, re-embedded as a Prym-canonical curve of
/// genus g-1 with the r-th parameter dropped from both rows.
PrymBinaryCurve project_node(const PrymBinaryCurve& curve);

/// Multiplier pattern (h_1, ..., h_{g+1}) of the 2-torsion bundle.
std::vector<int> torsion_descriptor(int genus);

}  // namespace prymgauss
