#include "prymgauss/curve.hpp"

#include <sstream>

namespace prymgauss {

std::string_view to_string(Convention c) { return c == Convention::paper ? "paper" : "script"; }

Convention parse_convention(std::string_view name) {
    if (name == "paper") return Convention::paper;
    if (name == "script") return Convention::script;
    throw ValidationError("unknown convention '" + std::string(name) + "' (expected paper|script)");
}

namespace {

std::string entry_name(int i, int eps) {
    return "a[" + std::to_string(i) + "][" + std::to_string(eps) + "]";
}

void validate(const CurveParams& p) {
    if (p.genus < 3) throw ValidationError("genus must be >= 3, got " + std::to_string(p.genus));
    const auto n = static_cast<std::size_t>(p.genus - 1);
    for (int eps = 1; eps <= 2; ++eps) {
        const auto& row = eps == 1 ? p.a1 : p.a2;
        if (row.size() != n) {
            throw ValidationError("component " + std::to_string(eps) + " needs " + std::to_string(n) +
                                  " parameters, got " + std::to_string(row.size()));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] == 0) {
                throw ValidationError("parameter " + entry_name(int(i) + 1, eps) + " is zero");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (row[i] == row[j]) {
                    throw ValidationError("parameter " + entry_name(int(i) + 1, eps) +
                                          " repeats " + entry_name(int(j) + 1, eps));
                }
            }
        }
    }
}

// prod_r (1 - a_r u)
Poly reversed_node_poly(const std::vector<Rational>& roots) {
    Poly acc = Poly::constant(1);
    for (const auto& r : roots) acc = acc * Poly{Rational(1), Rational(-r)};
    return acc;
}

}  // namespace

PrymBinaryCurve PrymBinaryCurve::build(int genus, std::vector<Rational> a1, std::vector<Rational> a2,
                                       Convention convention) {
    return build(CurveParams{genus, convention, std::move(a1), std::move(a2)});
}

PrymBinaryCurve PrymBinaryCurve::build(const CurveParams& params) {
    validate(params);
    PrymBinaryCurve c;
    c.params_ = params;
    const int g = params.genus;
    const int k = g / 2;
    const std::size_t n = static_cast<std::size_t>(g - 1);
    c.alpha_.resize(2 * n);
    c.alpha_prime_.resize(2 * n);
    c.uchart_.resize(2 * n);

    for (int eps = 1; eps <= 2; ++eps) {
        const auto& row = eps == 1 ? params.a1 : params.a2;
        Rational prod = 1;
        for (const auto& x : row) prod *= x;
        c.A_[eps - 1] = prod;
        c.M_[eps - 1] = poly_from_roots(row);
    }
    const Rational& A2 = c.A_[1];

    for (int eps = 1; eps <= 2; ++eps) {
        const auto& row = eps == 1 ? params.a1 : params.a2;
        const Poly& M = c.M_[eps - 1];
        const Poly MM = reversed_node_poly(row);
        for (int i = 1; i <= g - 1; ++i) {
            const Rational& ai = row[std::size_t(i - 1)];
            const Poly quotient = poly_div_linear(M, ai);
            // MM(u) / (1 - ai u) = MM / (-ai (u - 1/ai))
            const Poly uquotient = poly_div_linear(MM, Rational(1) / ai) * Rational(-1 / ai);
            const std::size_t s = c.slot(i, eps);
            if (i <= k) {
                c.alpha_[s] = shift_up(quotient, 1);
                c.uchart_[s] = uquotient;
            } else {
                Rational scale;
                if (eps == 2) {
                    scale = -ai / A2;
                } else if (params.convention == Convention::paper) {
                    scale = ai / A2;
                } else {
                    scale = A2 * ai;
                }
                c.alpha_[s] = quotient * scale;
                c.uchart_[s] = shift_up(uquotient, 1) * scale;
            }
            c.alpha_prime_[s] = poly_derivative(c.alpha_[s]);
        }
    }
    return c;
}

std::size_t PrymBinaryCurve::slot(int i, int eps) const {
    if (i < 1 || i > genus() - 1 || (eps != 1 && eps != 2)) {
        throw std::out_of_range("coordinate index " + entry_name(i, eps) + " out of range");
    }
    return static_cast<std::size_t>(eps - 1) * static_cast<std::size_t>(genus() - 1) +
           static_cast<std::size_t>(i - 1);
}

const Rational& PrymBinaryCurve::a(int i, int eps) const {
    const auto& row = eps == 1 ? params_.a1 : params_.a2;
    slot(i, eps);
    return row[std::size_t(i - 1)];
}

Rational PrymBinaryCurve::node_point(int h, int eps) const {
    if (h == genus()) return 0;
    return a(h, eps);
}

Rational PrymBinaryCurve::d(int eps) const {
    if (eps == 2) return 1;
    return -A_[0] / A_[1];
}

const Poly& PrymBinaryCurve::alpha(int i, int eps) const { return alpha_[slot(i, eps)]; }
const Poly& PrymBinaryCurve::alpha_prime(int i, int eps) const { return alpha_prime_[slot(i, eps)]; }
const Poly& PrymBinaryCurve::uchart(int i, int eps) const { return uchart_[slot(i, eps)]; }

NodeTable node_table(int genus) {
    NodeTable t;
    t.genus = genus;
    const int n = genus - 1;
    const int k = genus / 2;
    for (int h = 1; h <= n; ++h) {
        std::vector<int> v(std::size_t(n), 0);
        v[std::size_t(h - 1)] = 1;
        t.nodes.push_back(std::move(v));
    }
    std::vector<int> pg(static_cast<std::size_t>(n)), pinf(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        pg[std::size_t(i - 1)] = i <= k ? 0 : 1;
        pinf[std::size_t(i - 1)] = i <= k ? 1 : 0;
    }
    t.nodes.push_back(std::move(pg));
    t.nodes.push_back(std::move(pinf));
    return t;
}

namespace {

// Returns an empty string when v is a nonzero multiple of the 0/1 vector p,
// otherwise a description of the first offending coordinate.
std::string proportionality_failure(const std::vector<Rational>& v, const std::vector<int>& p) {
    Rational ratio = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (p[i] == 0) {
            if (v[i] != 0) return "coordinate " + std::to_string(i + 1) + " is " + to_string(v[i]) + ", expected 0";
            continue;
        }
        if (v[i] == 0) return "coordinate " + std::to_string(i + 1) + " vanishes";
        if (ratio == 0) ratio = v[i];
        else if (v[i] != ratio) {
            return "coordinate " + std::to_string(i + 1) + " is " + to_string(v[i]) +
                   ", expected " + to_string(ratio);
        }
    }
    return {};
}

}  // namespace

NodeCheckReport node_check(const PrymBinaryCurve& curve) {
    NodeCheckReport report;
    const int g = curve.genus();
    const NodeTable nodes = node_table(g);
    auto record = [&](const std::string& node, int eps, const std::vector<Rational>& v,
                      const std::vector<int>& target) {
        const std::string why = proportionality_failure(v, target);
        if (!why.empty()) {
            report.ok = false;
            report.failures.push_back(node + " on component " + std::to_string(eps) + ": " + why);
        }
    };
    for (int eps = 1; eps <= 2; ++eps) {
        for (int l = 1; l <= g; ++l) {
            std::vector<Rational> v;
            const Rational x = curve.node_point(l, eps);
            for (int i = 1; i <= g - 1; ++i) v.push_back(curve.alpha(i, eps)(x));
            record("P_" + std::to_string(l), eps, v, nodes.nodes[std::size_t(l - 1)]);
        }
        // phi_eps(1, 0): the coefficient of t^{g-1} in each coordinate.
        std::vector<Rational> top;
        for (int i = 1; i <= g - 1; ++i) top.push_back(curve.alpha(i, eps).coefficient(std::size_t(g - 1)));
        record("P_" + std::to_string(g + 1), eps, top, nodes.nodes[std::size_t(g)]);
    }
    return report;
}

int projection_node(int genus) { return genus % 2 == 0 ? genus / 2 : genus / 2 + 1; }

PrymBinaryCurve project_node(const PrymBinaryCurve& curve) {
    const int g = curve.genus();
    if (g < 4) throw ValidationError("node projection needs genus >= 4, got " + std::to_string(g));
    const int r = projection_node(g);
    CurveParams p;
    p.genus = g - 1;
    p.convention = curve.convention();
    for (int i = 1; i <= g - 1; ++i) {
        if (i == r) continue;
        p.a1.push_back(curve.a(i, 1));
        p.a2.push_back(curve.a(i, 2));
    }
    return PrymBinaryCurve::build(p);
}

std::vector<int> torsion_descriptor(int genus) {
    const int k = genus / 2;
    std::vector<int> h;
    for (int i = 1; i <= genus - 1; ++i) h.push_back(i <= k ? 1 : -1);
    h.push_back(-1);
    h.push_back(1);
    return h;
}

}  // namespace prymgauss
