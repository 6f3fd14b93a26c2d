// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "prymgauss/classes.hpp"
#include "prymgauss/curve.hpp"
#include "prymgauss/gauss_map.hpp"
#include "prymgauss/induction.hpp"
#include "prymgauss/params.hpp"
#include "prymgauss/prime_field.hpp"
#include "prymgauss/rank.hpp"
#include "prymgauss/rational.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace prymgauss;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream extra;
    if (limit_s > 0 && secs >= limit_s) {
        o.pass = false;
        extra << "; over time limit " << limit_s << " s";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d. %s (%.2f s): %s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str(),
                extra.str().c_str());
    std::fflush(stdout);
}

std::size_t binom2(int n) { return std::size_t(n) * std::size_t(n - 1) / 2; }

std::size_t expected_rank(int g) { return std::min(binom2(g - 1), std::size_t(5 * g - 5)); }

RankCertificate exact_certificate(const CurveParams& p) {
    CertifyOptions o;
    o.policy = RankPolicy::exact;
    return certify(assemble_matrix(PrymBinaryCurve::build(p)).entries, p.genus, o);
}

bool same_certificate(const RankCertificate& a, const RankCertificate& b) {
    return a.genus == b.genus && a.rows == b.rows && a.cols == b.cols && a.rank == b.rank &&
           a.max_possible == b.max_possible && a.is_maximal == b.is_maximal && a.method == b.method &&
           a.primes_used == b.primes_used && a.modular_ranks == b.modular_ranks;
}

}  // namespace

int main() {
    criterion(1, "Maple replication g=4..12, script convention, exact", 10, [] {
        Outcome o;
        std::ostringstream ranks;
        for (int g = 4; g <= 12; ++g) {
            const RankCertificate c = exact_certificate(paper_params(g, Convention::script));
            ranks << (g > 4 ? "," : "") << c.rank;
            if (c.rank != expected_rank(g) || !c.is_maximal) o.pass = false;
        }
        o.detail = "ranks (" + ranks.str() + ")";
        return o;
    });

    criterion(2, "genus 12 bijectivity, paper convention, 3 seeds, exact", 15, [] {
        Outcome o;
        std::ostringstream s;
        for (std::uint64_t seed : {1, 2, 3}) {
            const auto t0 = Clock::now();
            const RankCertificate c = exact_certificate(seeded_params(12, seed, Convention::paper));
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            s << "seed " << seed << ": rank " << c.rank << " of " << c.rows << "x" << c.cols << " in " << secs
              << " s; ";
            if (c.rank != 55 || c.rows != 55 || c.cols != 55 || secs >= 5) o.pass = false;
        }
        o.detail = s.str();
        return o;
    });

    criterion(3, "surjectivity g=13..20, 2 seeds, modular certificate", 60, [] {
        Outcome o;
        int cases = 0;
        for (int g = 13; g <= 20; ++g)
            for (std::uint64_t seed : {7, 8}) {
                CertifyOptions opts;
                opts.prime_offset = seed;
                const RankCertificate c =
                    certify(assemble_matrix(PrymBinaryCurve::build(seeded_params(g, seed, Convention::paper))).entries,
                            g, opts);
                ++cases;
                if (c.rank != std::size_t(5 * g - 5) || c.method != RankMethod::modular) {
                    o.pass = false;
                    o.detail += "g=" + std::to_string(g) + " seed " + std::to_string(seed) + " rank " +
                                std::to_string(c.rank) + "; ";
                }
            }
        if (o.pass) o.detail = std::to_string(cases) + " cases, rank 5g-5 throughout";
        return o;
    });

    criterion(4, "injectivity g=5..11, 2 seeds, exact", 30, [] {
        Outcome o;
        int cases = 0;
        for (int g = 5; g <= 11; ++g)
            for (std::uint64_t seed : {4, 5}) {
                const RankCertificate c = exact_certificate(seeded_params(g, seed, Convention::paper));
                ++cases;
                if (c.rank != binom2(g - 1)) {
                    o.pass = false;
                    o.detail += "g=" + std::to_string(g) + " seed " + std::to_string(seed) + " rank " +
                                std::to_string(c.rank) + "; ";
                }
            }
        if (o.pass) o.detail = std::to_string(cases) + " cases, rank C(g-1,2) throughout";
        return o;
    });

    criterion(5, "closed forms equal Wronskians, g=5..14, 3 seeds", 0, [] {
        Outcome o;
        std::size_t checked = 0;
        for (int g = 5; g <= 14; ++g)
            for (std::uint64_t seed : {1, 2, 3}) {
                const PrymBinaryCurve c = PrymBinaryCurve::build(seeded_params(g, seed, Convention::paper));
                for (int i = 1; i < g; ++i)
                    for (int j = i + 1; j < g; ++j)
                        for (int h = 1; h <= 2; ++h) {
                            ++checked;
                            if (nu_closed_form(c, i, j, h) != nu_wronskian(c, i, j, h)) {
                                o.pass = false;
                                o.detail += "(g,i,j,h)=(" + std::to_string(g) + "," + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(h) + ") ";
                            }
                        }
            }
        if (o.pass) o.detail = std::to_string(checked) + " polynomial identities";
        return o;
    });

    criterion(6, "induction sweep g=13..100, a in {2, 3, -5/7}", 120, [] {
        const std::vector<Rational> values = {Rational(2), Rational(3), parse_rational("-5/7")};
        const std::vector<InductionReport> reports = induction_sweep(13, 100, values);
        std::size_t det_zero = 0, tau_zero = 0, flagged = 0;
        std::vector<std::string> tau_mismatch;
        std::size_t tau_negated = 0, tau_mismatch_odd = 0;
        for (const InductionReport& r : reports) {
            if (!r.det5_nonzero) ++det_zero;
            if (!r.tau.nonzero) ++tau_zero;
            if (!r.scaled4x4_matches_paper) ++flagged;
            if (!r.tau_closed_form_matches) {
                tau_mismatch.push_back("g=" + std::to_string(r.genus));
                if (r.tau.negated_match) ++tau_negated;
                if (r.parity == Parity::odd) ++tau_mismatch_odd;
            }
        }
        Outcome o;
        o.pass = det_zero == 0 && tau_mismatch.empty();
        std::ostringstream s;
        s << reports.size() << " cases; det5 zero in " << det_zero << "; tau zero in " << tau_zero
          << "; tau closed form differs in " << tau_mismatch.size();
        if (!tau_mismatch.empty())
            s << " (" << tau_negated << " equal to minus the closed form, " << tau_mismatch_odd << " at odd genus)";
        s << "; scaled 4x4 flagged in " << flagged;
        o.detail = s.str();
        return o;
    });

    criterion(7, "divisor-class equalities", 1, [] {
        Outcome o;
        std::vector<std::string> bad;
        auto expect = [&](bool ok, const char* what) {
            if (!ok) bad.push_back(what);
        };
        const Rational half = make_rational(1, 2);
        expect(grr_c1(3, 2, true) == DivisorClass::make(37, -4, -4, -9), "grr_c1(3,2,true)");
        expect(hodge_c1(1) == DivisorClass::make(1, 0, 0, make_rational(-1, 4)), "hodge_c1(1)");
        expect(hodge_c1(1) == grr_c1(1, 1, false), "hodge_c1(1) = grr_c1(1,1,false)");
        const DivisorClass d = degeneracy_class();
        expect(d == 55 * DivisorClass::make(27, -4, -4, -13 * half), "degeneracy_class");
        expect(interior_part(d) == DivisorClass::make(1485, 0, 0, 0), "interior part");
        expect(kodaira_report().difference.is_zero(), "K - [Z]/28 = 0");
        o.pass = bad.empty();
        o.detail = o.pass ? "6 identities hold" : "failed:";
        for (const std::string& b : bad) o.detail += " " + b;
        return o;
    });

    criterion(8, "rank-engine soundness and thread determinism", 0, [] {
        Outcome o;
        std::size_t matrices = 0, comparisons = 0, nondeterministic = 0;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const int g = 3 + int(seed % 7);  // 3..9
            const RationalMatrix m =
                assemble_matrix(PrymBinaryCurve::build(seeded_params(g, seed, Convention::paper))).entries;
            ++matrices;
            const std::size_t exact = rank_exact(m);
            for (std::size_t n = 0; n < 4; ++n) {
                const auto r = rank_mod_p(m, word_prime(seed, n));
                ++comparisons;
                if (r && *r > exact) {
                    o.pass = false;
                    o.detail += "mod-p rank exceeds exact rank at seed " + std::to_string(seed) + "; ";
                }
            }
            for (RankPolicy policy : {RankPolicy::fast, RankPolicy::exact}) {
                CertifyOptions opts;
                opts.policy = policy;
                opts.prime_offset = seed;
                const RankCertificate base = certify(m, g, opts);
                if (base.rank != exact) {
                    o.pass = false;
                    o.detail += "certificate rank differs from exact rank at seed " + std::to_string(seed) + "; ";
                }
                for (unsigned t : {2u, 4u}) {
                    opts.threads = t;
                    if (!same_certificate(base, certify(m, g, opts))) ++nondeterministic;
                }
            }
        }
        if (nondeterministic) {
            o.pass = false;
            o.detail += std::to_string(nondeterministic) + " certificates changed with thread count; ";
        }
        if (o.pass)
            o.detail = std::to_string(matrices) + " matrices, " + std::to_string(comparisons) +
                       " modular ranks bounded by exact rank, certificates identical for 1/2/4 threads";
        return o;
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
