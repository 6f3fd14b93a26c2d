// prymgauss command-line front end.
//
// Exit codes: 0 claims hold, 1 a mathematical claim failed, 2 usage or
// validation error.

#include "prymgauss/classes.hpp"
#include "prymgauss/curve.hpp"
#include "prymgauss/detail/parallel.hpp"
#include "prymgauss/gauss_map.hpp"
#include "prymgauss/induction.hpp"
#include "prymgauss/io.hpp"
#include "prymgauss/params.hpp"
#include "prymgauss/rank.hpp"
#include "prymgauss/rational.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace prymgauss;

constexpr int exit_ok = 0;
constexpr int exit_claim = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::string convention = "paper";
    std::uint64_t seed = 1;
    std::string params_file;
    bool paper_params = false;
    bool json_out = false;
    bool no_timing = false;
    unsigned threads = 1;
    std::string policy = "fast";
};

Global global;

Convention convention() {
    try {
        return parse_convention(global.convention);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

CertifyOptions certify_options() {
    CertifyOptions o;
    try {
        o.policy = parse_rank_policy(global.policy);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    o.prime_offset = global.seed;
    o.threads = global.threads == 0 ? 1 : global.threads;
    return o;
}

void check_sources() {
    if (!global.params_file.empty() && global.paper_params)
        throw UsageError("--params and --paper-params are mutually exclusive");
}

std::string source_name() {
    if (!global.params_file.empty()) return "file";
    return global.paper_params ? "paper-params" : "seed";
}

// Parameters for one genus from the selected source. `genus` may be omitted
// only when a parameter file supplies it.
CurveParams resolve_params(std::optional<int> genus) {
    check_sources();
    if (!global.params_file.empty()) {
        CurveParams p = load_params_file(global.params_file);
        if (genus && *genus != p.genus)
            throw UsageError("--genus " + std::to_string(*genus) + " disagrees with parameter file genus " +
                             std::to_string(p.genus));
        return p;
    }
    if (!genus) throw UsageError("--genus is required unless --params is given");
    const Convention conv = convention();
    return global.paper_params ? paper_params(*genus, conv) : seeded_params(*genus, global.seed, conv);
}

json envelope(std::string_view command) {
    json j;
    j["tool"] = "prymgauss";
    j["version"] = PRYMGAUSS_VERSION;
    j["command"] = command;
    return j;
}

void stamp(json& j, const CurveParams& p) {
    j["genus"] = p.genus;
    j["convention"] = to_string(p.convention);
    j["seed"] = global.seed;
    j["param_source"] = source_name();
    j["params"] = params_to_json(p);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string describe(const RankCertificate& c) {
    std::ostringstream s;
    s << "rank " << c.rank << " of " << c.max_possible << " (" << c.rows << "x" << c.cols << "), "
      << (c.is_maximal ? "maximal" : "NOT maximal") << ", method " << to_string(c.method);
    if (!c.primes_used.empty()) {
        s << ", primes";
        for (std::size_t n = 0; n < c.primes_used.size(); ++n)
            s << ' ' << c.primes_used[n] << "[" << c.modular_ranks[n] << "]";
    }
    if (!global.no_timing) s << ", " << c.elapsed.count() << " ms";
    return s.str();
}

// --- rank ---------------------------------------------------------------

struct RankArgs {
    std::optional<int> genus;
    std::string matrix_file;
};

int cmd_rank(const RankArgs& args) {
    const CertifyOptions opts = certify_options();
    if (!args.matrix_file.empty()) {
        if (!global.params_file.empty() || global.paper_params)
            throw UsageError("--matrix cannot be combined with a parameter source");
        std::ifstream in(args.matrix_file, std::ios::binary);
        if (!in) throw UsageError("cannot open " + args.matrix_file);
        const MatrixDump dump = read_matrix_binary(in);
        const RankCertificate c = certify(dump.entries, dump.genus, opts);
        if (global.json_out) {
            json j = envelope("rank");
            j["genus"] = dump.genus;
            j["convention"] = nullptr;
            j["seed"] = global.seed;
            j["param_source"] = "matrix";
            j["params"] = nullptr;
            j["matrix_file"] = args.matrix_file;
            j["certificate"] = certificate_to_json(c, !global.no_timing);
            emit(j);
        } else {
            std::cout << "genus " << dump.genus << " (matrix " << args.matrix_file << "): " << describe(c) << '\n';
        }
        return c.is_maximal ? exit_ok : exit_claim;
    }

    const CurveParams p = resolve_params(args.genus);
    const PrymBinaryCurve curve = PrymBinaryCurve::build(p);
    const GaussMatrix m = assemble_matrix(curve, opts.threads);
    const RankCertificate c = certify(m.entries, p.genus, opts);
    if (global.json_out) {
        json j = envelope("rank");
        stamp(j, p);
        j["certificate"] = certificate_to_json(c, !global.no_timing);
        emit(j);
    } else {
        std::cout << "genus " << p.genus << " (" << to_string(p.convention) << "): " << describe(c) << '\n';
    }
    return c.is_maximal ? exit_ok : exit_claim;
}

// --- sweep --------------------------------------------------------------

struct RangeArgs {
    int g_min = 0;
    int g_max = 0;
};

int cmd_sweep(const RangeArgs& args) {
    if (args.g_min > args.g_max) throw UsageError("--g-min must not exceed --g-max");
    check_sources();
    if (!global.params_file.empty() && args.g_min != args.g_max)
        throw UsageError("--params fixes a single genus; use --g-min = --g-max");

    const std::size_t n = std::size_t(args.g_max - args.g_min + 1);
    std::vector<CurveParams> params;
    for (int g = args.g_min; g <= args.g_max; ++g) params.push_back(resolve_params(g));
    for (const CurveParams& p : params) PrymBinaryCurve::build(p);  // validate up front

    CertifyOptions opts = certify_options();
    const unsigned workers = opts.threads;
    opts.threads = 1;
    std::vector<RankCertificate> certs(n);
    detail::parallel_for(n, workers, [&](std::size_t idx) {
        const PrymBinaryCurve curve = PrymBinaryCurve::build(params[idx]);
        certs[idx] = certify(assemble_matrix(curve).entries, params[idx].genus, opts);
    });

    bool all = true;
    for (const RankCertificate& c : certs) all = all && c.is_maximal;

    if (global.json_out) {
        json j = envelope("sweep");
        j["genus"] = {{"min", args.g_min}, {"max", args.g_max}};
        j["convention"] = to_string(params.front().convention);
        j["seed"] = global.seed;
        j["param_source"] = source_name();
        json cases = json::array();
        for (std::size_t idx = 0; idx < n; ++idx)
            cases.push_back(
                {{"params", params_to_json(params[idx])}, {"certificate", certificate_to_json(certs[idx], !global.no_timing)}});
        j["cases"] = std::move(cases);
        j["all_maximal"] = all;
        emit(j);
    } else {
        for (std::size_t idx = 0; idx < n; ++idx)
            std::cout << "genus " << params[idx].genus << ": " << describe(certs[idx]) << '\n';
        std::cout << (all ? "all maximal" : "some case is NOT maximal") << '\n';
    }
    return all ? exit_ok : exit_claim;
}

// --- oracle -------------------------------------------------------------

struct Mismatch {
    int i, j, h;
    int degree;
    Rational closed, wronskian;
};

int cmd_oracle(std::optional<int> genus) {
    const CurveParams p = resolve_params(genus);
    if (p.convention != Convention::paper) throw UsageError("oracle requires --convention paper");
    const PrymBinaryCurve curve = PrymBinaryCurve::build(p);
    const int g = p.genus;

    std::vector<Mismatch> bad;
    std::size_t checked = 0;
    for (int i = 1; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int h = 1; h <= 2; ++h) {
                const Poly closed = nu_closed_form(curve, i, j, h);
                const Poly wr = nu_wronskian(curve, i, j, h);
                ++checked;
                if (closed == wr) continue;
                const int top = std::max(closed.degree(), wr.degree());
                for (int d = 0; d <= top; ++d)
                    if (closed.coefficient(d) != wr.coefficient(d)) {
                        bad.push_back({i, j, h, d, closed.coefficient(d), wr.coefficient(d)});
                        break;
                    }
            }

    if (global.json_out) {
        json j = envelope("oracle");
        stamp(j, p);
        j["checked"] = checked;
        json mism = json::array();
        for (const Mismatch& m : bad)
            mism.push_back({{"i", m.i},
                            {"j", m.j},
                            {"h", m.h},
                            {"degree", m.degree},
                            {"closed_form", to_string(m.closed)},
                            {"wronskian", to_string(m.wronskian)}});
        j["mismatches"] = std::move(mism);
        j["pass"] = bad.empty();
        emit(j);
    } else {
        for (const Mismatch& m : bad)
            std::cout << "mismatch (i, j, h) = (" << m.i << ", " << m.j << ", " << m.h << ") at t^" << m.degree
                      << ": closed form " << to_string(m.closed) << ", Wronskian " << to_string(m.wronskian) << '\n';
        std::cout << "genus " << g << ": " << checked << " Wronskians, " << (bad.empty() ? "pass" : "FAIL") << '\n';
    }
    return bad.empty() ? exit_ok : exit_claim;
}

// --- induction ----------------------------------------------------------

struct InductionArgs {
    int g_min = 13;
    int g_max = 13;
    std::vector<std::string> a = {"2"};
};

int cmd_induction(const InductionArgs& args) {
    if (args.g_min > args.g_max) throw UsageError("--g-min must not exceed --g-max");
    std::vector<Rational> values;
    for (const std::string& s : args.a) values.push_back(parse_rational(s));
    const std::vector<InductionReport> reports =
        induction_sweep(args.g_min, args.g_max, values, global.threads == 0 ? 1 : global.threads);

    // The proof needs det5 != 0 and a nonvanishing tau entry.
    bool holds = true;
    for (const InductionReport& r : reports) holds = holds && r.det5_nonzero && r.tau.nonzero;

    if (global.json_out) {
        json j = envelope("induction");
        j["genus"] = {{"min", args.g_min}, {"max", args.g_max}};
        j["convention"] = "paper";
        j["seed"] = global.seed;
        j["param_source"] = "induction-family";
        json a = json::array();
        for (const Rational& v : values) a.push_back(to_string(v));
        j["params"] = {{"a", std::move(a)}, {"a1", "i*a"}, {"a2", "i"}};
        json cases = json::array();
        for (const InductionReport& r : reports) cases.push_back(induction_to_json(r));
        j["reports"] = std::move(cases);
        j["claims_hold"] = holds;
        emit(j);
    } else {
        for (const InductionReport& r : reports) {
            std::cout << "g=" << r.genus << " a=" << to_string(r.a) << ": det5 "
                      << (r.det5_nonzero ? "nonzero" : "ZERO") << ", tau "
                      << (r.tau_closed_form_matches ? "matches closed form"
                          : r.tau.negated_match ? "matches closed form up to sign"
                                                : "DIFFERS from closed form")
                      << (r.tau.nonzero ? "" : " (ZERO)") << ", 4x4 "
                      << (r.scaled4x4_matches_paper ? "matches" : "flagged: " + r.scaled4x4_detail) << '\n';
        }
        std::cout << (holds ? "induction claims hold" : "induction claim FAILED") << '\n';
    }
    return holds ? exit_ok : exit_claim;
}

// --- classes ------------------------------------------------------------

int cmd_classes() {
    const KodairaReport k = kodaira_report();
    const bool holds = k.difference.is_zero();
    if (global.json_out) {
        json j = envelope("classes");
        j["genus"] = 12;
        j["convention"] = to_string(convention());
        j["seed"] = global.seed;
        j["params"] = nullptr;
        j["results"] = classes_to_json();
        emit(j);
    } else {
        const DivisorClass d = degeneracy_class();
        std::cout << "c1(F_1) = " << hodge_c1(1).to_string() << '\n'
                  << "c1(source) = " << (10 * hodge_c1(1)).to_string() << '\n'
                  << "c1(target) = " << grr_c1(3, 2, true).to_string() << '\n'
                  << "[D] = " << d.to_string() << '\n'
                  << "interior part = " << interior_part(d).to_string() << '\n'
                  << "slope = " << to_string(boundary_slope(d)) << '\n'
                  << "K = " << k.canonical.to_string() << '\n'
                  << "K - [Z]/28 = " << k.difference.to_string() << '\n';
    }
    return holds ? exit_ok : exit_claim;
}

// --- curve validate -----------------------------------------------------

int cmd_curve_validate(std::optional<int> genus) {
    const CurveParams p = resolve_params(genus);
    const PrymBinaryCurve curve = PrymBinaryCurve::build(p);
    const NodeCheckReport report = node_check(curve);
    if (global.json_out) {
        json j = envelope("curve validate");
        stamp(j, p);
        j["k"] = curve.k();
        j["A1"] = to_string(curve.A(1));
        j["A2"] = to_string(curve.A(2));
        j["d1"] = to_string(curve.d(1));
        j["torsion"] = torsion_descriptor(p.genus);
        j["node_check"] = {{"ok", report.ok}, {"failures", report.failures}};
        emit(j);
    } else {
        std::cout << "genus " << p.genus << " (" << to_string(p.convention) << "): parameters valid, node check "
                  << (report.ok ? "ok" : "FAILED") << '\n';
        for (const std::string& f : report.failures) std::cout << "  " << f << '\n';
    }
    return report.ok ? exit_ok : exit_claim;
}

// --- matrix export ------------------------------------------------------

struct ExportArgs {
    std::optional<int> genus;
    std::string out;
    std::string binary;
};

int cmd_matrix_export(const ExportArgs& args) {
    const CurveParams p = resolve_params(args.genus);
    const PrymBinaryCurve curve = PrymBinaryCurve::build(p);
    const GaussMatrix m = assemble_matrix(curve, global.threads == 0 ? 1 : global.threads);

    if (!args.binary.empty()) {
        std::ofstream bin(args.binary, std::ios::binary);
        if (!bin) throw UsageError("cannot write " + args.binary);
        write_matrix_binary(bin, p.genus, m.entries);
    }

    json j = envelope("matrix export");
    stamp(j, p);
    j["checksum"] = [&] {
        std::ostringstream s;
        s << "0x" << std::hex << matrix_checksum(p.genus, m.entries);
        return s.str();
    }();
    j["matrix"] = matrix_to_json(m);

    if (!args.out.empty()) {
        std::ofstream f(args.out);
        if (!f) throw UsageError("cannot write " + args.out);
        f << j.dump(2) << '\n';
        if (!global.json_out)
            std::cout << "genus " << p.genus << ": " << m.entries.rows() << "x" << m.entries.cols() << " written to "
                      << args.out << '\n';
    }
    if (global.json_out || args.out.empty()) emit(j);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian maps of Prym-canonical binary curves"};
    app.set_version_flag("--version", std::string("prymgauss ") + PRYMGAUSS_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--convention", global.convention, "paper or script")->check(CLI::IsMember({"paper", "script"}));
    app.add_option("--seed", global.seed, "seed for parameters and prime offset");
    app.add_option("--params", global.params_file, "JSON parameter file");
    app.add_flag("--paper-params", global.paper_params, "use the Maple script parameter vectors");
    app.add_flag("--json", global.json_out, "JSON output");
    app.add_flag("--no-timing", global.no_timing, "omit timings for byte-identical output");
    app.add_option("--threads", global.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--policy", global.policy, "fast or exact")->check(CLI::IsMember({"fast", "exact"}));

    std::optional<int> genus;
    auto genus_option = [&](CLI::App* sub) { sub->add_option("--genus,-g", genus, "genus"); };

    RankArgs rank_args;
    CLI::App* rank = app.add_subcommand("rank", "certify the rank of mu_A");
    genus_option(rank);
    rank->add_option("--matrix", rank_args.matrix_file, "certify a binary matrix dump instead");

    RangeArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "certify a range of genera");
    sweep->add_option("--g-min", sweep_args.g_min)->required();
    sweep->add_option("--g-max", sweep_args.g_max)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "compare closed forms with Wronskians");
    genus_option(oracle);

    InductionArgs ind_args;
    CLI::App* induction = app.add_subcommand("induction", "verify the induction step");
    induction->add_option("--g-min", ind_args.g_min);
    induction->add_option("--g-max", ind_args.g_max);
    induction->add_option("--a", ind_args.a, "parameter value, repeatable")->take_all();

    CLI::App* classes = app.add_subcommand("classes", "divisor-class formulas in genus 12");

    CLI::App* curve = app.add_subcommand("curve", "curve utilities");
    curve->require_subcommand(1);
    CLI::App* validate = curve->add_subcommand("validate", "validate parameters and node positions");
    genus_option(validate);

    ExportArgs export_args;
    CLI::App* matrix = app.add_subcommand("matrix", "matrix utilities");
    matrix->require_subcommand(1);
    CLI::App* exp = matrix->add_subcommand("export", "export mu_A as JSON and optionally binary");
    genus_option(exp);
    exp->add_option("--out,-o", export_args.out, "JSON output file (default stdout)");
    exp->add_option("--binary", export_args.binary, "binary dump file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (rank->parsed()) {
            rank_args.genus = genus;
            return cmd_rank(rank_args);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (oracle->parsed()) return cmd_oracle(genus);
        if (induction->parsed()) return cmd_induction(ind_args);
        if (classes->parsed()) return cmd_classes();
        if (validate->parsed()) return cmd_curve_validate(genus);
        if (exp->parsed()) {
            export_args.genus = genus;
            return cmd_matrix_export(export_args);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return exit_claim;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
