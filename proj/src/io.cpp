#include "prymgauss/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace prymgauss {

namespace {

Rational rational_from_json(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.dump());
    throw ValidationError(where + ": expected a rational string");
}

json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace

CurveParams params_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("parameter file must hold a JSON object");
    for (const char* key : {"genus", "a1", "a2"}) {
        if (!j.contains(key)) throw ValidationError(std::string("parameter file lacks \"") + key + "\"");
    }
    if (!j["genus"].is_number_integer()) throw ValidationError("\"genus\" must be an integer");
    CurveParams p;
    p.genus = j["genus"].get<int>();
    if (j.contains("convention")) {
        if (!j["convention"].is_string()) throw ValidationError("\"convention\" must be a string");
        p.convention = parse_convention(j["convention"].get<std::string>());
    }
    for (const char* key : {"a1", "a2"}) {
        const json& row = j[key];
        if (!row.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array");
        auto& out = std::string_view(key) == "a1" ? p.a1 : p.a2;
        for (std::size_t n = 0; n < row.size(); ++n) {
            out.push_back(rational_from_json(row[n], std::string(key) + "[" + std::to_string(n) + "]"));
        }
    }
    return p;
}

CurveParams load_params_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open parameter file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("parameter file " + path.string() + " is not valid JSON: " + e.what());
    }
    return params_from_json(j);
}

json params_to_json(const CurveParams& p) {
    return json{{"genus", p.genus},
                {"convention", std::string(to_string(p.convention))},
                {"a1", rationals(p.a1)},
                {"a2", rationals(p.a2)}};
}

json matrix_to_json(const GaussMatrix& m) {
    const MatrixLayout& l = m.layout;
    json pairs = json::array();
    for (const auto& [i, j] : l.row_pairs) pairs.push_back({i, j});
    json layout{{"rows", l.rows()},
                {"cols", l.cols()},
                {"row_pairs", pairs},
                {"nu1_columns", {l.nu_offset(1), l.nu_offset(1) + l.nu_block_width() - 1}},
                {"nu2_columns", {l.nu_offset(2), l.nu_offset(2) + l.nu_block_width() - 1}},
                {"tau_interior_columns", {l.tau_offset(), l.tau_offset() + std::size_t(m.genus) - 1}},
                {"tau_infinity_column", l.tau_infinity_column()}};
    json rows = json::array();
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(to_string(m.entries(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"genus", m.genus},
                {"convention", std::string(to_string(m.convention))},
                {"layout", layout},
                {"rows", rows}};
}

namespace {

constexpr char kMagic[8] = {'P', 'G', 'M', 'A', 'T', 'R', 'X', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
    const char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff), char((v >> 24) & 0xff)};
    out.write(b, 4);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("truncated matrix dump");
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 | std::uint32_t(b[3]) << 24;
}

}  // namespace

void write_matrix_binary(std::ostream& out, int genus, const RationalMatrix& m) {
    out.write(kMagic, sizeof kMagic);
    put_u32(out, std::uint32_t(genus));
    put_u32(out, std::uint32_t(m.rows()));
    put_u32(out, std::uint32_t(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string s = to_string(m(r, c));
            put_u32(out, std::uint32_t(s.size()));
            out.write(s.data(), std::streamsize(s.size()));
        }
    }
}

MatrixDump read_matrix_binary(std::istream& in) {
    char magic[8];
    if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kMagic)) {
        throw std::runtime_error("not a matrix dump (bad magic)");
    }
    MatrixDump d;
    d.genus = int(get_u32(in));
    const std::uint32_t rows = get_u32(in), cols = get_u32(in);
    d.entries = RationalMatrix(rows, cols);
    std::string s;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::uint32_t n = get_u32(in);
            s.resize(n);
            if (!in.read(s.data(), std::streamsize(n))) throw std::runtime_error("truncated matrix dump");
            try {
                d.entries(r, c) = parse_rational(s);
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error(std::string("bad entry in matrix dump: ") + e.what());
            }
        }
    }
    return d;
}

std::uint64_t matrix_checksum(int genus, const RationalMatrix& m) {
    std::ostringstream os;
    write_matrix_binary(os, genus, m);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

json certificate_to_json(const RankCertificate& c, bool timing) {
    json j{{"genus", c.genus},
           {"rank", c.rank},
           {"max_possible", c.max_possible},
           {"is_maximal", c.is_maximal},
           {"method", std::string(to_string(c.method))},
           {"primes_used", c.primes_used}};
    if (timing) j["elapsed_ms"] = c.elapsed.count();
    return j;
}

json induction_to_json(const InductionReport& r) {
    json cols = json::array();
    for (const auto& [i, j] : r.selected_columns) cols.push_back({i, j});
    return json{{"g", r.genus},
                {"parity", std::string(to_string(r.parity))},
                {"a", to_string(r.a)},
                {"node", r.node},
                {"selected_columns", cols},
                {"det5", to_string(r.det5)},
                {"det5_nonzero", r.det5_nonzero},
                {"scaled4x4_matches_paper", r.scaled4x4_matches_paper},
                {"scaled4x4_detail", r.scaled4x4_detail},
                {"tau_pair", {r.tau.pair.first, r.tau.pair.second}},
                {"tau_value", to_string(r.tau.computed)},
                {"tau_closed_form", to_string(r.tau.closed_form)},
                {"tau_closed_form_matches", r.tau_closed_form_matches},
                {"tau_closed_form_negated", r.tau.negated_match}};
}

json divisor_to_json(const DivisorClass& d) {
    return json{{"lambda", to_string(d.lambda())},
                {"delta_prime_0", to_string(d.delta_prime())},
                {"delta_second_0", to_string(d.delta_second())},
                {"delta_ram_0", to_string(d.delta_ram())}};
}

json classes_to_json() {
    const DivisorClass degeneracy = degeneracy_class();
    const KodairaReport k = kodaira_report();
    return json{
        {"c1_F1", divisor_to_json(hodge_c1(1))},
        {"c1_source", divisor_to_json(Rational(10) * hodge_c1(1))},
        {"c1_target", divisor_to_json(grr_c1(3, 2, true))},
        {"c1_degeneracy",
         {{"class", divisor_to_json(degeneracy)},
          {"interior", divisor_to_json(interior_part(degeneracy))},
          {"slope", to_string(boundary_slope(degeneracy))},
          {"note", "coefficients of further boundary classes are undetermined"}}},
        {"kodaira",
         {{"canonical", divisor_to_json(k.canonical)},
          {"koszul_divisor", divisor_to_json(k.koszul)},
          {"canonical_minus_koszul_over_28", divisor_to_json(k.difference)},
          {"nonnegative", k.nonnegative}}},
    };
}

}  // namespace prymgauss
