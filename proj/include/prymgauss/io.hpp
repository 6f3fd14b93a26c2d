#pragma once

#include "prymgauss/classes.hpp"
#include "prymgauss/curve.hpp"
#include "prymgauss/gauss_map.hpp"
#include "prymgauss/induction.hpp"
#include "prymgauss/rank.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace prymgauss {

using json = nlohmann::ordered_json;

/// {"genus": g, "convention": "paper"|"script", "a1": [...], "a2": [...]}.
/// Entries are rational strings; JSON integers are accepted, floats are not.
/// Throws ValidationError on malformed input.
CurveParams params_from_json(const json& j);
CurveParams load_params_file(const std::filesystem::path& path);
json params_to_json(const CurveParams& p);

/// {"genus", "convention", "layout": {...}, "rows": [[rational strings]]}.
json matrix_to_json(const GaussMatrix& m);

/// Binary matrix dump, all integers little-endian:
///   8 bytes  magic "PGMATRX1"
///   u32      genus
///   u32      rows
///   u32      cols
///   rows*cols entries, row-major: u32 byte length n, then n ASCII bytes
///            of the canonical decimal "p" or "p/q".
void write_matrix_binary(std::ostream& out, int genus, const RationalMatrix& m);

struct MatrixDump {
    int genus = 0;
    RationalMatrix entries;
};

/// Throws std::runtime_error on a truncated or malformed dump.
MatrixDump read_matrix_binary(std::istream& in);

/// FNV-1a (64-bit) of the binary dump.
std::uint64_t matrix_checksum(int genus, const RationalMatrix& m);

json certificate_to_json(const RankCertificate& c, bool timing);
json induction_to_json(const InductionReport& r);
json divisor_to_json(const DivisorClass& d);

/// All class-algebra results keyed by formula name.
json classes_to_json();

}  // namespace prymgauss
