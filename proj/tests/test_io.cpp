#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymgauss/io.hpp"
#include "prymgauss/params.hpp"
#include "test_support.hpp"

#include <random>
#include <sstream>

using namespace prymgauss;

TEST_CASE("parameter file") {
    const json j = json::parse(R"({"genus": 5, "convention": "script", "a1": ["1", "2", "3", 4], "a2": ["-1/2", "3/4", "5", "7/9"]})");
    const CurveParams p = params_from_json(j);
    CHECK(p.genus == 5);
    CHECK(p.convention == Convention::script);
    CHECK(p.a1[3] == 4);
    CHECK(p.a2[0] == Rational(-1, 2));
    CHECK(params_from_json(params_to_json(p)).a2 == p.a2);
    CHECK(params_to_json(p).dump() ==
          R"({"genus":5,"convention":"script","a1":["1","2","3","4"],"a2":["-1/2","3/4","5","7/9"]})");

    CHECK_THROWS_AS(params_from_json(json::parse(R"({"genus": 5, "a1": [1.5], "a2": []})")), ValidationError);
    CHECK_THROWS_AS(params_from_json(json::parse(R"({"genus": 5, "a1": ["1/0"], "a2": []})")), ValidationError);
    CHECK_THROWS_AS(params_from_json(json::parse(R"({"a1": [], "a2": []})")), ValidationError);
    CHECK_THROWS_AS(params_from_json(json::parse(R"({"genus": 5, "convention": "maple", "a1": [], "a2": []})")),
                    ValidationError);
    CHECK(params_from_json(json::parse(R"({"genus": 4, "a1": [], "a2": []})")).convention == Convention::paper);
}

TEST_CASE("binary matrix dump round-trips") {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 10; ++n) {
        RationalMatrix m(1 + rng() % 6, 1 + rng() % 6);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = prymgauss::testing::random_rational(rng, 1 << 30, 1 << 20);
        std::stringstream ss;
        write_matrix_binary(ss, 7, m);
        const MatrixDump d = read_matrix_binary(ss);
        CHECK(d.genus == 7);
        CHECK(d.entries == m);
    }
}

TEST_CASE("binary dump layout is fixed") {
    RationalMatrix m(1, 2);
    m(0, 0) = Rational(-3, 2);
    m(0, 1) = 0;
    std::ostringstream os;
    write_matrix_binary(os, 4, m);
    const std::string expected("PGMATRX1\x04\0\0\0\x01\0\0\0\x02\0\0\0\x04\0\0\0-3/2\x01\0\0\0" "0", 33);
    CHECK(os.str() == expected);

    std::istringstream truncated(expected.substr(0, 25));
    CHECK_THROWS_AS(read_matrix_binary(truncated), std::runtime_error);
    std::istringstream wrong("NOTAMATRIX");
    CHECK_THROWS_AS(read_matrix_binary(wrong), std::runtime_error);
}

TEST_CASE("matrix JSON") {
    const GaussMatrix m = assemble_matrix(PrymBinaryCurve::build(paper_params(4, Convention::script)));
    const json j = matrix_to_json(m);
    CHECK(j["genus"] == 4);
    CHECK(j["convention"] == "script");
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0].size() == 15);
    CHECK(j["layout"]["tau_infinity_column"] == 14);
    CHECK(j["layout"]["row_pairs"][2] == json::array({2, 3}));
    CHECK(parse_rational(j["rows"][1][7].get<std::string>()) == m.entries(1, 7));
}

TEST_CASE("certificate JSON") {
    RankCertificate c;
    c.genus = 12;
    c.rank = c.max_possible = 55;
    c.is_maximal = true;
    c.method = RankMethod::modular;
    c.primes_used = {2147483647};
    c.elapsed = std::chrono::milliseconds(12);
    CHECK(certificate_to_json(c, false).dump() ==
          R"({"genus":12,"rank":55,"max_possible":55,"is_maximal":true,"method":"modular","primes_used":[2147483647]})");
    CHECK(certificate_to_json(c, true)["elapsed_ms"] == 12);
}

TEST_CASE("classes JSON") {
    const json j = classes_to_json();
    CHECK(j["c1_target"]["lambda"] == "37");
    CHECK(j["c1_target"]["delta_ram_0"] == "-9");
    CHECK(j["c1_F1"]["delta_ram_0"] == "-1/4");
    CHECK(j["c1_source"]["delta_ram_0"] == "-5/2");
    CHECK(j["c1_degeneracy"]["interior"]["lambda"] == "1485");
    CHECK(j["c1_degeneracy"]["class"]["delta_ram_0"] == "-715/2");
    CHECK(j["c1_degeneracy"]["slope"] == "27/4");
    CHECK(j["kodaira"]["nonnegative"] == true);
    CHECK(j.size() == 5);
}
