#include "prymgauss/classes.hpp"
#include "prymgauss/curve.hpp"
#include "prymgauss/gauss_map.hpp"
#include "prymgauss/induction.hpp"
#include "prymgauss/io.hpp"
#include "prymgauss/params.hpp"
#include "prymgauss/prime_field.hpp"
#include "prymgauss/rank.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>

namespace py = pybind11;
using namespace prymgauss;

namespace {

// Structured results cross the boundary as the same JSON the CLI prints.
py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const std::string& x : xs) out.push_back(parse_rational(x));
    return out;
}

RationalMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rational(rows[r][c]);
    }
    return m;
}

std::vector<std::vector<std::string>> rows_of(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(to_string(m(r, c)));
    return out;
}

CertifyOptions options(const std::string& policy, std::uint64_t prime_offset, unsigned threads) {
    CertifyOptions o;
    o.policy = parse_rank_policy(policy);
    o.prime_offset = prime_offset;
    o.threads = threads == 0 ? 1 : threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Gaussian maps of Prym-canonical binary curves";
    m.attr("__version__") = PRYMGAUSS_VERSION;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<PrymBinaryCurve>(m, "Curve")
        .def_property_readonly("genus", &PrymBinaryCurve::genus)
        .def_property_readonly("k", &PrymBinaryCurve::k)
        .def_property_readonly("convention", [](const PrymBinaryCurve& c) { return std::string(to_string(c.convention())); })
        .def("a", [](const PrymBinaryCurve& c, int i, int eps) { return to_string(c.a(i, eps)); }, py::arg("i"),
             py::arg("eps"))
        .def("A", [](const PrymBinaryCurve& c, int eps) { return to_string(c.A(eps)); }, py::arg("eps"))
        .def("d", [](const PrymBinaryCurve& c, int eps) { return to_string(c.d(eps)); }, py::arg("eps"))
        .def("alpha", [](const PrymBinaryCurve& c, int i, int eps) { return c.alpha(i, eps).to_string(); },
             py::arg("i"), py::arg("eps"))
        .def("params", [](const PrymBinaryCurve& c) { return to_python(params_to_json(c.params())); })
        .def("node_check",
             [](const PrymBinaryCurve& c) {
                 const NodeCheckReport r = node_check(c);
                 return py::make_tuple(r.ok, r.failures);
             })
        .def("project_node", [](const PrymBinaryCurve& c) { return project_node(c); });

    m.def(
        "build_curve",
        [](int genus, const std::vector<std::string>& a1, const std::vector<std::string>& a2,
           const std::string& convention) {
            return PrymBinaryCurve::build(genus, parse_all(a1), parse_all(a2), parse_convention(convention));
        },
        py::arg("genus"), py::arg("a1"), py::arg("a2"), py::arg("convention") = "paper");
    m.def(
        "paper_params",
        [](int genus, const std::string& convention) {
            return to_python(params_to_json(paper_params(genus, parse_convention(convention))));
        },
        py::arg("genus"), py::arg("convention") = "paper");
    m.def(
        "seeded_params",
        [](int genus, std::uint64_t seed, const std::string& convention) {
            return to_python(params_to_json(seeded_params(genus, seed, parse_convention(convention))));
        },
        py::arg("genus"), py::arg("seed"), py::arg("convention") = "paper");

    py::class_<GaussMatrix>(m, "GaussMatrix")
        .def_readonly("genus", &GaussMatrix::genus)
        .def_property_readonly("convention", [](const GaussMatrix& g) { return std::string(to_string(g.convention)); })
        .def_property_readonly("shape", [](const GaussMatrix& g) { return py::make_tuple(g.entries.rows(), g.entries.cols()); })
        .def("entry", [](const GaussMatrix& g, std::size_t r, std::size_t c) {
            if (r >= g.entries.rows() || c >= g.entries.cols()) throw py::index_error();
            return to_string(g.entries(r, c));
        })
        .def("rows", [](const GaussMatrix& g) { return rows_of(g.entries); })
        .def("row_pairs", [](const GaussMatrix& g) { return g.layout.row_pairs; })
        .def("checksum", [](const GaussMatrix& g) { return matrix_checksum(g.genus, g.entries); })
        .def("to_json", [](const GaussMatrix& g) { return to_python(matrix_to_json(g)); })
        .def("write_binary", [](const GaussMatrix& g, const std::string& path) {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + path);
            write_matrix_binary(out, g.genus, g.entries);
        });

    m.def("assemble_matrix", &assemble_matrix, py::arg("curve"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    py::class_<RankCertificate>(m, "RankCertificate")
        .def_readonly("genus", &RankCertificate::genus)
        .def_readonly("rows", &RankCertificate::rows)
        .def_readonly("cols", &RankCertificate::cols)
        .def_readonly("rank", &RankCertificate::rank)
        .def_readonly("max_possible", &RankCertificate::max_possible)
        .def_readonly("is_maximal", &RankCertificate::is_maximal)
        .def_property_readonly("method", [](const RankCertificate& c) { return std::string(to_string(c.method)); })
        .def_readonly("primes_used", &RankCertificate::primes_used)
        .def_readonly("modular_ranks", &RankCertificate::modular_ranks)
        .def_property_readonly("elapsed_ms", [](const RankCertificate& c) { return c.elapsed.count(); })
        .def("to_json", [](const RankCertificate& c, bool timing) { return to_python(certificate_to_json(c, timing)); },
             py::arg("timing") = false)
        .def("__repr__", [](const RankCertificate& c) {
            return "<RankCertificate genus=" + std::to_string(c.genus) + " rank=" + std::to_string(c.rank) + "/" +
                   std::to_string(c.max_possible) + " method=" + std::string(to_string(c.method)) + ">";
        });

    m.def(
        "certify",
        [](const GaussMatrix& g, const std::string& policy, std::uint64_t prime_offset, unsigned threads) {
            const CertifyOptions o = options(policy, prime_offset, threads);
            py::gil_scoped_release release;
            return certify(g.entries, g.genus, o);
        },
        py::arg("matrix"), py::arg("policy") = "fast", py::arg("prime_offset") = 0, py::arg("threads") = 1);
    m.def(
        "rank_exact", [](const GaussMatrix& g) { return rank_exact(g.entries); }, py::arg("matrix"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "rank_exact", [](const std::vector<std::vector<std::string>>& rows) { return rank_exact(matrix_from_rows(rows)); },
        py::arg("rows"));
    m.def(
        "rank_mod_p", [](const GaussMatrix& g, std::uint64_t p) { return rank_mod_p(g.entries, p); }, py::arg("matrix"),
        py::arg("p"));
    m.def(
        "rank_mod_p",
        [](const std::vector<std::vector<std::string>>& rows, std::uint64_t p) {
            return rank_mod_p(matrix_from_rows(rows), p);
        },
        py::arg("rows"), py::arg("p"));
    m.def("word_primes", [] {
        const auto ps = word_primes();
        return std::vector<std::uint64_t>(ps.begin(), ps.end());
    });

    m.def(
        "verify_det5",
        [](int genus, const std::string& a) { return to_python(induction_to_json(verify_det5(genus, parse_rational(a)))); },
        py::arg("genus"), py::arg("a"));
    m.def("classes", [] { return to_python(classes_to_json()); });
}
