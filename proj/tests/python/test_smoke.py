from fractions import Fraction

import pytest

import prymgauss as pg


def test_version():
    assert pg.__version__ == "0.1.0"


def test_maple_genus12_is_bijective():
    curve = pg.curve_from_params(pg.paper_params(12, "script"))
    m = pg.assemble_matrix(curve)
    assert m.shape == (55, 55)
    cert = pg.certify(m)
    assert cert.rank == 55 and cert.is_maximal
    assert cert.method == "modular"


def test_golden_checksum_genus4():
    m = pg.assemble_matrix(pg.curve_from_params(pg.paper_params(4, "script")))
    assert m.checksum() == 0x86078EB42E275A47


def test_exact_and_modular_agree():
    m = pg.assemble_matrix(pg.curve_from_params(pg.seeded_params(7, 42)))
    exact = pg.rank_exact(m)
    assert exact == 15
    for p in pg.word_primes()[:3]:
        assert pg.rank_mod_p(m, p) <= exact
    assert pg.certify(m, policy="exact").method == "bareiss"


def test_rank_of_plain_rows():
    assert pg.rank_exact([[1, Fraction(1, 2)], [2, 1]]) == 1
    assert pg.rank_exact([["1", "0"], ["0", "-5/7"]]) == 2


def test_curve_accessors():
    c = pg.build_curve(5, [1, 2, 3, 4], [2, 4, 6, 8])
    assert c.genus == 5 and c.k == 2
    assert pg.fraction(c.A(1)) == 24
    ok, failures = c.node_check()
    assert ok and failures == []
    assert c.project_node().genus == 4


def test_invalid_parameters_raise():
    with pytest.raises(ValueError, match="repeats"):
        pg.build_curve(5, [1, 2, 3, 4], [2, 4, 6, 2])
    with pytest.raises(ValueError):
        pg.paper_params(13)


def test_induction_report():
    r = pg.verify_det5(14, Fraction(-5, 7))
    assert r["det5_nonzero"]
    assert r["scaled4x4_matches_paper"]
    assert r["tau_closed_form_negated"]


def test_classes():
    c = pg.classes()
    assert c["c1_target"]["lambda"] == "37"
    assert c["c1_degeneracy"]["interior"]["lambda"] == "1485"
