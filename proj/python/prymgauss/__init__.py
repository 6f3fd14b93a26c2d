"""Exact Gaussian maps of Prym-canonical binary curves.

Rationals are passed as ``int``, ``fractions.Fraction`` or strings such as
``"-5/7"`` and returned as strings; :func:`fraction` converts them back.
"""

from fractions import Fraction

from . import _core
from ._core import (
    Curve,
    GaussMatrix,
    RankCertificate,
    ValidationError,
    assemble_matrix,
    certify,
    classes,
    rank_mod_p,
    word_primes,
)

__version__ = _core.__version__

__all__ = [
    "Curve",
    "GaussMatrix",
    "RankCertificate",
    "ValidationError",
    "assemble_matrix",
    "build_curve",
    "certify",
    "classes",
    "curve_from_params",
    "fraction",
    "paper_params",
    "rank_exact",
    "rank_mod_p",
    "seeded_params",
    "verify_det5",
    "word_primes",
]


def _q(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, str):
        return x
    raise TypeError(f"expected int, Fraction or str, got {type(x).__name__}")


def fraction(s):
    """Parse a rational string returned by the extension."""
    return Fraction(s.replace("−", "-"))


def build_curve(genus, a1, a2, convention="paper"):
    return _core.build_curve(genus, [_q(x) for x in a1], [_q(x) for x in a2], convention)


def curve_from_params(params):
    """Build from the dict form used in parameter files."""
    return build_curve(params["genus"], params["a1"], params["a2"], params.get("convention", "paper"))


def paper_params(genus, convention="paper"):
    return _core.paper_params(genus, convention)


def seeded_params(genus, seed, convention="paper"):
    return _core.seeded_params(genus, seed, convention)


def rank_exact(matrix):
    if isinstance(matrix, GaussMatrix):
        return _core.rank_exact(matrix)
    return _core.rank_exact([[_q(x) for x in row] for row in matrix])


def verify_det5(genus, a):
    return _core.verify_det5(genus, _q(a))
