"""Exact quasimodular forms of level one.

Forms are given as text specs such as ``"H8"``, ``"D^2 G2 - 1/6 G4"`` or
``"DELTA + S24.1"``, or as a path to a QuasiForm JSON file. Rationals come
back as :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _qprime
from ._qprime import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "decide",
    "decompose",
    "deligne",
    "expand",
    "finite_check",
    "macmahon",
    "main",
    "parse",
    "signstats",
]


def expand(spec, precision=20, convention="paper"):
    """Coefficients c(0), ..., c(precision) as Fractions."""
    data = json.loads(_qprime.expand(spec, precision, convention))
    return [Fraction(c) for c in data["coeffs"]]


def parse(spec, convention="paper"):
    """Canonical QuasiForm as a dict with "eis", "cusp" and optional "const"."""
    return json.loads(_qprime.parse(spec, convention))


def decompose(spec, precision=60, convention="paper"):
    return json.loads(_qprime.decompose(spec, precision, convention))


def decide(spec, bound=100, include_small=False, convention="paper"):
    """Omega-tilde verdict together with the bounded Omega scan."""
    return json.loads(_qprime.decide(spec, bound, include_small, convention))


def finite_check(spec, primes=()):
    return json.loads(_qprime.finite_check(spec, list(primes)))


def macmahon(a_max, n_max):
    """Rows {"n", "M": [M_1(n), ...], ...} with integer values."""
    data = json.loads(_qprime.macmahon(a_max, n_max))
    for row in data["rows"]:
        row["M"] = [int(v) for v in row["M"]]
    return data


def signstats(spec, bound, grid=(), convention="paper"):
    return json.loads(_qprime.signstats(spec, bound, list(grid), convention))


def deligne(weight, bound):
    return json.loads(_qprime.deligne(weight, bound))


def main(args):
    """Runs the command line front end; returns (exit_code, stdout, stderr)."""
    return _qprime.run_cli(list(args))
