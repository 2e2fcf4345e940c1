"""Exact Hurwitz numbers, Hodge integrals and simple-Hurwitz identities."""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetExceeded, Error, FormatError, PreconditionError

__all__ = [
    "BudgetExceeded",
    "Error",
    "FormatError",
    "PreconditionError",
    "hodge_integral",
    "hurwitz_number",
    "hurwitz_table",
    "run_suite",
    "search",
    "simple_series_coeff",
    "suite_names",
    "wexpr",
]


def hurwitz_number(g, alpha, method="cutjoin"):
    """H^g_alpha; method is oracle, cutjoin or elsv."""
    return Fraction(_core.hurwitz_number(g, list(alpha), method))


def hurwitz_table(d_max, g_max, method="cutjoin"):
    rows = json.loads(_core.hurwitz_table(d_max, g_max, method))
    for row in rows:
        row["value"] = Fraction(row["value"])
    return rows


def hodge_integral(g, theta, k=0):
    """<tau_theta lambda_k>_g; genus >= 2 primitives are fitted on demand."""
    return Fraction(_core.hodge_integral(g, sorted(theta), k))


def wexpr(g, n):
    """D^n H~_g as {"laurent": {exp: coeff}, "log": {...}} with Fraction values."""
    raw = json.loads(_core.wexpr(g, n))
    return {slot: {int(e): Fraction(c) for e, c in terms.items()} for slot, terms in raw.items()}


def simple_series_coeff(g, n, d):
    """[x^d] D^n H~_g."""
    return Fraction(_core.simple_series_coeff(g, n, d))


def suite_names():
    return list(_core.suite_names())


def run_suite(name, d_max=-1, r_max=-1):
    return json.loads(_core.run_suite(name, d_max, r_max))


def search(family=None, d_check=10):
    """Null space of a family of D-derivative products; the genus-3 family by default."""
    text = "" if family is None else json.dumps(family)
    return json.loads(_core.search(text, d_check))
