"""Exact tritangent computations for genus-4 space sextics.

Configurations, bases, curves and reports are plain dicts and lists in the
JSON shapes used by the command-line tool; large integers and rationals are
decimal strings.
"""

import json

from . import _core
from ._core import (
    DegenerateConfigurationError,
    GenericityError,
    ParseError,
    ResourceLimitError,
    SexticError,
    delta1_bidegree,
    fixture_names,
    pullback_bidegree,
)

__all__ = [
    "DegenerateConfigurationError",
    "GenericityError",
    "ParseError",
    "ResourceLimitError",
    "SexticError",
    "branch_curve",
    "census",
    "delta1_bidegree",
    "disc_degree",
    "fixture",
    "fixture_names",
    "pullback_bidegree",
    "search",
    "sextic_basis",
    "to_ambient",
    "validate",
    "verify",
]


def _enc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate(config):
    """{"ok", "condition", "detail"} for a configuration dict."""
    return json.loads(_core.validate(_enc(config)))


def census(config, planes=False, jobs=1):
    """Census report: {"s", "real", "totallyReal", "classes": [...]}."""
    return json.loads(_core.census(_enc(config), planes, jobs))


def sextic_basis(config):
    """Integral basis {"u", "v", "w"} of a configuration as exponent maps."""
    return json.loads(_core.sextic_basis(_enc(config)))


def branch_curve(basis, method="groebner"):
    """Branch curve c(t, W), monic in t^6, keyed by "i,j" for t^i W^j."""
    return json.loads(_core.branch_curve(_enc(basis), method))


def to_ambient(c):
    """The pair {"Q", "K"} of a branch curve."""
    return json.loads(_core.to_ambient(_enc(c)))


def verify(qk, plane):
    """Tritangency status of a plane given as four rationals."""
    if not isinstance(plane, str):
        plane = ",".join(str(x) for x in plane)
    return json.loads(_core.verify(_enc(qk), plane))


def search(s, count, seed, height=20, jobs=1):
    return json.loads(_core.search(s, count, seed, height, jobs))


def disc_degree(kind, role, samples=700, held_out=20, jobs=1):
    return json.loads(_core.disc_degree(kind, role, samples, held_out, jobs))


def fixture(name):
    """Input data of a bundled example."""
    return json.loads(_core.fixture_input(name))
