"""Exact checks of half-derivations and transposed Poisson structures."""

import json
from fractions import Fraction

from . import _core
from ._core import ParseError

__version__ = _core.version.split()[-1]

__all__ = [
    "ParseError",
    "make_algebra",
    "check_lie",
    "half_derivations",
    "delta_derivations",
    "tpa_space",
    "verify_tpa",
    "tp_product",
    "catalog",
    "verify_all",
]


def _enc(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, default=str)
    return value


def _params(params):
    return json.dumps({k: str(Fraction(v)) if not isinstance(v, str) else v for k, v in (params or {}).items()})


def make_algebra(family, n, **params):
    """Bracket table of a catalog family; missing parameters take their defaults."""
    return json.loads(_core.make_algebra(family, n, _params(params)))


def check_lie(algebra):
    return json.loads(_core.check_lie(_enc(algebra)))


def delta_derivations(algebra, delta):
    return json.loads(_core.delta_derivations(_enc(algebra), str(Fraction(delta))))


def half_derivations(algebra):
    return delta_derivations(algebra, Fraction(1, 2))


def tpa_space(algebra, constraints=False):
    return json.loads(_core.tpa_space(_enc(algebra), constraints))


def verify_tpa(algebra, product):
    return json.loads(_core.verify_tpa(_enc(algebra), _enc(product)))


def tp_product(family, n, variant, tp_params, params=None):
    """Catalog TP table. Without explicit algebra params a point on the variant's branch is used."""
    return json.loads(_core.tp_product(family, n, variant, _params(params), _params(tp_params)))


def catalog(n_s=5, n_r=3):
    return json.loads(_core.catalog(n_s, n_r))


def verify_all(n_s="4..5", n_r="3..3", seed=1, threads=0):
    return json.loads(_core.verify_all(str(n_s), str(n_r), seed, threads))
