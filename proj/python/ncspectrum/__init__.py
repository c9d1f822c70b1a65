"""Exact K_0 and ideal-lattice computations for multi-matrix algebras.

Inputs are plain Python values (dicts, lists, ints, strings such as "3/5")
following the same JSON formats as the command-line tool; results are dicts.
Invalid input raises ``ValidationError`` (a ``ValueError``).
"""

import json as _json

from . import _core
from ._core import ValidationError

__all__ = [
    "ValidationError",
    "k0",
    "verify_theorem1",
    "colimit",
    "limit",
    "subdiagram",
    "ideals",
    "partial_ideal_check",
    "snf",
]


def _dump(value):
    return None if value is None else _json.dumps(value)


def k0(algebra, method="standard", stabilize=2, spec=None, nonunital=False):
    """K_0 group and rank-one block classes, by rank vectors or as a colimit."""
    return _json.loads(_core.k0(_dump(algebra), method, stabilize, _dump(spec), nonunital))


def verify_theorem1(algebra, hom=None, spec=None, stabilize=2, random_homs=0, seed=0):
    """Invariant factors, eta and naturality-square checks with witnesses."""
    return _json.loads(_core.verify_theorem1(_dump(algebra), _dump(hom), _dump(spec), stabilize, random_homs, seed))


def colimit(diagram):
    """Colimit of a covariant diagram of finitely presented abelian groups."""
    return _json.loads(_core.colimit(_dump(diagram)))


def limit(diagram):
    """Limit of a diagram of finite meet-semilattices."""
    return _json.loads(_core.limit(_dump(diagram)))


def subdiagram(algebra, spec=None):
    """Nodes (with atoms) and edges of the sampled subalgebra diagram."""
    return _json.loads(_core.subdiagram(_dump(algebra), _dump(spec)))


def ideals(algebra, spec=None):
    """Total ideals versus closed-set families and rotation-fixed partial ideals."""
    return _json.loads(_core.ideals(_dump(algebra), _dump(spec)))


def partial_ideal_check(file):
    """Compatibility, rotation-fixedness and reconstruction of a partial ideal."""
    return _json.loads(_core.partial_ideal_check(_dump(file)))


def snf(matrix):
    """Smith normal form with its certificate checks."""
    return _json.loads(_core.snf(_dump(matrix)))
