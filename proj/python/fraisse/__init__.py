"""Finite structures, epimorphisms and projective Fraisse family checks.

Structures, sequence specs and reports are plain dicts mirroring the JSON
used by the command line tool; the extension module does the actual work.
"""

import json as _json

from . import _core

__all__ = [
    "chain", "arc_level", "cantor_level", "level",
    "validate", "relationalize",
    "epimorphisms", "is_epimorphism", "amalgamate",
    "check_jpp", "check_ap", "check_fundseq", "check_rigidity",
    "certify", "quotient", "quotient_dot",
]


def chain(k):
    return _json.loads(_core.chain(k))


def arc_level(n):
    return _json.loads(_core.arc_level(n))


def cantor_level(depth, n):
    return _json.loads(_core.cantor_level(depth, n))


def level(spec, n):
    """Level n of a sequence spec such as {"family": "arc"} or {"graph": ...}."""
    return _json.loads(_core.level(_json.dumps(spec), n))


def validate(structure):
    return _json.loads(_core.validate(_json.dumps(structure)))


def relationalize(structure):
    return _json.loads(_core.relationalize(_json.dumps(structure)))


def epimorphisms(source, target):
    return _core.epimorphisms(_json.dumps(source), _json.dumps(target))


def is_epimorphism(source, target, mapping):
    return _core.is_epimorphism(_json.dumps(source), _json.dumps(target), mapping)


def amalgamate(b, a, phi, c, psi):
    """Complete chain epimorphisms phi: b -> a and psi: c -> a to a span.

    Returns (d, theta, rho) with phi[theta[x]] == psi[rho[x]] for all x.
    """
    d, theta, rho = _core.amalgamate(
        _json.dumps(b), _json.dumps(a), phi, _json.dumps(c), psi)
    return _json.loads(d), theta, rho


def check_jpp(family, pair_bound=3, search_bound=9):
    return _json.loads(_core.check_jpp(_json.dumps(family), pair_bound, search_bound))


def check_ap(family, size_bound=4, search_bound=8):
    return _json.loads(_core.check_ap(_json.dumps(family), size_bound, search_bound))


def check_fundseq(sequence, family, depth=3, member_bound=4, factor_depth=6):
    return _json.loads(_core.check_fundseq(
        _json.dumps(sequence), _json.dumps(family), depth, member_bound,
        factor_depth))


def check_rigidity(sequence, depth=4):
    return _json.loads(_core.check_rigidity(_json.dumps(sequence), depth))


def certify(sequence, rel="R", property="reflexive", depth=4):
    return _json.loads(_core.certify(_json.dumps(sequence), rel, property, depth))


def quotient(sequence, level):
    return _json.loads(_core.quotient(_json.dumps(sequence), level, "json"))


def quotient_dot(sequence, level):
    return _core.quotient(_json.dumps(sequence), level, "dot")
