"""Group-invariant curve classes and toric limits on moduli of pointed rational curves."""

import json as _json

try:
    from . import _m0n as _core
except ImportError:  # development layout: extension built next to the package
    import _m0n as _core

basis_size = _core.basis_size
divisor_count = _core.divisor_count


def _loads(s):
    return _json.loads(s)


def _dumps(d):
    return _json.dumps(d)


def cyclic_class(n, generator):
    return _loads(_core.cyclic_class(n, generator))


def dihedral_class(n, g1, g2):
    return _loads(_core.dihedral_class(n, g1, g2))


def cyclic_effective(n, generator):
    return _loads(_core.cyclic_effective(n, generator))


def expand(curve_class):
    return _loads(_core.expand(_dumps(curve_class)))


def dual_expression(n, labels):
    return _loads(_core.dual_expression(n, labels))


def class_of_expression(expression):
    return _loads(_core.class_of_expression(_dumps(expression)))


def deficiency(expression):
    return _core.deficiency_of(_dumps(expression))


def kappa(curve_class):
    return _core.kappa(_dumps(curve_class))


def psi(curve_class):
    return _core.psi(_dumps(curve_class))


def kollar(curve_class):
    return _core.kollar(_dumps(curve_class))


def seek_effective(expression, max_level=4, node_budget=5_000_000, restart=True):
    return _loads(_core.seek_effective(_dumps(expression), max_level, node_budget, restart))


def keel_relations(n, f, g):
    return _loads(_core.keel_relations(n, f, g))


def degenerate(family, steps=False):
    return _loads(_core.degenerate(_dumps(family), steps))


def lift(cycle, curve_class):
    return _loads(_core.lift(_dumps(cycle), _dumps(curve_class)))


def stabilizer_order(curve_class, exhaustive=False, timeout_ms=0):
    return _core.stabilizer_order(_dumps(curve_class), exhaustive, timeout_ms)


def expression_text(expression):
    return _core.fcurve_to_text(_dumps(expression))
