"""Exact generalized radii of rational polytopes.

Bodies are sequences of points; coordinates may be int, Fraction or a
rational string such as "-3/4". Floats are rejected so that every result
stays exact. Every number returned is a fractions.Fraction.
"""

from fractions import Fraction
from numbers import Rational

from . import _minkradii as _core
from ._minkradii import MinkradiiError

__all__ = [
    "MinkradiiError",
    "are_mutually_concentric",
    "asymmetry",
    "canonical",
    "chain_names",
    "check_breadth_split",
    "check_radius_ratios",
    "check_ratio_bounds",
    "circumradius",
    "complete_nonconcentric_pair",
    "completeness",
    "decompose_triangle_blend",
    "diameter",
    "eval_chain",
    "extract",
    "inradius",
    "is_constant_width",
    "is_minkowski_concentric",
    "is_mirrored_concentric",
    "jung_ratio",
    "planar_triangle_conditions",
    "sandwich_pair",
    "simplex_complete",
    "simplex_equality_conditions",
    "standard_centered_simplex",
    "sym_gauge_norm",
    "triangle_blend_pair",
    "validate",
]


def _num(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"exact coordinates required, got {type(x).__name__}")
    if isinstance(x, Rational):
        return str(Fraction(x))
    if isinstance(x, str):
        return str(Fraction(x))
    raise TypeError(f"cannot read {x!r} as a rational")


def _point(p):
    return [_num(x) for x in p]


def _body(points):
    return [_point(p) for p in points]


def canonical(k):
    """Vertices of conv(k) in canonical (sorted) order."""
    return _core.canonical(_body(k))


def circumradius(k, c):
    """R(K, C) with its translation, or None when K fits in no dilate of C."""
    return _core.circumradius(_body(k), _body(c))


def inradius(k, c):
    return _core.inradius(_body(k), _body(c))


def diameter(k, c):
    return _core.diameter(_body(k), _body(c))


def asymmetry(k):
    """(s(K), a Minkowski center)."""
    return _core.asymmetry(_body(k))


def jung_ratio(k, c):
    return _core.jung_ratio(_body(k), _body(c))


def sym_gauge_norm(z, c):
    return _core.sym_gauge_norm(_point(z), _body(c))


def is_constant_width(k, c):
    return _core.is_constant_width(_body(k), _body(c))


def chain_names():
    return _core.chain_names()


def eval_chain(name, k, c):
    return _core.eval_chain(name, _body(k), _body(c))


def is_minkowski_concentric(k, c):
    return _core.is_minkowski_concentric(_body(k), _body(c))


def is_mirrored_concentric(k, c):
    return _core.is_mirrored_concentric(_body(k), _body(c))


def are_mutually_concentric(k, c, mirrored=False):
    return _core.are_mutually_concentric(_body(k), _body(c), mirrored)


def simplex_complete(s, c):
    return _core.simplex_complete(_body(s), _body(c))


def completeness(k, c):
    """"complete", "not-complete" or "undecidable" for K with respect to C."""
    return _core.completeness(_body(k), _body(c))


def check_radius_ratios(k, c):
    return _core.check_radius_ratios(_body(k), _body(c))


def check_ratio_bounds(k, c):
    return _core.check_ratio_bounds(_body(k), _body(c))


def check_breadth_split(c, r, directions):
    return _core.check_breadth_split(_body(c), _num(r), _body(directions))


def simplex_equality_conditions(s, c):
    return _core.simplex_equality_conditions(_body(s), _body(c))


def planar_triangle_conditions(s, c):
    return _core.planar_triangle_conditions(_body(s), _body(c))


def decompose_triangle_blend(s, c):
    """(lambda, t) with C = lambda S + (1 - lambda)(-S) + t, or None."""
    return _core.decompose_triangle_blend(_body(s), _body(c))


def extract(k, c):
    """Optimal containment certificate for K in t + R(K, C) C."""
    return _core.extract(_body(k), _body(c))


def validate(k, container, contacts, normals, weights):
    return _core.validate(_body(k), _body(container), _body(contacts), _body(normals), [_num(w) for w in weights])


def standard_centered_simplex(n):
    return _core.standard_centered_simplex(n)


def sandwich_pair(n, lam, mu, outer=False):
    return _core.sandwich_pair(n, _num(lam), _num(mu), outer)


def complete_nonconcentric_pair(n):
    return _core.complete_nonconcentric_pair(n)


def triangle_blend_pair(lam):
    return _core.triangle_blend_pair(_num(lam))
