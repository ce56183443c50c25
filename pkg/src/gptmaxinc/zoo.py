"""Named state spaces and seeded random instances."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import ZERO, dot, vec
from .gpt import Effect, StateSpace


@dataclass(frozen=True)
class ZooEntry:
    name: str
    vertices: tuple
    note: str
    face_counts: tuple  # number of faces of dimension 0, 1, ..., dim
    effects: dict = field(default_factory=dict)  # name -> (a, b) as text


def _v(*rows):
    return tuple(tuple(str(c) for c in r) for r in rows)


def _e(a, b):
    return {"a": tuple(str(c) for c in a), "b": str(b)}


ZOO = {
    "square": ZooEntry(
        "square", _v((0, 0), (1, 0), (1, 1), (0, 1)),
        "unit square; the coordinate effects are maximally incompatible",
        (4, 4, 1), {"f": _e((1, 0), 0), "g": _e((0, 1), 0)}),
    "triangle": ZooEntry(
        "triangle", _v((0, 0), (1, 0), (0, 1)),
        "2-simplex; every pair of effects is compatible",
        (3, 3, 1), {"f": _e((1, 0), 0), "g": _e((0, 1), 0)}),
    "simplex3": ZooEntry(
        "simplex3", _v((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
        "3-simplex spanned by the standard basis of R^4; f = b1 + b2, g = b1 + b3",
        (4, 6, 4, 1), {"f": _e((1, 1, 0, 0), 0), "g": _e((1, 0, 1, 0), 0)}),
    "cube": ZooEntry(
        "cube", _v(*itertools.product((0, 1), repeat=3)),
        "unit cube",
        (8, 12, 6, 1), {"f": _e((1, 0, 0), 0), "g": _e((0, 1, 0), 0)}),
    "octahedron": ZooEntry(
        "octahedron", _v((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)),
        "double pyramid over a square; its maximal pair cuts the equatorial square",
        (6, 12, 8, 1),
        {"f": _e(("1/2", "1/2", 0), "1/2"), "g": _e(("1/2", "-1/2", 0), "1/2")}),
    "prism-square": ZooEntry(
        "prism-square",
        _v((1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0), (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)),
        "prism over a square; the 4-gon member of the polygon-prism family that "
        "approximates a cylinder",
        (8, 12, 6, 1),
        {"f": _e(("1/2", "1/2", 0), "1/2"), "g": _e(("1/2", "-1/2", 0), "1/2")}),
    "hexagon": ZooEntry(
        "hexagon", _v((2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)),
        "centrally symmetric hexagon; not a parallelogram, so no maximal pair",
        (6, 6, 1), {"f": _e(("1/4", 0), "1/2"), "g": _e((0, "1/4"), "1/2")}),
    "cut-pyramid": ZooEntry(
        "cut-pyramid",
        _v((0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 1, 0), (1, 2, 0),
           (1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 0, 1)),
        "cut-off pyramid with a square top face at x3 = 1 but no maximal pair",
        (9, 14, 7, 1), {"f": _e((0, 0, 1), 0), "g": _e(("1/2", 0, 0), 0)}),
}


def names() -> list:
    return list(ZOO)


def space(name: str) -> StateSpace:
    try:
        entry = ZOO[name]
    except KeyError:
        raise KeyError(f"unknown zoo entry {name!r}; known: {', '.join(ZOO)}") from None
    return StateSpace.from_vertices(entry.vertices)


def polygon_prism(sides: int, height=1) -> StateSpace:
    """Prism over a rational polygon inscribed in the unit circle.

    Stand-in for a cylinder. Vertices come from the rational parametrization
    of the circle, so the polygon is only approximately regular for
    ``sides`` other than 4.
    """
    if sides < 3:
        raise ValueError("a polygon needs at least 3 sides")
    pts = []
    for k in range(sides):
        # rational point near angle 2 pi k / sides via t = tan(angle / 2)
        ang = 2 * math.pi * k / sides
        if abs(math.cos(ang / 2)) < 1e-12:
            pts.append((Fraction(-1), ZERO))
            continue
        t = Fraction(math.tan(ang / 2)).limit_denominator(64)
        pts.append(((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)))
    h = vec([height])[0]
    return StateSpace.from_vertices([p + (ZERO,) for p in pts] + [p + (h,) for p in pts])


def _random_effect(rng: random.Random, K: StateSpace) -> Effect:
    n = K.ambient_dim
    facets = K.body.facets
    while True:
        if facets and rng.random() < 0.5:
            a = rng.choice(facets).normal
        else:
            a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
        vals = [dot(a, v) for v in K.vertices]
        lo, hi = min(vals), max(vals)
        if hi > lo:
            break
    vals = [(x - lo) / (hi - lo) for x in vals]
    mode = rng.random()
    if mode < 0.25:
        # shrink into a sub-interval so some level faces become empty
        s = Fraction(rng.randint(1, 3), 4)
        c = Fraction(rng.randint(0, 4 - int(s * 4)), 4)
        vals = [c + s * x for x in vals]
    return Effect(K, tuple(vals))


def random_space(rng: random.Random, max_dim: int = 3, max_vertices: int = 10) -> StateSpace:
    while True:
        d = rng.choice([1] + [2] * 2 + [3] * 3)
        d = min(d, max_dim)
        k = rng.randint(min(d + 2, max_vertices), max_vertices)
        pts = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(k)]
        K = StateSpace.from_vertices(pts)
        if K.dim >= 1:
            return K


def random_instance(seed: int, max_dim: int = 3, max_vertices: int = 10):
    """Seeded ``(K, f, g)`` with K a random lattice polytope."""
    rng = random.Random(seed)
    K = random_space(rng, max_dim, max_vertices)
    return K, _random_effect(rng, K), _random_effect(rng, K)


def random_instances(count: int, seed: int = 0, **kw) -> list:
    return [random_instance(seed * 100003 + i, **kw) for i in range(count)]


__all__ = ["ZOO", "ZooEntry", "names", "space", "polygon_prism", "random_instance",
           "random_instances", "random_space"]
