"""State spaces, effects and two-outcome measurements.

An effect is stored by its values at the vertices of the state space. Affine
functions on a polytope are determined by those values, and every linear
inequality between affine functions holds on the polytope iff it holds at
the vertices, which is what the LP layers rely on.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from .exactmath import ONE, ZERO, RatVector, dot, rat, solve_linear, vec
from .polytope import EMPTY_FACE, Face, Polytope, build, contains


class NotAnEffect(ValueError):
    """Some vertex value lies outside [0, 1]."""


class InconsistentValues(ValueError):
    """Vertex values that no affine function takes."""


class StateSpaceMismatch(ValueError):
    pass


class OutsideStateSpace(ValueError):
    pass


@dataclass(frozen=True)
class StateSpace:
    body: Polytope

    @classmethod
    def from_vertices(cls, vertices: Iterable[Iterable]) -> "StateSpace":
        return cls(build(vertices))

    @property
    def vertices(self) -> tuple:
        return self.body.vertices

    @property
    def num_vertices(self) -> int:
        return len(self.body.vertices)

    @property
    def ambient_dim(self) -> int:
        return self.body.ambient_dim

    @property
    def dim(self) -> int:
        return self.body.dim

    @property
    def faces(self) -> tuple:
        return self.body.faces

    def contains(self, x: Sequence) -> bool:
        return contains(self.body, x)


def _space(K) -> StateSpace:
    return K if isinstance(K, StateSpace) else StateSpace(K)


@dataclass(frozen=True)
class Effect:
    """Affine function on ``space`` with values in [0, 1], given at the vertices."""

    space: StateSpace
    values: RatVector

    def __post_init__(self):
        if len(self.values) != self.space.num_vertices:
            raise ValueError("one value per vertex required")
        bad = [v for v in self.values if v < 0 or v > 1]
        if bad:
            raise NotAnEffect(f"vertex value {bad[0]} outside [0, 1]")

    def affine(self) -> tuple[RatVector, Fraction]:
        """One ``(a, b)`` with ``a.v + b`` equal to the value at every vertex.

        Unique only when the state space is full-dimensional.
        """
        return self._affine

    @cached_property
    def _affine(self):
        sol = _interpolate(self.space, self.values)
        if sol is None:
            raise InconsistentValues("effect values have no affine extension")
        return sol

    def __call__(self, x: Sequence) -> Fraction:
        return evaluate(self, x)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _interpolate(K: StateSpace, values: Sequence[Fraction]):
    n = K.ambient_dim
    A = [tuple(v) + (ONE,) for v in K.vertices]
    fam = solve_linear(A, list(values))
    if fam is None:
        return None
    x = fam.particular
    return x[:n], x[n]


def effect_from_functional(K, a: Sequence, b) -> Effect:
    """The effect ``x -> a.x + b``."""
    K = _space(K)
    a, b = vec(a), rat(b)
    if len(a) != K.ambient_dim:
        raise ValueError(f"dimension mismatch: functional of dim {len(a)} on R^{K.ambient_dim}")
    return Effect(K, tuple(dot(a, v) + b for v in K.vertices))


def effect_from_vertex_values(K, values: Sequence) -> Effect:
    K = _space(K)
    values = vec(values)
    if len(values) != K.num_vertices:
        raise ValueError(f"expected {K.num_vertices} vertex values, got {len(values)}")
    if _interpolate(K, values) is None:
        raise InconsistentValues("no affine function takes these vertex values")
    return Effect(K, values)


def constant_effect(K, c) -> Effect:
    K = _space(K)
    return Effect(K, (rat(c),) * K.num_vertices)


def evaluate(f: Effect, x: Sequence) -> Fraction:
    """Value of ``f`` at a point of its state space."""
    x = vec(x)
    if not f.space.contains(x):
        raise OutsideStateSpace(f"point {tuple(str(c) for c in x)} is not in the state space")
    a, b = f.affine()
    return dot(a, x) + b


def complement(f: Effect) -> Effect:
    return Effect(f.space, tuple(ONE - v for v in f.values))


def level_face(f: Effect, level) -> Face:
    """Face where ``f`` equals 0 or 1; :data:`EMPTY_FACE` when none."""
    level = rat(level)
    if level not in (ZERO, ONE):
        raise ValueError("level must be 0 or 1")
    mask = 0
    for i, v in enumerate(f.values):
        if v == level:
            mask |= 1 << i
    return f.space.body.face_from_mask(mask) if mask else EMPTY_FACE


def same_space(*effects: Effect) -> StateSpace:
    K = effects[0].space
    for e in effects[1:]:
        if e.space != K:
            raise StateSpaceMismatch("effects live on different state spaces")
    return K


@dataclass(frozen=True)
class TwoOutcomeMeasurement:
    """``m_f = f delta_1 + (1 - f) delta_2``."""

    effect: Effect

    def distribution(self, x: Sequence) -> tuple[Fraction, Fraction]:
        p = evaluate(self.effect, x)
        return p, ONE - p


@dataclass(frozen=True)
class CoinToss:
    """State-independent measurement with probability ``bias`` for outcome 1."""

    bias: Fraction

    def __post_init__(self):
        object.__setattr__(self, "bias", rat(self.bias))
        if not 0 <= self.bias <= 1:
            raise ValueError("coin bias must lie in [0, 1]")

    def effect(self, K) -> Effect:
        return constant_effect(K, self.bias)


def mix(f: Effect, weight, coin: CoinToss | Fraction) -> Effect:
    """Effect of ``weight * m_f + (1 - weight) * coin``."""
    lam = rat(weight)
    mu = coin.bias if isinstance(coin, CoinToss) else rat(coin)
    return Effect(f.space, tuple(lam * v + (ONE - lam) * mu for v in f.values))
