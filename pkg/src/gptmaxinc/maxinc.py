"""Maximal incompatibility: parallelogram certificates, search and discrimination.

A pair of effects is maximally incompatible (degree of compatibility 1/2)
iff there are points ``x00, x10, x01, x11`` with ``x_ij`` in the face where
``f = i`` and ``g = j`` and ``x00 + x11 = x10 + x01``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from .exactmath import ONE, ZERO, affine_rank, combination, sub, vec
from .gpt import Effect, OutsideStateSpace, StateSpace, evaluate, level_face, same_space
from .polytope import Face, _bits

ROLES = ("x00", "x10", "x01", "x11")


@dataclass(frozen=True)
class MaxIncCertificate:
    x00: tuple
    x10: tuple
    x01: tuple
    x11: tuple
    F0: Face
    F1: Face
    G0: Face
    G1: Face
    f: Effect
    g: Effect

    @property
    def points(self) -> tuple:
        return self.x00, self.x10, self.x01, self.x11

    def verify(self) -> bool:
        """Re-check the certificate from scratch with exact arithmetic."""
        expected = {"x00": (0, 0), "x10": (1, 0), "x01": (0, 1), "x11": (1, 1)}
        for name, x in zip(ROLES, self.points):
            try:
                vals = (evaluate(self.f, x), evaluate(self.g, x))
            except OutsideStateSpace:
                return False
            if vals != expected[name]:
                return False
        mid = tuple(a + b for a, b in zip(self.x00, self.x11))
        if mid != tuple(a + b for a, b in zip(self.x10, self.x01)):
            return False
        return affine_rank(list(self.points)) == 2


@dataclass(frozen=True)
class DiscriminationTask:
    E0: tuple
    E1: tuple

    def __init__(self, E0, E1):
        object.__setattr__(self, "E0", tuple(vec(x) for x in E0))
        object.__setattr__(self, "E1", tuple(vec(x) for x in E1))


@dataclass(frozen=True)
class ForcedJoint:
    """Values a joint measurement would need on a certificate's four points."""

    points: tuple
    table: dict
    discriminator_exists: bool


def _square_points(K: StateSpace, masks: Sequence[int]) -> Optional[tuple]:
    """Points of ``conv`` of each vertex subset with ``x00 + x11 = x10 + x01``.

    ``masks`` lists the vertex sets for ``x00, x10, x01, x11``.
    """
    idx = [_bits(m) for m in masks]
    sizes = [len(i) for i in idx]
    nv = sum(sizes)
    prog = lp.LinearProgram(nv)
    prog.nonneg(*range(nv))
    offsets = [0]
    for s in sizes[:-1]:
        offsets.append(offsets[-1] + s)
    for off, s in zip(offsets, sizes):
        prog.add({off + k: ONE for k in range(s)}, "=", ONE)
    signs = (ONE, -ONE, -ONE, ONE)
    for c in range(K.ambient_dim):
        row = {}
        for off, ids, s in zip(offsets, idx, signs):
            for k, i in enumerate(ids):
                v = K.vertices[i][c]
                if v:
                    row[off + k] = s * v
        prog.add(row, "=", ZERO)
    out = lp.solve(prog)
    if not out.optimal:
        return None
    pts = []
    for off, ids in zip(offsets, idx):
        w = out.solution[off:off + len(ids)]
        pts.append(combination(w, [K.vertices[i] for i in ids]))
    return tuple(pts)


def check_pair_maxinc(f: Effect, g: Effect) -> Optional[MaxIncCertificate]:
    """Parallelogram certificate for ``(f, g)``, or ``None`` if not maximal."""
    K = same_space(f, g)
    F0, F1 = level_face(f, 0), level_face(f, 1)
    G0, G1 = level_face(g, 0), level_face(g, 1)
    masks = (F0.mask & G0.mask, F1.mask & G0.mask, F0.mask & G1.mask, F1.mask & G1.mask)
    if not all(masks):
        return None
    pts = _square_points(K, masks)
    if pts is None:
        return None
    return MaxIncCertificate(*pts, F0, F1, G0, G1, f, g)


def _separating_effect(K: StateSpace, zero_mask: int, one_mask: int) -> Optional[Effect]:
    """Effect equal to 0 on one vertex set and 1 on another, if any."""
    n = K.ambient_dim
    prog = lp.LinearProgram(n + 1)
    for i, v in enumerate(K.vertices):
        row = {k: c for k, c in enumerate(v) if c}
        row[n] = ONE
        if zero_mask >> i & 1:
            prog.add(row, "=", ZERO)
        elif one_mask >> i & 1:
            prog.add(row, "=", ONE)
        else:
            prog.add(row, ">=", ZERO)
            prog.add(row, "<=", ONE)
    out = lp.solve(prog)
    if not out.optimal:
        return None
    a, b = out.solution[:n], out.solution[n]
    return Effect(K, tuple(sum((x * y for x, y in zip(a, v)), ZERO) + b for v in K.vertices))


def find_maxinc(K: StateSpace):
    """Search the face lattice for a maximally incompatible pair.

    Returns ``(f, g, certificate)`` for the first hit in face order, else
    ``None``. Candidate level faces ``(F0, F1, G0, G1)`` are screened
    combinatorially before any LP is solved, and LP results are memoized.
    """
    masks = [F.mask for F in K.faces]
    effect_cache: dict = {}
    square_cache: dict = {}

    def effect_for(a: int, b: int):
        key = (a, b)
        if key not in effect_cache:
            effect_cache[key] = _separating_effect(K, a, b)
        return effect_cache[key]

    pairs = [(a, b) for a in masks for b in masks if not a & b]
    for A, B in pairs:
        f = None
        for C, D in pairs:
            if not (A & C and B & C and A & D and B & D):
                continue
            if f is None:
                f = effect_for(A, B)
                if f is None:
                    break
            quad = (A & C, B & C, A & D, B & D)
            if quad not in square_cache:
                square_cache[quad] = _square_points(K, quad)
            pts = square_cache[quad]
            if pts is None:
                continue
            g = effect_for(C, D)
            if g is None:
                continue
            cert = check_pair_maxinc(f, g)
            if cert is None:  # pragma: no cover - implied by the square LP
                raise RuntimeError("square LP succeeded but the pair check failed")
            return f, g, cert
    return None


def cross_section(cert: MaxIncCertificate) -> list:
    """Vertices ``x00, x10, x11, x01`` of the parallelogram ``K`` cuts out.

    The plane through ``x00, x10, x01`` is intersected with ``K`` by LP and
    the section is checked to lie in the parallelogram; a warning is issued
    if it does not.
    """
    if not cert.verify():
        raise ValueError("invalid maximal-incompatibility certificate")
    lo_a, hi_a, lo_b, hi_b = section_extent(cert)
    if not (lo_a >= 0 and hi_a <= 1 and lo_b >= 0 and hi_b <= 1):
        warnings.warn("the plane section of K is larger than the certificate parallelogram")
    return [cert.x00, cert.x10, cert.x11, cert.x01]


def section_extent(cert: MaxIncCertificate) -> tuple:
    """Ranges of ``(alpha, beta)`` over ``K`` meet ``x00 + alpha d1 + beta d2``.

    ``d1 = x10 - x00`` and ``d2 = x01 - x00``; the certificate parallelogram
    is exactly the unit square in these coordinates.
    """
    K = cert.f.space
    V, n = K.num_vertices, K.ambient_dim
    d1, d2 = sub(cert.x10, cert.x00), sub(cert.x01, cert.x00)
    out = []
    for var, sign in ((V, -1), (V, 1), (V + 1, -1), (V + 1, 1)):
        prog = lp.LinearProgram(V + 2, objective={var: sign})
        prog.nonneg(*range(V))
        prog.add([ONE] * V + [ZERO, ZERO], "=", ONE)
        for c in range(n):
            prog.add([v[c] for v in K.vertices] + [-d1[c], -d2[c]], "=", cert.x00[c])
        res = lp.solve(prog)
        out.append(sign * res.value)
    return tuple(out)


def find_discriminator(K: StateSpace, task: DiscriminationTask) -> Optional[Effect]:
    """Effect vanishing on ``task.E0`` and equal to 1 on ``task.E1``, if one exists."""
    for x in task.E0 + task.E1:
        if len(x) != K.ambient_dim or not K.contains(x):
            raise OutsideStateSpace(f"point {tuple(str(c) for c in x)} is not in the state space")
    n = K.ambient_dim
    prog = lp.LinearProgram(n + 1)
    for target, pts in ((ZERO, task.E0), (ONE, task.E1)):
        for x in pts:
            prog.add(list(x) + [ONE], "=", target)
    for v in K.vertices:
        prog.add(list(v) + [ONE], ">=", ZERO)
        prog.add(list(v) + [ONE], "<=", ONE)
    out = lp.solve(prog)
    if not out.optimal:
        return None
    a, b = out.solution[:n], out.solution[n]
    return Effect(K, tuple(sum((x * y for x, y in zip(a, v)), ZERO) + b for v in K.vertices))


def forced_table(f_vals: Sequence[Fraction], g_vals: Sequence[Fraction]) -> dict:
    """Joint-measurement values pinned by the inequalities where f, g are 0/1.

    ``p`` is squeezed between ``max(0, f + g - 1)`` and ``min(f, g)``; the
    two bounds meet whenever both values are 0 or 1.
    """
    p = []
    for fv, gv in zip(f_vals, g_vals):
        lo, hi = max(ZERO, fv + gv - ONE), min(fv, gv)
        if lo != hi:
            raise ValueError("joint value is not forced at this point")
        p.append(lo)
    return {
        "p": tuple(p),
        "f-p": tuple(fv - pv for fv, pv in zip(f_vals, p)),
        "g-p": tuple(gv - pv for gv, pv in zip(g_vals, p)),
        "1+p-f-g": tuple(ONE + pv - fv - gv for fv, gv, pv in zip(f_vals, g_vals, p)),
    }


def joint_would_discriminate(f: Effect, g: Effect) -> Optional[ForcedJoint]:
    """Outcome table a joint measurement of a maximal pair would need.

    Returns ``None`` unless ``(f, g)`` has a parallelogram certificate.
    On the certificate points the table is 0/1-valued, so the first outcome
    would discriminate ``{x00, x10, x01}`` from ``{x11}``; that is checked to
    be infeasible for any effect.
    """
    cert = check_pair_maxinc(f, g)
    if cert is None:
        return None
    pts = cert.points
    table = forced_table([evaluate(f, x) for x in pts], [evaluate(g, x) for x in pts])
    task = DiscriminationTask(pts[:3], pts[3:])
    exists = find_discriminator(f.space, task) is not None
    return ForcedJoint(pts, table, exists)
