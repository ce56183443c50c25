"""Rational polytopes given by vertices.

On construction the vertex list is made irredundant, the facets are computed
by the double description method inside the affine hull of the points, and
the full face lattice is enumerated from facet-vertex incidences. Everything
is cached on the immutable :class:`Polytope`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .exactmath import (
    ONE, ZERO, AffineFrame, RatVector, affine_frame, affine_rank, dot,
    primitive_integer, rank, rref, vec,
)


@dataclass(frozen=True)
class Halfspace:
    """The halfspace ``normal . x <= offset``."""

    normal: RatVector
    offset: Fraction

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("halfspace normal must be nonzero")

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        return self.offset - dot(self.normal, x)


@dataclass(frozen=True)
class Face:
    """A face of a polytope, identified by the sorted indices of its vertices.

    The empty face has no indices and dimension -1.
    """

    vertex_indices: tuple
    dim: int

    @property
    def is_empty(self) -> bool:
        return not self.vertex_indices

    @property
    def mask(self) -> int:
        m = 0
        for i in self.vertex_indices:
            m |= 1 << i
        return m

    def __contains__(self, i: int) -> bool:
        return i in self.vertex_indices

    def __len__(self) -> int:
        return len(self.vertex_indices)


EMPTY_FACE = Face((), -1)


def _bits(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def in_convex_hull(x: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> bool:
    """Exact LP test of ``x in conv(points)``."""
    if not points:
        return False
    k, n = len(points), len(x)
    prog = lp.LinearProgram(k)
    prog.nonneg(*range(k))
    prog.add([ONE] * k, "=", ONE)
    for c in range(n):
        prog.add([p[c] for p in points], "=", x[c])
    return lp.solve(prog).optimal


def _dedupe(points: Iterable[RatVector]) -> list:
    seen, out = set(), []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _irredundant(points: list) -> list:
    kept = list(points)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and in_convex_hull(kept[i], others):
            del kept[i]
        else:
            i += 1
    return kept


def _primitive(v: Sequence[Fraction]) -> RatVector:
    return primitive_integer(v) if any(v) else tuple(v)


def double_description(gens: Sequence[RatVector]) -> list:
    """Extreme rays of the pointed cone ``{h : g . h >= 0 for all g in gens}``.

    ``gens`` must span the ambient space. Returns ``(ray, zero_mask)`` pairs
    where bit ``i`` of ``zero_mask`` is set iff ``gens[i] . ray == 0``.
    """
    D = len(gens[0])
    # greedy choice of D linearly independent generators for the start cone
    start: list[int] = []
    for i, g in enumerate(gens):
        if rank([gens[j] for j in start] + [g]) == len(start) + 1:
            start.append(i)
            if len(start) == D:
                break
    if len(start) != D:
        raise ValueError("generators do not span the space")
    B = [list(gens[i]) for i in start]
    # columns of B^{-1} are the initial extreme rays
    aug = [row + [ONE if k == r else ZERO for k in range(D)] for r, row in enumerate(B)]
    R, _ = rref(aug, 2 * D)
    inv_cols = [tuple(R[r][D + c] for r in range(D)) for c in range(D)]
    rays = []
    start_mask = 0
    for i in start:
        start_mask |= 1 << i
    for c, col in enumerate(inv_cols):
        rays.append((_primitive(col), start_mask & ~(1 << start[c])))

    processed = start_mask
    for i, g in enumerate(gens):
        if processed >> i & 1:
            continue
        vals = [dot(g, r) for r, _ in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        new = [(rays[k][0], rays[k][1]) for k in pos]
        new += [(rays[k][0], rays[k][1] | (1 << i)) for k in zer]
        for p in pos:
            zp = rays[p][1]
            for q in neg:
                common = zp & rays[q][1]
                if bin(common).count("1") < D - 2:
                    continue
                if any(k != p and k != q and common & rays[k][1] == common
                       for k in range(len(rays))):
                    continue
                a, b = vals[p], -vals[q]
                ray = tuple(b * x + a * y for x, y in zip(rays[p][0], rays[q][0]))
                new.append((_primitive(ray), common | (1 << i)))
        rays = new
        processed |= 1 << i
    return rays


@dataclass(frozen=True, eq=False)
class Polytope:
    """Convex hull of finitely many rational points.

    Build instances with :func:`build`; the constructor expects already
    computed data.
    """

    vertices: tuple
    ambient_dim: int
    frame: AffineFrame
    facets: tuple
    facet_faces: tuple
    faces: tuple

    @property
    def dim(self) -> int:
        return self.frame.dim

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def face_points(self, face: Face) -> list:
        return [self.vertices[i] for i in face.vertex_indices]

    def face_from_mask(self, mask: int) -> Face:
        if not mask:
            return EMPTY_FACE
        idx = _bits(mask)
        return Face(idx, affine_rank([self.vertices[i] for i in idx]))

    def contains(self, x: Sequence[Fraction]) -> bool:
        return contains(self, x)

    def exposed_face(self, h: Halfspace) -> Face:
        return exposed_face(self, h)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return (f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, "
                f"facets={len(self.facets)}, faces={len(self.faces)})")


def build(vertices: Iterable[Iterable]) -> Polytope:
    """Build a polytope from points, dropping duplicates and non-vertices."""
    pts = [vec(v) for v in vertices]
    if not pts:
        raise ValueError("a polytope needs at least one point")
    n = len(pts[0])
    if n == 0 or any(len(p) != n for p in pts):
        raise ValueError("points must share one positive dimension")
    pts = _irredundant(_dedupe(pts))
    frame = affine_frame(pts)
    d = frame.dim

    facets: list[Halfspace] = []
    facet_masks: list[int] = []
    if d > 0:
        gens = [(ONE,) + frame.to_local(p) for p in pts]
        for ray, zmask in double_description(gens):
            h0, hy = ray[0], ray[1:]
            if not any(hy):
                continue
            normal = [ZERO] * n
            for coeff, row in zip(hy, frame.left_inverse):
                for k in range(n):
                    normal[k] -= coeff * row[k]
            # normal.x <= offset  <=>  h0 + hy.L(x - origin) >= 0
            offset = h0 - dot(hy, tuple(dot(row, frame.origin) for row in frame.left_inverse))
            prim = primitive_integer(normal)
            factor = next(p / q for p, q in zip(prim, normal) if q)
            facets.append(Halfspace(prim, offset * factor))
            facet_masks.append(zmask)
        order = sorted(range(len(facets)), key=lambda k: _bits(facet_masks[k]))
        facets = [facets[k] for k in order]
        facet_masks = [facet_masks[k] for k in order]

    full = (1 << len(pts)) - 1
    found = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for m in frontier:
            for fm in facet_masks:
                inter = m & fm
                if inter and inter not in found:
                    found.add(inter)
                    nxt.append(inter)
        frontier = nxt
    faces = []
    for m in found:
        idx = _bits(m)
        faces.append(Face(idx, affine_rank([pts[i] for i in idx])))
    faces.sort(key=lambda f: (f.dim, f.vertex_indices))
    facet_faces = tuple(Face(_bits(m), d - 1) for m in facet_masks)
    return Polytope(tuple(pts), n, frame, tuple(facets), facet_faces, tuple(faces))


def contains(K: Polytope, x: Sequence[Fraction]) -> bool:
    """Membership test against the cached H-representation."""
    if len(x) != K.ambient_dim:
        raise ValueError(f"dimension mismatch: point of dim {len(x)} in R^{K.ambient_dim}")
    x = vec(x)
    if not K.frame.contains(x):
        return False
    return all(h.slack(x) >= 0 for h in K.facets)


def exposed_face(K: Polytope, h: Halfspace) -> Face:
    """Face of ``K`` where the supporting halfspace ``h`` is tight."""
    if len(h.normal) != K.ambient_dim:
        raise ValueError("dimension mismatch between halfspace and polytope")
    vals = [dot(h.normal, v) for v in K.vertices]
    if max(vals) != h.offset:
        raise ValueError("halfspace does not support the polytope")
    mask = 0
    for i, v in enumerate(vals):
        if v == h.offset:
            mask |= 1 << i
    return K.face_from_mask(mask)


def faces(K: Polytope) -> tuple:
    return K.faces
