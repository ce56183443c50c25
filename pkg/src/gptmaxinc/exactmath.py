"""Exact rational scalars, vectors and dense linear algebra.

Scalars are :class:`fractions.Fraction` (always stored in lowest terms with a
positive denominator). Vectors are tuples of fractions and matrices are tuples
of row tuples, so every value is immutable and hashable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[RatVector, ...]

RationalLike = Union[Fraction, int, str]

_RATIONAL_TEXT = re.compile(r"^[+-]?\d+(/\d+)?$")

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def parse_rational(text: str) -> Fraction:
    """Parse the text form ``[sign]integer[/positive integer]``.

    Decimal or exponent notation is rejected so that no value can pass
    through a float on its way in.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be given as a string, got {text!r}")
    s = text.strip()
    if not _RATIONAL_TEXT.match(s):
        raise ValueError(f"malformed rational {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def to_float(x: Fraction) -> float:
    """Lossy conversion, for display only."""
    return float(x)


def rat(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(xs: Iterable[RationalLike]) -> RatVector:
    return tuple(rat(x) for x in xs)


def mat(rows: Iterable[Iterable[RationalLike]]) -> RatMatrix:
    out = tuple(vec(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def zeros(n: int) -> RatVector:
    return (ZERO,) * n


def unit(n: int, i: int) -> RatVector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def identity(n: int) -> RatMatrix:
    return tuple(unit(n, i) for i in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVector:
    _check_same_dim(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVector:
    _check_same_dim(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, u: Sequence[Fraction]) -> RatVector:
    return tuple(c * a for a in u)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_same_dim(u, v)
    return sum((a * b for a, b in zip(u, v)), ZERO)


def combination(weights: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> RatVector:
    """Return ``sum_i weights[i] * points[i]``."""
    if len(weights) != len(points) or not points:
        raise ValueError("weights and points must be nonempty and of equal length")
    n = len(points[0])
    acc = [ZERO] * n
    for w, p in zip(weights, points):
        if w:
            for k in range(n):
                acc[k] += w * p[k]
    return tuple(acc)


def matvec(A: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> RatVector:
    return tuple(dot(row, x) for row in A)


def transpose(A: Sequence[Sequence[Fraction]], cols: int | None = None) -> RatMatrix:
    if not A:
        return tuple(() for _ in range(cols or 0))
    return tuple(zip(*A))


def primitive_integer(v: Sequence[Fraction]) -> RatVector:
    """Scale a nonzero vector to coprime integer entries (same direction)."""
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(Fraction(x // g) for x in ints)


def _check_same_dim(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")


# ---------------------------------------------------------------------------
# Gaussian elimination
# ---------------------------------------------------------------------------

def rref(A: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` is a list of mutable rows and
    ``pivots`` the pivot column of each nonzero row, in order.
    """
    R = [list(map(Fraction, row)) for row in A]
    if not R:
        return R, []
    m, n = len(R), ncols if ncols is not None else len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                fac = R[i][c]
                R[i] = [a - fac * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: Sequence[Sequence[Fraction]]) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def null_space(A: Sequence[Sequence[Fraction]], ncols: int) -> list[RatVector]:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    if not A:
        return [unit(ncols, j) for j in range(ncols)]
    R, pivots = rref(A, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        x = [ZERO] * ncols
        x[j] = ONE
        for row, pc in zip(R, pivots):
            x[pc] = -row[j]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class SolutionFamily:
    """Solution set ``particular + span(null_basis)`` of a linear system.

    ``null_basis`` is empty when the solution is unique.
    """

    particular: RatVector
    null_basis: tuple[RatVector, ...] = ()

    @property
    def unique(self) -> bool:
        return not self.null_basis


def solve_linear(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                 ncols: int | None = None) -> SolutionFamily | None:
    """Solve ``A x = b`` exactly.

    Returns ``None`` when the system is inconsistent. ``ncols`` is needed
    only when ``A`` has no rows.
    """
    if len(A) != len(b):
        raise ValueError(f"dimension mismatch: {len(A)} rows but rhs of length {len(b)}")
    if not A:
        if ncols is None:
            raise ValueError("ncols required for an empty system")
        return SolutionFamily(zeros(ncols), tuple(unit(ncols, j) for j in range(ncols)))
    n = len(A[0]) if ncols is None else ncols
    if any(len(row) != n for row in A):
        raise ValueError("dimension mismatch: ragged coefficient matrix")
    aug = [list(row) + [rat(bi)] for row, bi in zip(A, b)]
    R, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    null = tuple(null_space(A, n))
    return SolutionFamily(tuple(x), null)


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of ``points``."""
    if not points:
        raise ValueError("affine_rank of an empty point list")
    p0 = points[0]
    if any(len(p) != len(p0) for p in points):
        raise ValueError("points of different dimensions")
    diffs = [sub(p, p0) for p in points[1:]]
    return rank(diffs) if diffs else 0


@dataclass(frozen=True)
class AffineFrame:
    """Coordinates on the affine hull of a point set.

    ``origin + basis^T y`` parametrizes the hull; ``to_local`` inverts it on
    the hull and ``equations`` (pairs ``(w, c)`` with ``w.x = c``) cut it out.
    """

    origin: RatVector
    basis: tuple[RatVector, ...]
    left_inverse: tuple[RatVector, ...]
    equations: tuple[tuple[RatVector, Fraction], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_local(self, x: Sequence[Fraction]) -> RatVector:
        d = sub(x, self.origin)
        return tuple(dot(row, d) for row in self.left_inverse)

    def to_ambient(self, y: Sequence[Fraction]) -> RatVector:
        x = list(self.origin)
        for c, b in zip(y, self.basis):
            if c:
                for k in range(len(x)):
                    x[k] += c * b[k]
        return tuple(x)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(dot(w, x) == c for w, c in self.equations)


def affine_frame(points: Sequence[Sequence[Fraction]]) -> AffineFrame:
    if not points:
        raise ValueError("affine frame of an empty point list")
    origin = tuple(points[0])
    n = len(origin)
    diffs = [sub(p, origin) for p in points[1:]]
    if diffs:
        R, pivots = rref(diffs, n)
        basis = tuple(tuple(R[i]) for i in range(len(pivots)))
    else:
        pivots, basis = [], ()
    # rows of an rref basis have an identity block on the pivot columns, so
    # reading off those coordinates inverts the parametrization on the hull
    left_inverse = tuple(unit(n, pc) for pc in pivots)
    normals = null_space(basis, n) if basis else [unit(n, j) for j in range(n)]
    equations = tuple((w, dot(w, origin)) for w in normals)
    return AffineFrame(origin, basis, left_inverse, equations)
