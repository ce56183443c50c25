"""Exact rational linear programming.

A two-phase tableau simplex over exact rationals with Bland's
rule for both the entering and the leaving variable, so it terminates on
degenerate problems (common for LPs assembled from polytope vertices).

Callers state problems in natural form: ``<=``, ``=`` and ``>=`` rows over
variables with optional lower/upper bounds. Conversion to standard form
(shifts, splitting of free variables, slacks, artificials) is internal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .exactmath import ZERO, ONE, rat

try:  # GMP rationals make pivoting several times faster; Fraction is the fallback
    from gmpy2 import mpq as _num
except ImportError:  # pragma: no cover
    _num = Fraction


def _out(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


RELATIONS = ("<=", "=", ">=")

Coeffs = Union[Sequence, Mapping[int, object]]


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: Fraction

    def holds_at(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((c * v for c, v in zip(self.coeffs, x) if c), ZERO)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass
class LinearProgram:
    """A linear program ``max objective.x`` subject to linear constraints.

    Variables are free unless bounds are given. With ``objective=None`` the
    problem is a pure feasibility question.
    """

    num_vars: int
    objective: Optional[tuple] = None
    constraints: list = field(default_factory=list)
    lower: list = field(default_factory=list)
    upper: list = field(default_factory=list)

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        if not self.lower:
            self.lower = [None] * self.num_vars
        if not self.upper:
            self.upper = [None] * self.num_vars
        if len(self.lower) != self.num_vars or len(self.upper) != self.num_vars:
            raise ValueError("bounds must have one entry per variable")
        if self.objective is not None:
            self.objective = self._dense(self.objective)

    def _dense(self, coeffs: Coeffs) -> tuple:
        if isinstance(coeffs, Mapping):
            row = [ZERO] * self.num_vars
            for j, c in coeffs.items():
                if not 0 <= j < self.num_vars:
                    raise ValueError(f"variable index {j} out of range")
                row[j] += rat(c)
            return tuple(row)
        if len(coeffs) != self.num_vars:
            raise ValueError(
                f"malformed constraint: {len(coeffs)} coefficients for {self.num_vars} variables")
        return tuple(rat(c) for c in coeffs)

    def add(self, coeffs: Coeffs, relation: str, rhs) -> None:
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        self.constraints.append(Constraint(self._dense(coeffs), relation, rat(rhs)))

    def set_objective(self, coeffs: Coeffs) -> None:
        self.objective = self._dense(coeffs)

    def bound(self, j: int, lower=None, upper=None) -> None:
        self.lower[j] = None if lower is None else rat(lower)
        self.upper[j] = None if upper is None else rat(upper)

    def nonneg(self, *indices: int) -> None:
        for j in indices:
            self.lower[j] = ZERO

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.num_vars:
            return False
        for j, v in enumerate(x):
            if self.lower[j] is not None and v < self.lower[j]:
                return False
            if self.upper[j] is not None and v > self.upper[j]:
                return False
        return all(c.holds_at(x) for c in self.constraints)


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    solution: Optional[tuple] = None
    value: Optional[Fraction] = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    """Dense simplex tableau; row 0 holds reduced costs ``z_j - c_j``."""

    def __init__(self, rows, rhs, basis, cost):
        self.rows = [[_num(x) for x in r] + [_num(b)] for r, b in zip(rows, rhs)]
        self.basis = list(basis)
        self.ncols = len(cost)
        self.obj = [-_num(c) for c in cost] + [_num(0)]
        self._price_out()

    def _price_out(self):
        for i, bv in enumerate(self.basis):
            c = self.obj[bv]
            if c:
                row = self.rows[i]
                self.obj = [a - c * b for a, b in zip(self.obj, row)]

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        inv = _num(1) / prow[c]
        if inv != 1:
            prow = [x * inv for x in prow]
            self.rows[r] = prow
        nz = [(k, x) for k, x in enumerate(prow) if x]
        for i, row in enumerate(self.rows):
            if i != r and row[c]:
                fac = row[c]
                for k, x in nz:
                    row[k] -= fac * x
        if self.obj[c]:
            fac = self.obj[c]
            for k, x in nz:
                self.obj[k] -= fac * x
        self.basis[r] = c

    def run(self, allowed: Sequence[bool]) -> str:
        """Iterate to optimality under Bland's rule."""
        while True:
            enter = next((j for j in range(self.ncols)
                          if allowed[j] and self.obj[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)

    @property
    def value(self) -> Fraction:
        return self.obj[-1]

    def primal(self) -> list:
        x = [ZERO] * self.ncols
        for i, bv in enumerate(self.basis):
            x[bv] = _out(self.rows[i][-1])
        return x


def solve(lp: LinearProgram) -> LpOutcome:
    """Solve ``lp`` exactly.

    Feasibility problems (no objective) stop after phase 1 and return the
    first feasible basic solution with value 0.
    """
    n = lp.num_vars
    for con in lp.constraints:
        if len(con.coeffs) != n:
            raise ValueError("malformed constraint dimensions")

    # Substitute x_j = shift_j + sum_k sign_k * y_k with y >= 0.
    columns: list[list[tuple[int, int]]] = []  # var j -> [(y index, sign)]
    shift = [ZERO] * n
    extra: list[tuple[dict, str, Fraction]] = []
    ny = 0
    for j in range(n):
        lo, hi = lp.lower[j], lp.upper[j]
        if lo is not None and hi is not None and lo > hi:
            return LpOutcome("infeasible")
        if lo is not None:
            shift[j] = lo
            columns.append([(ny, 1)])
            if hi is not None:
                extra.append(({ny: ONE}, "<=", hi - lo))
            ny += 1
        elif hi is not None:
            shift[j] = hi
            columns.append([(ny, -1)])
            ny += 1
        else:
            columns.append([(ny, 1), (ny + 1, -1)])
            ny += 2

    rows: list[tuple[list, str, Fraction]] = []
    for con in lp.constraints:
        r = [ZERO] * ny
        rhs = con.rhs
        for j, c in enumerate(con.coeffs):
            if c:
                rhs -= c * shift[j]
                for k, s in columns[j]:
                    r[k] += c * s
        rows.append((r, con.relation, rhs))
    for d, rel, rhs in extra:
        r = [ZERO] * ny
        for k, c in d.items():
            r[k] = c
        rows.append((r, rel, rhs))

    cost_y = [ZERO] * ny
    const = ZERO
    if lp.objective is not None:
        for j, c in enumerate(lp.objective):
            if c:
                const += c * shift[j]
                for k, s in columns[j]:
                    cost_y[k] += c * s

    # Normalize to nonnegative right-hand sides.
    norm = []
    for r, rel, rhs in rows:
        if rhs < 0:
            r = [-a for a in r]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        norm.append((r, rel, rhs))

    m = len(norm)
    n_slack = sum(1 for _, rel, _ in norm if rel != "=")
    n_art = sum(1 for _, rel, _ in norm if rel != "<=")
    total = ny + n_slack + n_art
    tab_rows, rhs_col, basis = [], [], []
    s_idx, a_idx = ny, ny + n_slack
    for r, rel, rhs in norm:
        full = r + [ZERO] * (n_slack + n_art)
        if rel == "<=":
            full[s_idx] = ONE
            basis.append(s_idx)
            s_idx += 1
        elif rel == ">=":
            full[s_idx] = -ONE
            s_idx += 1
            full[a_idx] = ONE
            basis.append(a_idx)
            a_idx += 1
        else:
            full[a_idx] = ONE
            basis.append(a_idx)
            a_idx += 1
        tab_rows.append(full)
        rhs_col.append(rhs)
    first_art = ny + n_slack

    phase1_cost = [ZERO] * first_art + [-ONE] * n_art
    tab = _Tableau(tab_rows, rhs_col, basis, phase1_cost)
    allowed = [True] * total
    tab.run(allowed)
    if tab.value != 0:
        return LpOutcome("infeasible")

    # Drive artificial variables out of the basis; drop redundant rows.
    keep = []
    for i in range(m):
        if tab.basis[i] >= first_art:
            col = next((k for k in range(first_art) if tab.rows[i][k] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    if len(keep) != m:
        tab.rows = [tab.rows[i] for i in keep]
        tab.basis = [tab.basis[i] for i in keep]
    for i in range(len(tab.rows)):
        tab.rows[i] = tab.rows[i][:first_art] + [tab.rows[i][-1]]
    tab.ncols = first_art

    if lp.objective is None:
        y = tab.primal()
        status, value = "optimal", ZERO
    else:
        tab.obj = [-_num(c) for c in cost_y] + [_num(0)] * (n_slack + 1)
        tab._price_out()
        status = tab.run([True] * first_art)
        if status == "unbounded":
            return LpOutcome("unbounded")
        y = tab.primal()

    x = []
    for j in range(n):
        v = shift[j]
        for k, s in columns[j]:
            v += s * y[k]
        x.append(v)
    x = tuple(x)
    if lp.objective is not None:
        value = sum((c * v for c, v in zip(lp.objective, x)), ZERO)
    if not lp.is_feasible_point(x):
        raise RuntimeError("simplex returned a point violating the constraints")
    return LpOutcome(status, x, value)
