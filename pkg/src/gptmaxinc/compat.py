"""Compatibility and degree of compatibility of two-outcome measurements.

Two effects f, g are compatible iff some effect p satisfies

    f >= p,   g >= p,   1 + p >= f + g,   p >= 0,

and then ``p, f - p, g - p, 1 + p - f - g`` is the outcome table of a joint
measurement. Every program here places p's affine coefficients ``(a, b)``
among the LP variables and imposes the inequalities at the vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lp
from .exactmath import HALF, ONE, ZERO, RatVector, combination, dot
from .gpt import Effect, complement, mix, same_space


@dataclass(frozen=True)
class JointWitness:
    """Effect ``p`` making ``f`` and ``g`` jointly measurable."""

    p: Effect
    f: Effect
    g: Effect

    @property
    def table(self) -> dict:
        """Vertex values of the four outcomes (1,1), (1,2), (2,1), (2,2)."""
        p, f, g = self.p.values, self.f.values, self.g.values
        return {
            "p": p,
            "f-p": tuple(a - b for a, b in zip(f, p)),
            "g-p": tuple(a - b for a, b in zip(g, p)),
            "1+p-f-g": tuple(ONE + c - a - b for a, b, c in zip(f, g, p)),
        }

    def is_valid(self) -> bool:
        return joint_conditions_hold(self.f.values, self.g.values, self.p.values)


def joint_conditions_hold(f, g, p) -> bool:
    """Check the joint-measurability inequalities vertex by vertex."""
    for fv, gv, pv in zip(f, g, p):
        if not (pv >= 0 and fv >= pv and gv >= pv and ONE + pv >= fv + gv):
            return False
    return len(f) == len(g) == len(p)


@dataclass(frozen=True)
class DegComResult:
    lambda_star: Fraction
    witness: JointWitness
    mu1: Fraction = HALF
    mu2: Fraction = HALF

    def is_valid(self) -> bool:
        f, g = self.witness.f, self.witness.g
        return HALF <= self.lambda_star <= ONE and self.witness.is_valid() and f.space == g.space


@dataclass(frozen=True)
class DualCertificate:
    """Optimum of the dual program and, when positive, its normalized form.

    ``weights[i]`` are probability vectors over the vertices with barycenters
    ``points[i]``; together with ``nu`` and ``eta`` they satisfy
    ``nu z1 + (1 - nu) z2 = eta z3 + (1 - eta) z4``. All of these are
    ``None`` when ``beta == 0``.
    """

    beta: Fraction
    raw: tuple
    nu: Optional[Fraction] = None
    eta: Optional[Fraction] = None
    weights: Optional[tuple] = None
    points: Optional[tuple] = None

    def objective(self, f: Effect, g: Effect) -> Fraction:
        """``2 (eta (f+g-1)(z3) - nu f(z1) - (1 - nu) g(z2))``."""
        z1, z2, z3, _ = self.points
        a1, b1 = f.affine()
        a2, b2 = g.affine()
        fz = lambda z: dot(a1, z) + b1  # noqa: E731
        gz = lambda z: dot(a2, z) + b2  # noqa: E731
        return 2 * (self.eta * (fz(z3) + gz(z3) - 1) - self.nu * fz(z1) - (1 - self.nu) * gz(z2))

    def balanced(self) -> bool:
        z1, z2, z3, z4 = self.points
        lhs = tuple(self.nu * a + (1 - self.nu) * b for a, b in zip(z1, z2))
        rhs = tuple(self.eta * a + (1 - self.eta) * b for a, b in zip(z3, z4))
        return lhs == rhs


def _p_row(v: RatVector, offset: int) -> dict:
    """Coefficients of ``p(v) = a.v + b`` with ``(a, b)`` starting at ``offset``."""
    row = {offset + k: c for k, c in enumerate(v) if c}
    row[offset + len(v)] = ONE
    return row


def _p_values(K, x, offset: int) -> tuple:
    n = K.ambient_dim
    a, b = x[offset:offset + n], x[offset + n]
    return tuple(dot(a, v) + b for v in K.vertices)


def _merge(*rows: dict) -> dict:
    out: dict = {}
    for r in rows:
        for k, c in r.items():
            out[k] = out.get(k, ZERO) + c
    return out


def check_compatible(f: Effect, g: Effect) -> Optional[JointWitness]:
    """Return a joint witness, or ``None`` when ``m_f`` and ``m_g`` are incompatible."""
    K = same_space(f, g)
    n = K.ambient_dim
    prog = lp.LinearProgram(n + 1)
    for v, fv, gv in zip(K.vertices, f.values, g.values):
        P = _p_row(v, 0)
        prog.add(P, "<=", fv)
        prog.add(P, "<=", gv)
        prog.add(P, ">=", fv + gv - ONE)
        prog.add(P, ">=", ZERO)
    out = lp.solve(prog)
    if not out.optimal:
        return None
    return JointWitness(Effect(K, _p_values(K, out.solution, 0)), f, g)


def degcom_half_program(f: Effect, g: Effect, lam=None) -> lp.LinearProgram:
    """Constraints for mixing both measurements with the fair coin.

    Variables are ``(lambda, a, b)``. With ``lam`` given, lambda is pinned and
    the program becomes a feasibility question.
    """
    K = same_space(f, g)
    n = K.ambient_dim
    prog = lp.LinearProgram(n + 2, objective={0: ONE} if lam is None else None)
    if lam is None:
        prog.bound(0, ZERO, ONE)
    else:
        prog.bound(0, lam, lam)
    for v, fv, gv in zip(K.vertices, f.values, g.values):
        P = _p_row(v, 1)
        neg_p = {k: -c for k, c in P.items()}
        prog.add(_merge({0: fv - HALF}, neg_p), ">=", -HALF)
        prog.add(_merge({0: gv - HALF}, neg_p), ">=", -HALF)
        prog.add(_merge(P, {0: -(fv + gv - ONE)}), ">=", ZERO)
        prog.add(P, ">=", ZERO)
    return prog


def degcom_half(f: Effect, g: Effect) -> DegComResult:
    """Largest lambda making both measurements compatible after fair-coin mixing."""
    K = same_space(f, g)
    out = lp.solve(degcom_half_program(f, g))
    if not out.optimal:  # pragma: no cover - lambda = 1/2 is always feasible
        raise RuntimeError(f"degree-of-compatibility LP returned {out.status}")
    lam = out.value
    p = Effect(K, _p_values(K, out.solution, 1))
    return DegComResult(lam, JointWitness(p, mix(f, lam, HALF), mix(g, lam, HALF)))


def degcom_free(f: Effect, g: Effect) -> DegComResult:
    """Degree of compatibility with the coin biases chosen freely.

    With ``t_i = (1 - lambda) mu_i`` the problem is linear in
    ``(lambda, t1, t2, a, b)``.
    """
    K = same_space(f, g)
    n = K.ambient_dim
    prog = lp.LinearProgram(n + 4, objective={0: ONE})
    prog.bound(0, ZERO, ONE)
    prog.nonneg(1, 2)
    prog.add({0: ONE, 1: ONE}, "<=", ONE)
    prog.add({0: ONE, 2: ONE}, "<=", ONE)
    for v, fv, gv in zip(K.vertices, f.values, g.values):
        P = _p_row(v, 3)
        neg_p = {k: -c for k, c in P.items()}
        prog.add(_merge({0: fv, 1: ONE}, neg_p), ">=", ZERO)
        prog.add(_merge({0: gv, 2: ONE}, neg_p), ">=", ZERO)
        prog.add(_merge(P, {0: -(fv + gv), 1: -ONE, 2: -ONE}), ">=", -ONE)
        prog.add(P, ">=", ZERO)
    out = lp.solve(prog)
    if not out.optimal:  # pragma: no cover
        raise RuntimeError(f"degree-of-compatibility LP returned {out.status}")
    lam, t1, t2 = out.solution[:3]
    if lam < 1:
        mu1, mu2 = t1 / (1 - lam), t2 / (1 - lam)
    else:
        mu1 = mu2 = HALF
    p = Effect(K, _p_values(K, out.solution, 3))
    return DegComResult(lam, JointWitness(p, mix(f, lam, mu1), mix(g, lam, mu2)), mu1, mu2)


def dual_beta(f: Effect, g: Effect) -> DualCertificate:
    """Solve the dual program over unnormalized vertex measures ``u1..u4``.

    ``u4`` is the slack measure expressing ``u1 + u2 - u3 >= 0`` as functionals
    on affine functions: equality of the homogenized barycentric sums.
    """
    K = same_space(f, g)
    V, n = K.num_vertices, K.ambient_dim
    nv = 4 * V
    obj = [ZERO] * nv
    for i in range(V):
        obj[i] = -f.values[i]
        obj[V + i] = -g.values[i]
        obj[2 * V + i] = f.values[i] + g.values[i] - ONE
    prog = lp.LinearProgram(nv, objective=obj)
    prog.nonneg(*range(nv))
    prog.add([ONE] * (2 * V) + [ZERO] * (2 * V), "<=", 2)
    signs = (ONE, ONE, -ONE, -ONE)
    for k in range(n + 1):
        row = []
        for s in signs:
            row += [s * (v[k] if k < n else ONE) for v in K.vertices]
        prog.add(row, "=", ZERO)
    out = lp.solve(prog)
    if not out.optimal:  # pragma: no cover - zero is feasible, sums are bounded
        raise RuntimeError(f"dual LP returned {out.status}")
    x = out.solution
    u = tuple(tuple(x[j * V:(j + 1) * V]) for j in range(4))
    beta = out.value
    if beta <= 0:
        return DualCertificate(beta, u)
    total = sum(u[0]) + sum(u[1])
    if total != 2:
        u = tuple(tuple(2 * w / total for w in uj) for uj in u)
        beta = 2 * beta / total
    masses = [sum(uj) for uj in u]
    weights, points = [], []
    for uj, m in zip(u, masses):
        w = tuple(c / m for c in uj) if m else (ONE,) + (ZERO,) * (V - 1)
        weights.append(w)
        points.append(combination(w, K.vertices))
    return DualCertificate(beta, u, masses[0] / 2, masses[2] / 2, tuple(weights), tuple(points))


def verify_duality(f: Effect, g: Effect) -> bool:
    """Whether ``beta == (1 - lambda*) / lambda*`` holds exactly."""
    lam = degcom_half(f, g).lambda_star
    beta = dual_beta(f, g).beta
    return beta == (ONE - lam) / lam


def complement_variants(f: Effect, g: Effect) -> list:
    cf, cg = complement(f), complement(g)
    return [(f, g), (cf, g), (f, cg), (cf, cg)]
