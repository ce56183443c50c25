"""Exact checks on Choi matrices and process-POVM effects.

Verifies, for explicitly given operators on a bipartite space
``H (x) H``, that four Choi matrices and two effect operators satisfy the
parallelogram condition for maximal incompatibility. Tensor indices use the
row-major convention ``(i, j) -> i * d + j``.

Complex entries are pairs ``(re, im)`` of fractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import ONE, ZERO, rat

Complex = tuple  # (re, im)


def _c(z) -> Complex:
    if isinstance(z, tuple) and len(z) == 2:
        return rat(z[0]), rat(z[1])
    return rat(z), ZERO


def _cmul(x: Complex, y: Complex) -> Complex:
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def _cdiv_real(x: Complex, r: Fraction) -> Complex:
    return x[0] / r, x[1] / r


def _conj(x: Complex) -> Complex:
    return x[0], -x[1]


class NotHermitian(ValueError):
    pass


@dataclass(frozen=True)
class HermitianMatrix:
    """Square matrix of exact complex rationals equal to its conjugate transpose."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_c(z) for z in row) for row in self.entries)
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise ValueError("hermitian matrix must be square and nonempty")
        for i in range(d):
            for j in range(i, d):
                if rows[i][j] != _conj(rows[j][i]):
                    raise NotHermitian(f"entry ({i},{j}) is not the conjugate of ({j},{i})")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def diag(cls, values: Sequence) -> "HermitianMatrix":
        d = len(values)
        return cls(tuple(tuple(rat(values[i]) if i == j else ZERO for j in range(d))
                         for i in range(d)))

    @classmethod
    def identity(cls, d: int) -> "HermitianMatrix":
        return cls.diag([ONE] * d)

    @classmethod
    def projector(cls, d: int, k: int) -> "HermitianMatrix":
        """``|k><k|`` on a ``d``-dimensional space."""
        return cls.diag([ONE if i == k else ZERO for i in range(d)])

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._check_size(other)
        return HermitianMatrix(tuple(
            tuple((a[0] + b[0], a[1] + b[1]) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return self + other.scaled(-ONE)

    def scaled(self, c) -> "HermitianMatrix":
        c = rat(c)
        return HermitianMatrix(tuple(tuple((c * a[0], c * a[1]) for a in row)
                                     for row in self.entries))

    def _check_size(self, other: "HermitianMatrix") -> None:
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def trace(self) -> Fraction:
        return sum((self.entries[i][i][0] for i in range(self.size)), ZERO)

    def is_real_diagonal(self) -> bool:
        return all(self.entries[i][j] == (ZERO, ZERO)
                   for i in range(self.size) for j in range(self.size) if i != j)

    def __str__(self):
        def fmt(z):
            return str(z[0]) if z[1] == 0 else f"{z[0]}{'+' if z[1] >= 0 else '-'}{abs(z[1])}i"
        return "[" + "; ".join(" ".join(fmt(z) for z in row) for row in self.entries) + "]"


def kron(A: HermitianMatrix, B: HermitianMatrix) -> HermitianMatrix:
    """Tensor product ``A (x) B`` with row-major index ``i * dB + j``."""
    dA, dB = A.size, B.size
    rows = []
    for i in range(dA):
        for j in range(dB):
            row = []
            for k in range(dA):
                for l in range(dB):
                    row.append(_cmul(A.entries[i][k], B.entries[j][l]))
            rows.append(tuple(row))
    return HermitianMatrix(tuple(rows))


def partial_trace_first(A: HermitianMatrix, d: int) -> HermitianMatrix:
    """Trace out the first tensor factor of an operator on ``C^d (x) C^d``."""
    if A.size != d * d:
        raise ValueError(f"size mismatch: {A.size} is not {d}^2")
    out = []
    for j in range(d):
        row = []
        for jp in range(d):
            re = im = ZERO
            for i in range(d):
                z = A.entries[i * d + j][i * d + jp]
                re += z[0]
                im += z[1]
            row.append((re, im))
        out.append(tuple(row))
    return HermitianMatrix(tuple(out))


def trace_product(A: HermitianMatrix, B: HermitianMatrix) -> Fraction:
    """``Tr(A B)``, real for hermitian ``A`` and ``B``."""
    A._check_size(B)
    re = im = ZERO
    n = A.size
    for i in range(n):
        for j in range(n):
            z = _cmul(A.entries[i][j], B.entries[j][i])
            re += z[0]
            im += z[1]
    if im != 0:  # pragma: no cover - impossible for hermitian inputs
        raise ArithmeticError("trace of a product of hermitian matrices is not real")
    return re


def is_psd(A: HermitianMatrix) -> bool:
    """Exact positive-semidefiniteness test by pivoted Schur complements."""
    if not isinstance(A, HermitianMatrix):
        raise NotHermitian("is_psd expects a HermitianMatrix")
    M = [list(row) for row in A.entries]
    while M:
        n = len(M)
        diag = [M[i][i][0] for i in range(n)]
        if any(x < 0 for x in diag):
            return False
        k = next((i for i in range(n) if diag[i] > 0), None)
        if k is None:
            return all(z == (ZERO, ZERO) for row in M for z in row)
        piv = diag[k]
        rest = [i for i in range(n) if i != k]
        M = [[_sub(M[i][j], _cdiv_real(_cmul(M[i][k], M[k][j]), piv)) for j in rest]
             for i in rest]
    return True


def _sub(x: Complex, y: Complex) -> Complex:
    return x[0] - y[0], x[1] - y[1]


def is_choi(C: HermitianMatrix, d: int) -> bool:
    return is_psd(C) and partial_trace_first(C, d) == HermitianMatrix.identity(d)


def is_density(sigma: HermitianMatrix) -> bool:
    return is_psd(sigma) and sigma.trace() == 1


def is_ppovm_effect(M: HermitianMatrix, sigma: HermitianMatrix) -> bool:
    """``0 <= M <= 1 (x) sigma``."""
    bound = kron(HermitianMatrix.identity(sigma.size), sigma)
    return is_psd(M) and is_psd(bound - M)


@dataclass(frozen=True)
class ChannelWitnessCase:
    d: int
    C00: HermitianMatrix
    C10: HermitianMatrix
    C01: HermitianMatrix
    C11: HermitianMatrix
    M: HermitianMatrix
    N: HermitianMatrix
    sigma_M: HermitianMatrix
    sigma_N: HermitianMatrix

    @property
    def states(self) -> dict:
        return {"C00": self.C00, "C10": self.C10, "C01": self.C01, "C11": self.C11}

    def replace(self, **changes) -> "ChannelWitnessCase":
        from dataclasses import replace
        return replace(self, **changes)


def qubit_channel_case() -> ChannelWitnessCase:
    """Four qubit-channel Choi matrices on which two PPOVM effects are maximally incompatible."""
    d = 2
    P0, P1, I = (HermitianMatrix.projector(d, 0), HermitianMatrix.projector(d, 1),
                 HermitianMatrix.identity(d))
    return ChannelWitnessCase(
        d=d,
        C00=kron(P1, I),
        C10=kron(P0, P0) + kron(P1, P1),
        C01=kron(P0, P1) + kron(P1, P0),
        C11=kron(P0, I),
        M=kron(P0, P0),
        N=kron(P0, P1),
        sigma_M=P0,
        sigma_N=P1,
    )


EXPECTED_TABLE = {"C00": (0, 0), "C10": (1, 0), "C01": (0, 1), "C11": (1, 1)}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ChannelReport:
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        if self.passed:
            return "maximally incompatible (parallelogram condition holds)"
        return "not established"

    def failed(self) -> list:
        return [c.name for c in self.checks if not c.passed]


def verify_case(case: ChannelWitnessCase) -> ChannelReport:
    """Run every check; failures are recorded in the report, never raised."""
    rep = ChannelReport()
    d = case.d
    for name, C in case.states.items():
        try:
            tr1 = partial_trace_first(C, d)
            ok_tr = tr1 == HermitianMatrix.identity(d)
            detail = f"Tr1 = {tr1}"
        except ValueError as exc:
            ok_tr, detail = False, str(exc)
        psd = is_psd(C)
        rep.checks.append(CheckResult(f"choi {name}", psd and ok_tr,
                                      f"psd={psd}; {detail}"))
    for label, sigma in (("sigma_M", case.sigma_M), ("sigma_N", case.sigma_N)):
        rep.checks.append(CheckResult(f"density {label}", is_density(sigma),
                                      f"trace={sigma.trace()}"))
    for label, E, sigma in (("M", case.M, case.sigma_M), ("N", case.N, case.sigma_N)):
        try:
            ok = is_ppovm_effect(E, sigma)
        except ValueError:
            ok = False
        rep.checks.append(CheckResult(f"effect {label}", ok, f"0 <= {label} <= 1 (x) sigma_{label}"))
    table_ok = True
    for name, C in case.states.items():
        try:
            vals = (trace_product(C, case.M), trace_product(C, case.N))
        except ValueError:
            vals = None
        rep.values[name] = vals
        if vals != tuple(Fraction(v) for v in EXPECTED_TABLE[name]):
            table_ok = False
    shown = ", ".join(f"{k}: {tuple(str(x) for x in v) if v else None}" for k, v in rep.values.items())
    rep.checks.append(CheckResult("value table", table_ok, shown))
    try:
        mid = case.C00 + case.C11 == case.C10 + case.C01
    except ValueError:
        mid = False
    rep.checks.append(CheckResult("midpoint", mid, "C00 + C11 == C10 + C01"))
    return rep
