from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import linprog

from gptmaxinc.lp import LinearProgram, solve
from oracles import brute_force_lp

ints = st.integers(-4, 4)


def test_small_maximisation():
    prog = LinearProgram(2, objective=(3, 2))
    prog.nonneg(0, 1)
    prog.add((1, 1), "<=", 4)
    prog.add((1, 3), "<=", 6)
    prog.add((1, 0), "<=", 3)
    out = solve(prog)
    assert out.optimal and out.value == 11 and out.solution == (3, 1)


def test_exact_fractional_optimum():
    prog = LinearProgram(2, objective=(1, 1))
    prog.nonneg(0, 1)
    prog.add((3, 1), "<=", 1)
    prog.add((1, 3), "<=", 1)
    out = solve(prog)
    assert out.value == Fraction(1, 2)
    assert out.solution == (Fraction(1, 4), Fraction(1, 4))


def test_infeasible_and_unbounded():
    prog = LinearProgram(1, objective=(1,))
    prog.add((1,), ">=", 2)
    prog.add((1,), "<=", 1)
    assert solve(prog).status == "infeasible"
    prog = LinearProgram(2, objective=(1, 0))
    prog.nonneg(0)
    prog.add((0, 1), "=", 1)
    assert solve(prog).status == "unbounded"


def test_feasibility_only_returns_feasible_point():
    prog = LinearProgram(3)
    prog.add((1, 1, 1), "=", 1)
    prog.nonneg(0, 1, 2)
    prog.add((1, -1, 0), ">=", Fraction(1, 3))
    out = solve(prog)
    assert out.optimal and out.value == 0 and prog.is_feasible_point(out.solution)


def test_bounds_and_free_variables():
    prog = LinearProgram(2, objective={0: -1, 1: 1})
    prog.bound(0, -3, 5)
    prog.bound(1, None, Fraction(7, 2))
    out = solve(prog)
    assert out.solution == (-3, Fraction(7, 2)) and out.value == Fraction(13, 2)
    prog = LinearProgram(1, objective=(1,))
    prog.bound(0, 2, 1)
    assert solve(prog).status == "infeasible"


def test_degenerate_problem_terminates():
    # the classic cycling example for the largest-coefficient rule
    prog = LinearProgram(4, objective=(Fraction(3, 4), -150, Fraction(1, 50), -6))
    prog.nonneg(0, 1, 2, 3)
    prog.add((Fraction(1, 4), -60, Fraction(-1, 25), 9), "<=", 0)
    prog.add((Fraction(1, 2), -90, Fraction(-1, 50), 3), "<=", 0)
    prog.add((0, 0, 1, 0), "<=", 1)
    out = solve(prog)
    assert out.value == Fraction(1, 20)


def test_redundant_equalities():
    prog = LinearProgram(2, objective=(1, 2))
    prog.nonneg(0, 1)
    prog.add((1, 1), "=", 1)
    prog.add((2, 2), "=", 2)
    assert solve(prog).value == 2


def test_malformed_constraint():
    prog = LinearProgram(2)
    with pytest.raises(ValueError, match="malformed"):
        prog.add((1, 2, 3), "<=", 0)
    with pytest.raises(ValueError):
        prog.add((1, 2), "<", 0)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(ints, min_size=n, max_size=n),
    st.lists(st.lists(ints, min_size=n, max_size=n), min_size=0, max_size=4),
    st.lists(st.integers(-2, 6), min_size=4, max_size=4))))
def test_matches_vertex_enumeration(data):
    c, rows, rhs = data
    n = len(c)
    # a box keeps every instance bounded
    A = [list(r) for r in rows] + [[int(i == j) for j in range(n)] for i in range(n)] \
        + [[-int(i == j) for j in range(n)] for i in range(n)]
    b = [Fraction(x) for x in rhs[:len(rows)]] + [Fraction(3)] * (2 * n)
    prog = LinearProgram(n, objective=c)
    for r, v in zip(A, b):
        prog.add(r, "<=", v)
    out = solve(prog)
    status, value = brute_force_lp(c, A, b)
    assert out.status == status
    if status == "optimal":
        assert out.value == value
        assert prog.is_feasible_point(out.solution)


@given(st.lists(st.lists(ints, min_size=3, max_size=3), min_size=1, max_size=5),
       st.lists(st.integers(0, 5), min_size=5, max_size=5), st.lists(ints, min_size=3, max_size=3))
def test_matches_scipy(rows, rhs, c):
    prog = LinearProgram(3, objective=c)
    prog.nonneg(0, 1, 2)
    for r, v in zip(rows, rhs):
        prog.add(r, "<=", v)
    for j in range(3):
        prog.add({j: 1}, "<=", 4)
    out = solve(prog)
    ref = linprog(-np.array(c, float), A_ub=np.array(rows, float), b_ub=np.array(rhs[:len(rows)], float),
                  bounds=[(0, 4)] * 3, method="highs")
    assert out.optimal == (ref.status == 0)
    if out.optimal:
        assert abs(float(out.value) + ref.fun) < 1e-7
