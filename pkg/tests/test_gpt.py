from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gptmaxinc import zoo
from gptmaxinc.gpt import (
    CoinToss, Effect, InconsistentValues, NotAnEffect, OutsideStateSpace, StateSpace,
    StateSpaceMismatch, TwoOutcomeMeasurement, complement, constant_effect, effect_from_functional,
    effect_from_vertex_values, evaluate, level_face, mix, same_space,
)
from gptmaxinc.polytope import EMPTY_FACE

half = Fraction(1, 2)


@pytest.fixture
def square():
    return zoo.space("square")


def test_functional_and_vertex_values_agree(square):
    f = effect_from_functional(square, (1, 0), 0)
    assert f.values == (0, 1, 1, 0)
    assert effect_from_vertex_values(square, (0, 1, 1, 0)) == f
    assert evaluate(f, (Fraction(1, 3), Fraction(1, 2))) == Fraction(1, 3)
    assert f((1, 1)) == 1


def test_effect_range_and_consistency(square):
    with pytest.raises(NotAnEffect):
        effect_from_functional(square, (2, 0), 0)
    with pytest.raises(InconsistentValues):
        effect_from_vertex_values(square, (0, 1, 0, 0))
    with pytest.raises(ValueError):
        effect_from_vertex_values(square, (0, 1))
    with pytest.raises(ValueError):
        effect_from_functional(square, (1, 0, 0), 0)


def test_evaluate_outside(square):
    f = effect_from_functional(square, (1, 0), 0)
    with pytest.raises(OutsideStateSpace):
        evaluate(f, (2, 0))


def test_lower_dimensional_space_affine_form():
    K = zoo.space("simplex3")
    f = effect_from_functional(K, (1, 1, 0, 0), 0)
    a, b = f.affine()
    for v, val in zip(K.vertices, f.values):
        assert sum(x * y for x, y in zip(a, v)) + b == val
    centre = (Fraction(1, 4),) * 4
    assert evaluate(f, centre) == half


def test_complement_and_levels(square):
    f = effect_from_functional(square, (1, 0), 0)
    cf = complement(f)
    assert cf.values == (1, 0, 0, 1)
    assert level_face(f, 0) == level_face(cf, 1)
    assert len(level_face(f, 1)) == 2
    assert level_face(constant_effect(square, half), 0) == EMPTY_FACE
    with pytest.raises(ValueError):
        level_face(f, half)


def test_same_space():
    f = effect_from_functional(zoo.space("square"), (1, 0), 0)
    g = effect_from_functional(zoo.space("triangle"), (1, 0), 0)
    with pytest.raises(StateSpaceMismatch):
        same_space(f, g)
    assert same_space(f, f) == f.space


def test_measurements_and_coins(square):
    f = effect_from_functional(square, (1, 0), 0)
    assert TwoOutcomeMeasurement(f).distribution((Fraction(1, 4), 0)) == (Fraction(1, 4), Fraction(3, 4))
    coin = CoinToss("1/3")
    assert coin.effect(square).values == (Fraction(1, 3),) * 4
    assert mix(f, half, coin).values == (Fraction(1, 6), Fraction(2, 3), Fraction(2, 3), Fraction(1, 6))
    with pytest.raises(ValueError):
        CoinToss(2)


weights = st.fractions(min_value=0, max_value=1, max_denominator=12)


@given(weights, weights, st.sampled_from(zoo.names()))
def test_mix_stays_an_effect_and_is_affine(lam, mu, name):
    K = zoo.space(name)
    f = effect_from_functional(K, *[
        tuple(Fraction(c) for c in zoo.ZOO[name].effects["f"]["a"]),
        Fraction(zoo.ZOO[name].effects["f"]["b"])])
    m = mix(f, lam, mu)
    assert all(0 <= v <= 1 for v in m.values)
    assert m.values == tuple(lam * v + (1 - lam) * mu for v in f.values)
    assert effect_from_vertex_values(K, m.values) == m


def test_effect_str(square):
    assert str(effect_from_functional(square, (half, 0), 0)) == "(0, 1/2, 1/2, 0)"


def test_state_space_properties():
    K = StateSpace.from_vertices([(0, 0), (1, 0), (0, 1), (1, 0)])
    assert K.num_vertices == 3 and K.dim == 2 and K.ambient_dim == 2
    assert K.contains((Fraction(1, 2), Fraction(1, 2)))
    assert isinstance(Effect(K, (0, 0, 0)), Effect)
