from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gptmaxinc import zoo
from gptmaxinc.compat import degcom_half
from gptmaxinc.gpt import OutsideStateSpace, effect_from_functional, evaluate
from gptmaxinc.maxinc import (
    DiscriminationTask, check_pair_maxinc, cross_section, find_discriminator, find_maxinc,
    forced_table, joint_would_discriminate, section_extent,
)
from gptmaxinc.polytope import Halfspace, exposed_face

half = Fraction(1, 2)
EXPECTED = {"square": True, "triangle": False, "simplex3": False, "cube": True,
            "octahedron": True, "prism-square": True, "hexagon": False, "cut-pyramid": False}


def pair(K, fa, fb, ga, gb):
    return effect_from_functional(K, fa, fb), effect_from_functional(K, ga, gb)


@pytest.mark.parametrize("name", zoo.names())
def test_zoo_search_verdicts(name):
    found = find_maxinc(zoo.space(name))
    assert (found is not None) == EXPECTED[name]
    if found:
        f, g, cert = found
        assert cert.verify()
        assert degcom_half(f, g).lambda_star == half
        forced = joint_would_discriminate(f, g)
        assert forced is not None and not forced.discriminator_exists


def test_square_pair_certificate():
    K = zoo.space("square")
    f, g = pair(K, (1, 0), 0, (0, 1), 0)
    cert = check_pair_maxinc(f, g)
    assert cert.points == ((0, 0), (1, 0), (0, 1), (1, 1))
    assert cross_section(cert) == [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert section_extent(cert) == (0, 1, 0, 1)


def test_octahedron_equatorial_square():
    K = zoo.space("octahedron")
    f, g = pair(K, (half, half, 0), half, (half, -half, 0), half)
    cert = check_pair_maxinc(f, g)
    assert cert is not None
    assert all(x[2] == 0 for x in cert.points)
    assert degcom_half(f, g).lambda_star == half


def test_cut_pyramid_top_is_a_face_without_maximal_pair():
    K = zoo.space("cut-pyramid")
    top = exposed_face(K.body, Halfspace((0, 0, 1), 1))
    assert top.dim == 2 and len(top) == 4
    f, g = pair(K, (0, 0, 1), 0, (half, 0, 0), 0)
    assert check_pair_maxinc(f, g) is None
    assert degcom_half(f, g).lambda_star > half


def test_empty_level_intersection_screen():
    K = zoo.space("square")
    f, g = pair(K, (1, 0), 0, (1, 0), 0)
    assert check_pair_maxinc(f, g) is None
    assert degcom_half(f, g).lambda_star == 1


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_certificate_iff_half(seed):
    K, f, g = zoo.random_instance(seed)
    cert = check_pair_maxinc(f, g)
    assert (cert is not None) == (degcom_half(f, g).lambda_star == half)


@pytest.mark.parametrize("sides", [3, 4, 6])
def test_polygon_prisms_have_maximal_pairs(sides):
    found = find_maxinc(zoo.polygon_prism(sides))
    assert found is not None and found[2].verify()


def test_discriminate_square_edges():
    K = zoo.space("square")
    e = find_discriminator(K, DiscriminationTask([(0, 0), (0, 1)], [(1, 0), (1, 1)]))
    assert e.values == (0, 1, 1, 0)
    assert evaluate(e, (half, half)) == half


def test_discrimination_impossible_cases():
    K = zoo.space("square")
    # three corners at 0 force the whole square to 0
    corner = DiscriminationTask([(0, 0), (1, 0), (0, 1)], [(1, 1)])
    assert find_discriminator(K, corner) is None
    quad = DiscriminationTask([(0, 0), (1, 1)], [(1, 0), (0, 1)])
    assert find_discriminator(K, quad) is None
    overlap = DiscriminationTask([(0, 0)], [(0, 0)])
    assert find_discriminator(K, overlap) is None
    with pytest.raises(OutsideStateSpace):
        find_discriminator(K, DiscriminationTask([(2, 0)], [(0, 0)]))


def test_forced_table_values():
    t = forced_table([0, 1, 0, 1], [0, 0, 1, 1])
    assert t == {"p": (0, 0, 0, 1), "f-p": (0, 1, 0, 0), "g-p": (0, 0, 1, 0), "1+p-f-g": (1, 0, 0, 0)}
    with pytest.raises(ValueError):
        forced_table([half], [half])


def test_cross_section_rejects_bad_certificate():
    K = zoo.space("square")
    f, g = pair(K, (1, 0), 0, (0, 1), 0)
    cert = check_pair_maxinc(f, g)
    from dataclasses import replace
    with pytest.raises(ValueError):
        cross_section(replace(cert, x11=(half, half)))
