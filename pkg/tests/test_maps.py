from itertools import product as cartesian

import pytest

from conftest import B
from staropen.census import spaces_up_to
from staropen.constructions import product
from staropen.maps import (
    BudgetExceeded,
    SpaceMap,
    classify,
    constant,
    enumerate_maps,
    identity,
    image,
    is_almost_continuous,
    is_continuous,
    is_open_map,
    is_star_continuous,
    is_star_continuous_direct,
    preimage,
    projections,
    star_closure_image_check,
)
from staropen.space import discrete, indiscrete


@pytest.fixture
def p3_to_t3(p3, t3_space):
    return SpaceMap(p3, t3_space, (0, 2, 2))


def test_preimage_examples(p3_to_t3, t3_space):
    assert preimage(p3_to_t3, B(0)) == B(0)
    assert preimage(identity(t3_space), B(1, 2)) == B(1, 2)
    assert preimage(constant(t3_space, t3_space, 1), B(0, 2)) == 0


def test_image(p3_to_t3):
    assert image(p3_to_t3, B(1, 2)) == B(2)


def test_continuity_examples(p3_to_t3, p3, s2):
    assert is_continuous(p3_to_t3)
    const = constant(p3, p3, 0)
    assert is_continuous(const) and is_open_map(const)
    assert not is_continuous(identity(indiscrete(2), s2))


def test_almost_continuity_examples(p3_to_t3, p3, d2):
    assert is_almost_continuous(p3_to_t3)
    for f in enumerate_maps(p3, indiscrete(2)):
        assert is_almost_continuous(f)
    assert not is_almost_continuous(identity(indiscrete(2), d2))


def test_star_continuity_examples(p3_to_t3, s2, t3_space):
    f = identity(indiscrete(2), s2)
    assert is_star_continuous(f) and not is_continuous(f)
    assert not is_star_continuous(p3_to_t3) and is_continuous(p3_to_t3)
    assert is_star_continuous(identity(t3_space))


def test_classification(p3_to_t3):
    c = classify(p3_to_t3)
    # image of {0,1} is {0,2}, not open in T3
    assert c == (True, False, True, False)


def test_enumerate_counts(s2, t3_space):
    assert len(list(enumerate_maps(s2, s2))) == 4
    assert len(list(enumerate_maps(t3_space, s2))) == 8
    assert [f.assign for f in enumerate_maps(discrete(1), t3_space)] == [(0,), (1,), (2,)]


def test_enumerate_order_and_budget(s2):
    assert [f.assign for f in enumerate_maps(s2, s2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(BudgetExceeded):
        enumerate_maps(discrete(4), discrete(4), budget=100)


def test_map_validation(s2):
    with pytest.raises(ValueError):
        SpaceMap(s2, s2, (0,))
    with pytest.raises(ValueError):
        SpaceMap(s2, s2, (0, 2))


def test_closure_image_examples(p3_to_t3, s2):
    assert star_closure_image_check(identity(indiscrete(2), s2)).holds_for_all
    check = star_closure_image_check(p3_to_t3)
    assert not check.holds_for_all and check.witness is not None


@pytest.mark.parametrize("dom", spaces_up_to(3)[::3], ids=lambda s: str(s.opens))
def test_constant_maps_satisfy_closure_image(dom):
    for cod in spaces_up_to(3):
        for c in range(cod.n):
            assert star_closure_image_check(constant(dom, cod, c)).holds_for_all


def test_projections_of_sierpinski_square(s2):
    p = product(s2, s2)
    left, right = projections(p)
    assert left.assign == (0, 0, 1, 1) and right.assign == (0, 1, 0, 1)
    assert is_continuous(left) and is_star_continuous(right)


def test_star_continuity_routes_agree_on_small_population():
    pool = spaces_up_to(2)
    for dom, cod in cartesian(pool, pool):
        for f in enumerate_maps(dom, cod):
            assert is_star_continuous(f) == is_star_continuous_direct(f)


def test_composition_preserves_continuity_classes():
    pool = spaces_up_to(2)
    for a, b, c in cartesian(pool, pool, pool):
        for f in enumerate_maps(a, b):
            for g in enumerate_maps(b, c):
                h = f.then(g)
                if is_continuous(f) and is_continuous(g):
                    assert is_continuous(h)
                if is_star_continuous(f) and is_star_continuous(g):
                    assert is_star_continuous(h)


def test_composition_requires_matching_carriers(s2, t3_space):
    with pytest.raises(ValueError):
        identity(s2).then(identity(t3_space))
