from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import B, space_and_set, spaces
from staropen.census import enumerate_topologies
from staropen.space import (
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    Space,
    WidthError,
    closure,
    discrete,
    generate_topology,
    indiscrete,
    interior,
    is_closed,
    is_open,
    is_subset,
    minimal_neighborhood,
    validate_topology,
)


def test_validate_sierpinski():
    s = validate_topology(2, [B(0, 1), B(), B(0)])
    assert s.opens == (0, 1, 3)
    assert s.min_nbhd == (B(0), B(0, 1))


def test_validate_missing_full():
    with pytest.raises(MissingEmptyOrFull):
        validate_topology(2, [B(), B(0)])


def test_validate_missing_empty():
    with pytest.raises(MissingEmptyOrFull):
        validate_topology(2, [B(0), B(0, 1)])


def test_validate_names_union_pair():
    with pytest.raises(NotClosedUnderUnion) as e:
        validate_topology(3, [B(), B(0), B(1), B(0, 1, 2)])
    assert e.value.pair == (B(0), B(1))


def test_validate_names_intersection_pair():
    with pytest.raises(NotClosedUnderIntersection) as e:
        validate_topology(3, [B(), B(0, 1), B(1, 2), B(0, 1, 2)])
    assert e.value.pair == (B(0, 1), B(1, 2))


def test_validate_rejects_wide_member():
    with pytest.raises(WidthError):
        validate_topology(2, [0, 3, 4])


def test_equality_is_bit_exact_and_ignores_labels():
    a = validate_topology(2, [0, 1, 3], labels=["a", "b"])
    b = validate_topology(2, [3, 1, 0, 1])
    assert a == b and hash(a) == hash(b)


def test_generate_t3(t3_space):
    assert t3_space.opens == (0, B(0), B(1), B(0, 1), B(0, 1, 2))


def test_generate_empty_subbasis_is_indiscrete():
    assert generate_topology(2, []) == indiscrete(2)


def _intersection_of_supertopologies(n, subbasis):
    result = None
    for s in enumerate_topologies(n).spaces:
        if set(subbasis) <= set(s.opens):
            result = set(s.opens) if result is None else result & set(s.opens)
    return tuple(sorted(result))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generate_matches_supertopology_oracle(n):
    proper = range(1 << n)
    for k in range(3):
        for subbasis in combinations(proper, k):
            s = generate_topology(n, subbasis)
            assert s.opens == _intersection_of_supertopologies(n, subbasis)
            assert validate_topology(n, s.opens) == s


def test_interior_examples(s2, t3_space):
    assert interior(s2, B(1)) == 0
    assert interior(t3_space, B(0, 2)) == B(0)
    assert interior(t3_space, t3_space.full) == t3_space.full


def test_closure_examples(s2, t3_space):
    assert closure(s2, B(0)) == B(0, 1)
    assert closure(t3_space, B(0)) == B(0, 2)
    assert closure(s2, 0) == 0


def test_minimal_neighborhood_examples(s2, t3_space):
    assert minimal_neighborhood(s2, 1) == B(0, 1)
    assert minimal_neighborhood(discrete(2), 0) == B(0)
    assert minimal_neighborhood(t3_space, 2) == B(0, 1, 2)
    with pytest.raises(WidthError):
        minimal_neighborhood(s2, 2)


def test_open_closed_examples(s2):
    assert is_open(s2, B(0))
    assert not is_open(s2, B(1)) and is_closed(s2, B(1))
    assert is_open(s2, 0) and is_closed(s2, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_interior_is_union_of_contained_opens(n):
    for s in enumerate_topologies(n).spaces:
        for a in s.subsets():
            brute = 0
            for o in s.opens:
                if is_subset(o, a):
                    brute |= o
            assert interior(s, a) == brute


def test_interior_rejects_wide_set(s2):
    with pytest.raises(WidthError):
        interior(s2, 4)


@given(space_and_set())
def test_duality(sa):
    s, a = sa
    assert interior(s, a) == s.full & ~closure(s, s.full & ~a)
    assert closure(s, a) == s.full & ~interior(s, s.full & ~a)


@given(space_and_set())
def test_idempotent_and_extensive(sa):
    s, a = sa
    i, c = interior(s, a), closure(s, a)
    assert interior(s, i) == i and is_subset(i, a)
    assert closure(s, c) == c and is_subset(a, c)


@given(space_and_set(), st.integers(0, 63))
def test_monotone(sa, extra):
    s, a = sa
    b = a | (extra & s.full)
    assert is_subset(interior(s, a), interior(s, b))
    assert is_subset(closure(s, a), closure(s, b))


@given(spaces())
def test_min_nbhd_table_is_least_open(s):
    for x, u in enumerate(s.min_nbhd):
        assert u in s.opens and u >> x & 1
        assert all(is_subset(u, o) for o in s.opens if o >> x & 1)


def test_space_rejects_bad_labels():
    with pytest.raises(ValueError):
        Space(2, (0, 3), labels=("a",))
