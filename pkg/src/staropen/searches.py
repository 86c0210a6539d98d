"""Searches for smallest finite counterexamples.

Each search enumerates candidate instances carrier size by carrier size; the
carrier size of an instance is the largest point count among its spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import census
from .checks import MAP_MAX_POINTS, PRODUCT_MAX_POINTS
from .constructions import product, subspace
from .maps import (
    enumerate_maps,
    image,
    is_almost_continuous,
    is_continuous,
    is_open_map,
    is_star_continuous,
)
from .properties import is_locally_connected
from .regular import (
    is_regular_open,
    is_star_open,
    star_closure,
    star_open_topology,
)
from .space import is_open, is_subset
from .witness import Witness


@dataclass(frozen=True)
class Search:
    id: str
    title: str
    candidates: Callable[[int], Iterator[Witness]]
    is_witness: Callable[[Witness], bool]
    max_points: int | None = None


def _spaces_of_size(k: int):
    return census.enumerate_topologies(k).spaces if k >= 1 else ()


def _pairs_of_size(k: int):
    """Ordered pairs of spaces whose larger carrier has exactly ``k`` points."""
    pool = census.spaces_up_to(k)
    for a in pool:
        for b in pool:
            if max(a.n, b.n) == k:
                yield a, b


def _space_candidates(k: int) -> Iterator[Witness]:
    for s in _spaces_of_size(k):
        yield Witness((s,))


def _set_candidates(k: int) -> Iterator[Witness]:
    for s in _spaces_of_size(k):
        for a in s.subsets():
            yield Witness((s,), (a,))


def _set_pair_candidates(k: int) -> Iterator[Witness]:
    for s in _spaces_of_size(k):
        for a in s.subsets():
            for b in range(a + 1, 1 << s.n):
                yield Witness((s,), (a, b))


def _map_candidates(k: int) -> Iterator[Witness]:
    for dom, cod in _pairs_of_size(k):
        for f in enumerate_maps(dom, cod):
            yield Witness((dom, cod), (), f.assign)


def _map_set_candidates(k: int) -> Iterator[Witness]:
    for dom, cod in _pairs_of_size(k):
        for f in enumerate_maps(dom, cod):
            for a in dom.subsets():
                yield Witness((dom, cod), (a,), f.assign)


def _product_set_candidates(k: int) -> Iterator[Witness]:
    for a, b in _pairs_of_size(k):
        for c in range(1 << (a.n * b.n)):
            yield Witness((a, b), (c,))


def _carrier_set_candidates(k: int) -> Iterator[Witness]:
    for s in _spaces_of_size(k):
        for y in s.subsets():
            for a in range(y + 1):
                if y and is_subset(a, y):
                    yield Witness((s,), (y, a))


def open_not_star(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    return is_open(s, a) and not is_star_open(s, a)


def star_not_regular(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    return is_star_open(s, a) and not is_regular_open(s, a)


def product_nonrectangle(w: Witness) -> bool:
    (a, b), (c,) = w.spaces, w.sets
    p = product(a, b)
    if not is_star_open(p.space, c):
        return False
    if c == 0:
        return False
    left, right = p.shadows(c)
    return not (p.is_rectangle(c) and is_star_open(a, left) and is_star_open(b, right))


def union_intersection(w: Witness) -> bool:
    s, (a, b) = w.space, w.sets
    return (
        not is_star_open(s, a)
        and not is_star_open(s, b)
        and is_star_open(s, a | b)
        and is_star_open(s, a & b)
    )


def open_continuous_image(w: Witness) -> bool:
    f, (a,) = w.map, w.sets
    return (
        is_star_open(f.dom, a)
        and not is_star_open(f.cod, image(f, a))
        and is_continuous(f)
        and is_open_map(f)
    )


def star_continuous_not_continuous(w: Witness) -> bool:
    f = w.map
    return is_star_continuous(f) and not is_continuous(f)


def continuous_not_star_continuous(w: Witness) -> bool:
    f = w.map
    return is_continuous(f) and not is_star_continuous(f)


def almost_not_star(w: Witness) -> bool:
    f = w.map
    return is_almost_continuous(f) and not is_star_continuous(f)


def closure_image(w: Witness) -> bool:
    f, (a,) = w.map, w.sets
    if not is_continuous(f):
        return False
    lhs = image(f, star_closure(f.dom, a))
    return lhs & ~star_closure(f.cod, image(f, a)) != 0


def converse_corollary10(w: Witness) -> bool:
    s, (y, a) = w.space, w.sets
    if not is_open(s, y) or is_star_open(s, a):
        return False
    emb = subspace(s, y)
    return is_star_open(emb.child, emb.to_child(a))


def locally_connected_converse(w: Witness) -> bool:
    s = w.space
    return not is_locally_connected(s) and is_locally_connected(star_open_topology(s))


SEARCHES: tuple[Search, ...] = (
    Search("CE-open-not-star", "an open set that is not *-open", _set_candidates, open_not_star),
    Search("CE-star-not-regular", "a *-open set that is not regular open", _set_candidates, star_not_regular),
    Search("CE-product-nonrectangle", "a *-open set of a product that is not a *-open rectangle",
           _product_set_candidates, product_nonrectangle, PRODUCT_MAX_POINTS),
    Search("CE-union-intersection", "non-*-open A, B with A|B and A&B *-open", _set_pair_candidates, union_intersection),
    Search("CE-open-cont-image", "open continuous f and *-open A with f(A) not *-open",
           _map_set_candidates, open_continuous_image, MAP_MAX_POINTS),
    Search("CE-star-cont-not-cont", "a *-continuous map that is not continuous",
           _map_candidates, star_continuous_not_continuous, MAP_MAX_POINTS),
    Search("CE-cont-not-star-cont", "a continuous map that is not *-continuous",
           _map_candidates, continuous_not_star_continuous, MAP_MAX_POINTS),
    Search("CE-almost-not-star", "an almost continuous map that is not *-continuous",
           _map_candidates, almost_not_star, MAP_MAX_POINTS),
    Search("CE-closure-image", "continuous f and A with f(*cl A) not inside *cl f(A)",
           _map_set_candidates, closure_image, MAP_MAX_POINTS),
    Search("CE-converse-C10", "A inside open Y, *-open in Y but not in X", _carrier_set_candidates, converse_corollary10),
    Search("CE-locally-connected-converse", "X not locally connected while *O(X) is",
           _space_candidates, locally_connected_converse),
)

SEARCHES_BY_ID = {s.id: s for s in SEARCHES}
