"""Maps between finite spaces and their continuity classes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator, NamedTuple

from .constructions import ProductSpace
from .regular import (
    is_star_open,
    regular_open_family,
    star_closure,
    star_open_family,
    star_open_topology,
)
from .space import Space, is_open, iter_points

DEFAULT_MAP_BUDGET = 1 << 16


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SpaceMap:
    dom: Space
    cod: Space
    assign: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.assign) != self.dom.n:
            raise ValueError(f"map needs {self.dom.n} values, got {len(self.assign)}")
        if any(not 0 <= y < self.cod.n for y in self.assign):
            raise ValueError(f"map value outside codomain of {self.cod.n} points")

    def __call__(self, x: int) -> int:
        return self.assign[x]

    def is_surjective(self) -> bool:
        return len(set(self.assign)) == self.cod.n

    def then(self, g: SpaceMap) -> SpaceMap:
        """The composite ``g after self``."""
        if g.dom.n != self.cod.n:
            raise ValueError("maps are not composable")
        return SpaceMap(self.dom, g.cod, tuple(g.assign[y] for y in self.assign))


def identity(s: Space, cod: Space | None = None) -> SpaceMap:
    """Identity on the carrier, optionally into a different topology."""
    return SpaceMap(s, cod if cod is not None else s, tuple(range(s.n)))


def constant(dom: Space, cod: Space, value: int) -> SpaceMap:
    return SpaceMap(dom, cod, (value,) * dom.n)


def projections(p: ProductSpace) -> tuple[SpaceMap, SpaceMap]:
    n = p.space.n
    return (
        SpaceMap(p.space, p.left, tuple(p.unpair(i)[0] for i in range(n))),
        SpaceMap(p.space, p.right, tuple(p.unpair(i)[1] for i in range(n))),
    )


def image(f: SpaceMap, a: int) -> int:
    result = 0
    for x in iter_points(a):
        result |= 1 << f.assign[x]
    return result


def preimage(f: SpaceMap, b: int) -> int:
    result = 0
    for x, y in enumerate(f.assign):
        if b >> y & 1:
            result |= 1 << x
    return result


def is_continuous(f: SpaceMap) -> bool:
    return all(is_open(f.dom, preimage(f, u)) for u in f.cod.opens)


def is_open_map(f: SpaceMap) -> bool:
    return all(is_open(f.cod, image(f, u)) for u in f.dom.opens)


def is_almost_continuous(f: SpaceMap) -> bool:
    return all(is_open(f.dom, preimage(f, w)) for w in regular_open_family(f.cod))


def is_star_continuous(f: SpaceMap) -> bool:
    """Continuity between the semiregularizations of domain and codomain."""
    return is_continuous(
        SpaceMap(star_open_topology(f.dom), star_open_topology(f.cod), f.assign)
    )


def is_star_continuous_direct(f: SpaceMap) -> bool:
    return all(is_star_open(f.dom, preimage(f, w)) for w in star_open_family(f.cod))


class MapClassification(NamedTuple):
    continuous: bool
    open_map: bool
    almost_continuous: bool
    star_continuous: bool


def classify(f: SpaceMap) -> MapClassification:
    return MapClassification(
        continuous=is_continuous(f),
        open_map=is_open_map(f),
        almost_continuous=is_almost_continuous(f),
        star_continuous=is_star_continuous(f),
    )


def enumerate_maps(dom: Space, cod: Space, budget: int = DEFAULT_MAP_BUDGET) -> Iterator[SpaceMap]:
    """Every map ``dom -> cod``, assignment tables in lexicographic order."""
    total = cod.n ** dom.n
    if total > budget:
        raise BudgetExceeded(f"{total} maps exceed the budget of {budget}")
    return (SpaceMap(dom, cod, a) for a in cartesian(range(cod.n), repeat=dom.n))


class ClosureImageCheck(NamedTuple):
    holds_for_all: bool
    witness: int | None


def star_closure_image_check(f: SpaceMap) -> ClosureImageCheck:
    """Test ``f(*cl A) <= *cl f(A)`` for every subset ``A`` of the domain.

    The witness is the first failing ``A`` in canonical order.
    """
    for a in f.dom.subsets():
        lhs = image(f, star_closure(f.dom, a))
        rhs = star_closure(f.cod, image(f, a))
        if lhs & ~rhs:
            return ClosureImageCheck(False, a)
    return ClosureImageCheck(True, None)
