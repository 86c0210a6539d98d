"""Regular open sets, the star operators and the semiregularization."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .space import Space, closure, generate_topology, interior


def is_regular_open(s: Space, a: int) -> bool:
    return interior(s, closure(s, a)) == a


def is_regular_closed(s: Space, a: int) -> bool:
    return closure(s, interior(s, a)) == a


@lru_cache(maxsize=8192)
def regular_open_family(s: Space) -> tuple[int, ...]:
    # Scans every subset, not just the opens, so a non-open set passing the
    # predicate would show up here.
    return tuple(a for a in s.subsets() if is_regular_open(s, a))


@lru_cache(maxsize=8192)
def regular_closed_family(s: Space) -> tuple[int, ...]:
    return tuple(a for a in s.subsets() if is_regular_closed(s, a))


def star_interior(s: Space, a: int) -> int:
    """Union of the regular open sets contained in ``a``."""
    result = 0
    for w in regular_open_family(s):
        if w & ~a == 0:
            result |= w
    return result


def star_interior_pointwise(s: Space, a: int) -> int:
    """Points of ``a`` having a regular open neighbourhood inside ``a``."""
    ro = regular_open_family(s)
    result = 0
    for x in range(s.n):
        bit = 1 << x
        if a & bit and any(w & bit and w & ~a == 0 for w in ro):
            result |= bit
    return result


def star_closure(s: Space, a: int) -> int:
    """Points all of whose regular open neighbourhoods meet ``a``."""
    ro = regular_open_family(s)
    result = 0
    for x in range(s.n):
        bit = 1 << x
        if all(w & a for w in ro if w & bit):
            result |= bit
    return result


def star_closure_by_regular_closeds(s: Space, a: int) -> int:
    """Intersection of the regular closed supersets of ``a``."""
    result = s.full
    for c in regular_closed_family(s):
        if a & ~c == 0:
            result &= c
    return result


def is_star_open(s: Space, a: int) -> bool:
    return star_interior(s, a) == a


def is_star_closed(s: Space, a: int) -> bool:
    return star_closure(s, a) == a


def star_open_topology(s: Space) -> Space:
    """The space on the same carrier whose opens are the star-open sets."""
    return _star_open_topology(s).with_labels(s.labels)


@lru_cache(maxsize=8192)
def _star_open_topology(s: Space) -> Space:
    return generate_topology(s.n, regular_open_family(s))


def star_open_family(s: Space) -> tuple[int, ...]:
    """Star-open sets found by testing every subset against the definition."""
    return tuple(a for a in s.subsets() if is_star_open(s, a))


def is_semi_regular(s: Space) -> bool:
    """True iff the regular open sets form a basis of ``s``."""
    return all(star_interior(s, u) == u for u in s.opens)


@dataclass(frozen=True)
class StarAnalysis:
    space: Space
    regular_opens: tuple[int, ...]
    regular_closeds: tuple[int, ...]
    star_topology: Space
    semi_regular: bool


def analyze(s: Space) -> StarAnalysis:
    """Compute every star-related family of ``s`` in one pass (cached)."""
    return _analyze(s)


@lru_cache(maxsize=8192)
def _analyze(s: Space) -> StarAnalysis:
    return StarAnalysis(
        space=s,
        regular_opens=regular_open_family(s),
        regular_closeds=regular_closed_family(s),
        star_topology=star_open_topology(s),
        semi_regular=is_semi_regular(s),
    )
