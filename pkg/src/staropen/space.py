"""Finite topological spaces over bit-encoded subsets.

A subset of the carrier ``{0, ..., n-1}`` is a plain ``int`` whose bit ``x``
is set iff point ``x`` belongs to it.  A family of subsets is a tuple of such
ints in ascending numeric order, which is the canonical order everywhere in
this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 16


class TopologyError(ValueError):
    """A family of subsets fails one of the topology axioms."""


class MissingEmptyOrFull(TopologyError):
    def __init__(self, n: int, missing: int) -> None:
        self.missing = missing
        what = "empty set" if missing == 0 else "full carrier"
        super().__init__(f"family on {n} points lacks the {what}")


class NotClosedUnderUnion(TopologyError):
    def __init__(self, a: int, b: int) -> None:
        self.pair = (a, b)
        super().__init__(
            f"union of {format_set(a)} and {format_set(b)} is not in the family"
        )


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, a: int, b: int) -> None:
        self.pair = (a, b)
        super().__init__(
            f"intersection of {format_set(a)} and {format_set(b)} is not in the family"
        )


class WidthError(ValueError):
    """A subset or point does not fit the carrier it is used with."""


def full_set(n: int) -> int:
    return (1 << n) - 1


def to_bits(points: Iterable[int]) -> int:
    bits = 0
    for x in points:
        bits |= 1 << x
    return bits


def iter_points(bits: int) -> Iterator[int]:
    """Yield the points of ``bits`` in ascending order."""
    x = 0
    while bits:
        if bits & 1:
            yield x
        bits >>= 1
        x += 1


def points_of(bits: int) -> tuple[int, ...]:
    return tuple(iter_points(bits))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def format_set(bits: int) -> str:
    return "{" + ",".join(map(str, iter_points(bits))) + "}"


def canonical_family(family: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(family)))


def _check_width(n: int, bits: int) -> None:
    if bits < 0 or bits >> n:
        raise WidthError(f"subset {bits:#b} does not fit a carrier of {n} points")


@dataclass(frozen=True)
class Space:
    """A finite topological space.

    Equality and hashing look only at ``n`` and ``opens``; labels are for
    display.  Build instances with :func:`validate_topology` or
    :func:`generate_topology` rather than directly.
    """

    n: int
    opens: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    min_nbhd: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.min_nbhd:
            object.__setattr__(self, "min_nbhd", _minimal_neighborhoods(self.n, self.opens))
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")

    @property
    def full(self) -> int:
        return full_set(self.n)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def point_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(map(str, range(self.n)))

    def with_labels(self, labels: Sequence[str] | None) -> Space:
        return Space(self.n, self.opens, tuple(labels) if labels is not None else None, self.min_nbhd)

    def subsets(self) -> range:
        """All ``2**n`` subsets in canonical order."""
        return range(1 << self.n)

    def format(self, bits: int) -> str:
        return "{" + ",".join(self.label(x) for x in iter_points(bits)) + "}"


def _minimal_neighborhoods(n: int, opens: Sequence[int]) -> tuple[int, ...]:
    table = []
    for x in range(n):
        u = full_set(n)
        bit = 1 << x
        for o in opens:
            if o & bit:
                u &= o
        table.append(u)
    return tuple(table)


def validate_topology(n: int, family: Iterable[int], labels: Sequence[str] | None = None) -> Space:
    """Check the topology axioms on ``family`` and return the Space.

    Raises the :class:`TopologyError` subclass naming the first violating
    pair in canonical order.
    """
    if not 0 <= n <= MAX_POINTS:
        raise WidthError(f"carrier size {n} outside 0..{MAX_POINTS}")
    opens = canonical_family(family)
    for o in opens:
        _check_width(n, o)
    members = set(opens)
    for required in (0, full_set(n)):
        if required not in members:
            raise MissingEmptyOrFull(n, required)
    for i, a in enumerate(opens):
        for b in opens[i + 1:]:
            if a | b not in members:
                raise NotClosedUnderUnion(a, b)
            if a & b not in members:
                raise NotClosedUnderIntersection(a, b)
    return Space(n, opens, tuple(labels) if labels is not None else None)


def opens_from_min_neighborhoods(n: int, table: Sequence[int]) -> tuple[int, ...]:
    """All unions of the given minimal neighbourhoods, canonical order."""
    family = {0}
    for u in sorted(set(table)):
        family |= {f | u for f in family}
    return tuple(sorted(family))


def generate_topology(n: int, subbasis: Iterable[int], labels: Sequence[str] | None = None) -> Space:
    """Smallest topology on ``n`` points containing ``subbasis``.

    On a finite carrier the generated topology is determined by the minimal
    neighbourhood of each point: the intersection of the subbasis members
    containing it (the empty intersection being the whole carrier).  The opens
    are then all unions of those neighbourhoods.
    """
    if not 0 <= n <= MAX_POINTS:
        raise WidthError(f"carrier size {n} outside 0..{MAX_POINTS}")
    members = list(subbasis)
    for s in members:
        _check_width(n, s)
    table = []
    for x in range(n):
        u = full_set(n)
        for s in members:
            if s >> x & 1:
                u &= s
        table.append(u)
    opens = opens_from_min_neighborhoods(n, table)
    return Space(n, opens, tuple(labels) if labels is not None else None, tuple(table))


def minimal_neighborhood(s: Space, x: int) -> int:
    if not 0 <= x < s.n:
        raise WidthError(f"point {x} outside a carrier of {s.n} points")
    return s.min_nbhd[x]


def interior(s: Space, a: int) -> int:
    _check_width(s.n, a)
    result = 0
    for x in iter_points(a):
        if s.min_nbhd[x] & ~a == 0:
            result |= 1 << x
    return result


def closure(s: Space, a: int) -> int:
    _check_width(s.n, a)
    result = 0
    for x, u in enumerate(s.min_nbhd):
        if u & a:
            result |= 1 << x
    return result


def is_open(s: Space, a: int) -> bool:
    return interior(s, a) == a


def is_closed(s: Space, a: int) -> bool:
    return is_open(s, s.full & ~a)


def complement(s: Space, a: int) -> int:
    return s.full & ~a


def discrete(n: int) -> Space:
    return Space(n, tuple(range(1 << n)))


def indiscrete(n: int) -> Space:
    return Space(n, (0, full_set(n)) if n else (0,))
