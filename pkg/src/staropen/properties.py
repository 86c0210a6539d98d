"""Connectedness, local connectedness, Hausdorffness and compactness.

Every finite space is compact and locally compact, so the two compactness
predicates are constant.  Path connectedness is not provided: it quantifies
over maps out of the real unit interval.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .constructions import subspace
from .space import Space, is_open, iter_points


class NotACover(ValueError):
    pass


class NotOpenMember(ValueError):
    pass


def clopen_sets(s: Space) -> tuple[int, ...]:
    opens = set(s.opens)
    return tuple(u for u in s.opens if s.full & ~u in opens)


def is_connected(s: Space) -> bool:
    return all(u in (0, s.full) for u in clopen_sets(s))


def connected_components(s: Space) -> tuple[int, ...]:
    """Components as bit masks, ordered by their smallest point.

    Two points are linked when one lies in the other's minimal neighbourhood;
    components are the classes of the generated equivalence relation.
    """
    parent = list(range(s.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, u in enumerate(s.min_nbhd):
        for y in iter_points(u):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    cells: dict[int, int] = {}
    for x in range(s.n):
        r = find(x)
        cells[r] = cells.get(r, 0) | 1 << x
    return tuple(cells[r] for r in sorted(cells))


def components_by_clopens(s: Space) -> tuple[int, ...]:
    """Components as intersections of the clopen sets around each point."""
    clopens = clopen_sets(s)
    cells = set()
    for x in range(s.n):
        cell = s.full
        for c in clopens:
            if c >> x & 1:
                cell &= c
        cells.add(cell)
    return tuple(sorted(cells, key=lambda c: (c & -c)))


def is_connected_subset(s: Space, a: int) -> bool:
    if a == 0:
        return True
    return is_connected(subspace(s, a).child)


def is_locally_connected(s: Space) -> bool:
    """Every minimal neighbourhood is connected as a subspace."""
    return all(is_connected_subset(s, u) for u in s.min_nbhd)


def is_locally_connected_by_definition(s: Space) -> bool:
    connected_opens = [u for u in s.opens if is_connected_subset(s, u)]
    for x in range(s.n):
        bit = 1 << x
        for u in s.opens:
            if u & bit and not any(v & bit and v & ~u == 0 for v in connected_opens):
                return False
    return True


def is_hausdorff(s: Space) -> bool:
    # Points separable iff their minimal neighbourhoods are disjoint.
    return all(
        s.min_nbhd[x] & s.min_nbhd[y] == 0 for x in range(s.n) for y in range(x + 1, s.n)
    )


def is_compact(s: Space) -> bool:
    return True


def is_locally_compact(s: Space) -> bool:
    return True


def minimal_open_subcover(s: Space, cover: Iterable[int]) -> tuple[int, ...]:
    """A smallest subfamily of ``cover`` that still covers the carrier.

    Among subcovers of minimum size the first in lexicographic canonical
    order is returned.
    """
    members = tuple(sorted(set(cover)))
    for u in members:
        if not is_open(s, u):
            raise NotOpenMember(f"cover member {s.format(u)} is not open")
    union = 0
    for u in members:
        union |= u
    if union != s.full:
        raise NotACover(f"cover misses {s.format(s.full & ~union)}")
    if s.n == 0:
        return ()
    bound = len(_greedy_cover(s.full, members))
    for k in range(1, bound):
        for combo in combinations(members, k):
            acc = 0
            for u in combo:
                acc |= u
            if acc == s.full:
                return combo
    for combo in combinations(members, bound):
        acc = 0
        for u in combo:
            acc |= u
        if acc == s.full:
            return combo
    raise AssertionError("greedy cover size not attained")  # pragma: no cover


def _greedy_cover(target: int, members: tuple[int, ...]) -> list[int]:
    chosen = []
    left = target
    while left:
        best = max(members, key=lambda u: bin(u & left).count("1"))
        chosen.append(best)
        left &= ~best
    return chosen
