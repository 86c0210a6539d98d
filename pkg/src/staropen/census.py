"""Enumeration of all topologies on a labeled finite carrier."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .space import Space, full_set

CENSUS_CAP = 5
ORACLE_CAP = 4


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class TopologyCensus:
    n: int
    spaces: tuple[Space, ...]

    @property
    def count(self) -> int:
        return len(self.spaces)


def enumerate_topologies(n: int, cap: int = CENSUS_CAP) -> TopologyCensus:
    """All topologies on ``n`` labeled points, sorted by their open families."""
    if n > cap:
        raise CapExceeded(f"census of {n} points exceeds the cap of {cap}")
    if n < 0:
        raise ValueError("negative carrier size")
    return _census(n)


@lru_cache(maxsize=None)
def _census(n: int) -> TopologyCensus:
    families = sorted(_closed_families(n))
    return TopologyCensus(n, tuple(Space(n, f) for f in families))


def _closed_families(n: int) -> list[tuple[int, ...]]:
    # Proper nonempty subsets are decided in ascending order.  A subset of c
    # is numerically smaller than c, so intersections with the chosen sets
    # must already be decided; unions are numerically larger and become
    # obligations for later candidates.
    full = full_set(n)
    if n == 0:
        return [(0,)]
    candidates = range(1, full)
    out: list[tuple[int, ...]] = []

    def walk(i: int, chosen: list[int], chosen_set: frozenset[int], required: frozenset[int]) -> None:
        if i == len(candidates):
            out.append((0, *chosen, full))
            return
        c = candidates[i]
        if c not in required:
            walk(i + 1, chosen, chosen_set, required)
        if any((c & d) and (c & d) not in chosen_set for d in chosen):
            return
        unions = {c | d for d in chosen if c | d != c and c | d != full}
        walk(i + 1, chosen + [c], chosen_set | {c}, required | unions)

    walk(0, [], frozenset(), frozenset())
    return out


def naive_topologies(n: int) -> list[tuple[int, ...]]:
    """Filter every family of subsets by the axioms; independent oracle."""
    if n > ORACLE_CAP:
        raise CapExceeded(f"naive oracle is limited to {ORACLE_CAP} points")
    full = full_set(n)
    subsets = 1 << n
    found = []
    for mask in range(1 << subsets):
        if not (mask & 1 and mask >> full & 1):
            continue
        members = [a for a in range(subsets) if mask >> a & 1]
        if all(
            mask >> (a | b) & 1 and mask >> (a & b) & 1
            for i, a in enumerate(members)
            for b in members[i + 1:]
        ):
            found.append(tuple(members))
    return found


def canonical_form(s: Space) -> tuple[int, ...]:
    """Least open family over all relabelings of the points."""
    best = None
    for perm in permutations(range(s.n)):
        family = tuple(sorted(_permute(o, perm) for o in s.opens))
        if best is None or family < best:
            best = family
    return best if best is not None else s.opens


def _permute(bits: int, perm: tuple[int, ...]) -> int:
    result = 0
    for x, y in enumerate(perm):
        if bits >> x & 1:
            result |= 1 << y
    return result


def up_to_isomorphism(spaces: tuple[Space, ...]) -> tuple[Space, ...]:
    """One representative per isomorphism class: the canonical form itself."""
    forms = sorted({canonical_form(s) for s in spaces})
    return tuple(Space(spaces[0].n, f) for f in forms) if spaces else ()


def space_ref(s: Space) -> tuple[int, int]:
    """``(n, index)`` of ``s`` within its census."""
    return s.n, _index(s.n)[s.opens]


@lru_cache(maxsize=None)
def _index(n: int) -> dict[tuple[int, ...], int]:
    return {s.opens: i for i, s in enumerate(enumerate_topologies(n).spaces)}


def resolve(ref: tuple[int, int]) -> Space:
    n, i = ref
    return enumerate_topologies(n).spaces[i]


def spaces_up_to(max_n: int, min_n: int = 1) -> list[Space]:
    return [s for n in range(min_n, max_n + 1) for s in enumerate_topologies(n).spaces]
