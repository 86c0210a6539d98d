"""Subspaces and binary products of finite spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .space import MAX_POINTS, Space, canonical_family, generate_topology, iter_points


class EmptyCarrier(ValueError):
    pass


class WidthOverflow(ValueError):
    pass


@dataclass(frozen=True)
class SubspaceEmbedding:
    parent: Space
    carrier: int
    child: Space
    # index_map[x] is the child index of parent point x, or None outside Y.
    index_map: tuple[int | None, ...]

    def to_child(self, a: int) -> int:
        """Re-index a parent subset; points outside the carrier are dropped."""
        result = 0
        for x in iter_points(a & self.carrier):
            result |= 1 << self.index_map[x]
        return result

    def to_parent(self, b: int) -> int:
        result = 0
        for x in iter_points(self.carrier):
            if b >> self.index_map[x] & 1:
                result |= 1 << x
        return result


def subspace(parent: Space, y: int) -> SubspaceEmbedding:
    """Subspace topology on ``y``, points re-indexed in ascending order."""
    if y == 0:
        raise EmptyCarrier("subspace carrier must be nonempty")
    pts = list(iter_points(y))
    if pts[-1] >= parent.n:
        raise ValueError(f"carrier {y:#b} exceeds the {parent.n}-point parent")
    index_map: list[int | None] = [None] * parent.n
    for i, x in enumerate(pts):
        index_map[x] = i

    def reindex(a: int) -> int:
        r = 0
        for x in iter_points(a & y):
            r |= 1 << index_map[x]
        return r

    opens = canonical_family(reindex(o) for o in parent.opens)
    labels = tuple(parent.label(x) for x in pts) if parent.labels is not None else None
    child = Space(len(pts), opens, labels)
    return SubspaceEmbedding(parent, y, child, tuple(index_map))


def _rectangle(a: int, b: int, right_n: int) -> int:
    result = 0
    for x in iter_points(a):
        result |= b << (x * right_n)
    return result


@dataclass(frozen=True)
class ProductSpace:
    left: Space
    right: Space
    space: Space

    def pair(self, x: int, y: int) -> int:
        return x * self.right.n + y

    def unpair(self, p: int) -> tuple[int, int]:
        return divmod(p, self.right.n)

    def rectangle(self, a: int, b: int) -> int:
        """The flat-indexed subset ``a x b``."""
        return _rectangle(a, b, self.right.n)

    def is_rectangle(self, c: int) -> bool:
        left, right = self.shadows(c)
        return self.rectangle(left, right) == c

    def shadows(self, c: int) -> tuple[int, int]:
        """Projections of ``c`` onto the two factors."""
        left = right = 0
        for p in iter_points(c):
            x, y = self.unpair(p)
            left |= 1 << x
            right |= 1 << y
        return left, right


def product(a: Space, b: Space) -> ProductSpace:
    """Product topology, generated by all open rectangles.

    Point ``(x, y)`` gets the flat index ``x * b.n + y``.
    """
    n = a.n * b.n
    if n > MAX_POINTS:
        raise WidthOverflow(f"product of {a.n} and {b.n} points exceeds {MAX_POINTS}")
    space = _product(a, b).space
    if a.labels is not None or b.labels is not None:
        space = space.with_labels(
            [f"({a.label(x)},{b.label(y)})" for x in range(a.n) for y in range(b.n)]
        )
    return ProductSpace(a, b, space)


@lru_cache(maxsize=4096)
def _product(a: Space, b: Space) -> ProductSpace:
    rects = {_rectangle(u, v, b.n) for u in a.opens for v in b.opens}
    return ProductSpace(a, b, generate_topology(a.n * b.n, sorted(rects)))

