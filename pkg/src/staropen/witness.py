"""Witness instances and the reports that carry them."""

from __future__ import annotations

from dataclasses import dataclass

from .maps import SpaceMap
from .space import Space


@dataclass(frozen=True)
class Witness:
    """One instance a check or search is evaluated on.

    ``sets`` are bit masks whose carrier depends on the check (usually
    ``spaces[0]``).  ``assign``, when present, is a map from ``spaces[0]``
    to ``spaces[1]``.
    """

    spaces: tuple[Space, ...]
    sets: tuple[int, ...] = ()
    assign: tuple[int, ...] | None = None

    @property
    def space(self) -> Space:
        return self.spaces[0]

    @property
    def map(self) -> SpaceMap:
        if self.assign is None:
            raise ValueError("witness carries no map")
        return SpaceMap(self.spaces[0], self.spaces[1], self.assign)

    @property
    def carrier_size(self) -> int:
        return max(s.n for s in self.spaces)

    def describe(self) -> str:
        parts = ["spaces " + " ; ".join(_describe_space(s) for s in self.spaces)]
        if self.sets:
            parts.append("sets " + " ".join(_bits_str(a) for a in self.sets))
        if self.assign is not None:
            parts.append("map " + ",".join(map(str, self.assign)))
        return " | ".join(parts)


def _describe_space(s: Space) -> str:
    return f"n={s.n} opens=" + "[" + " ".join(_bits_str(o) for o in s.opens) + "]"


def _bits_str(a: int) -> str:
    return "{" + ",".join(str(x) for x in range(a.bit_length()) if a >> x & 1) + "}"


PASS = "pass"
FAIL = "fail"
FOUND = "found"
NOT_FOUND = "not-found"


@dataclass(frozen=True)
class WitnessReport:
    check_id: str
    status: str
    population: int
    witness: Witness | None = None
    empirical: bool = False
    bound: int | None = None

    def line(self, witness_file: str | None = None) -> str:
        fields = ["CHECK", self.check_id, self.status, str(self.population)]
        if witness_file:
            fields.append(witness_file)
        return " ".join(fields)

    @property
    def has_witness(self) -> bool:
        return self.status in (FAIL, FOUND)
