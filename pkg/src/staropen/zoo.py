"""Small named spaces used in examples, tests and the CLI."""

from __future__ import annotations

import re

from .space import Space, discrete, full_set, generate_topology, indiscrete, validate_topology


def sierpinski() -> Space:
    """Two points, opens {}, {0}, {0,1}."""
    return validate_topology(2, [0b00, 0b01, 0b11])


def t3() -> Space:
    """Three points generated by the subbasis {0}, {1}."""
    return generate_topology(3, [0b001, 0b010])


def particular_point(n: int, p: int = 0) -> Space:
    """The empty set plus every subset containing ``p``."""
    return validate_topology(n, [0] + [a for a in range(1 << n) if a >> p & 1])


def excluded_point(n: int, p: int = 0) -> Space:
    """The full set plus every subset missing ``p``."""
    return validate_topology(n, [full_set(n)] + [a for a in range(1 << n) if not a >> p & 1])


_PARAMETRIC = {
    "discrete": discrete,
    "indiscrete": indiscrete,
    "particular-point": particular_point,
    "excluded-point": excluded_point,
}

_FIXED = {
    "sierpinski": sierpinski,
    "s2": sierpinski,
    "t3": t3,
    "p3": lambda: particular_point(3),
    "d2": lambda: discrete(2),
}


def named_space(name: str) -> Space:
    """Look up a built-in space such as ``sierpinski`` or ``discrete-3``."""
    key = name.lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"([a-z-]+?)-?(\d+)", key)
    if m and m.group(1) in _PARAMETRIC:
        return _PARAMETRIC[m.group(1)](int(m.group(2)))
    raise KeyError(name)


def known_names() -> list[str]:
    return sorted(_FIXED) + [f"{k}-<n>" for k in sorted(_PARAMETRIC)]
