"""Built-in arrangements used by the CLI and the acceptance suites."""

from __future__ import annotations

from .arrangement import Arrangement
from .poly import Ring

XY = ("x", "y")
XYZ = ("x", "y", "z")


def _arr(names, forms, mults=None, name=None):
    return Arrangement(Ring(names), forms, mults, name=name)


# name -> (variables, support coefficient vectors, multiplicities)
_ENTRIES = {
    # the five named in the CLI contract
    "boolean3": (XYZ, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], None),
    "generic4": (XYZ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], None),
    "near_pencil4": (XYZ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], None),
    "generic5": (XYZ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)], None),
    "braid3": (XYZ, [(1, -1, 0), (1, 0, -1), (0, 1, -1)], None),
    # two variables
    "line2": (XY, [(1, 0), (0, 1)], None),
    "pencil3": (XY, [(1, 0), (0, 1), (1, 1)], None),
    "pencil4": (XY, [(1, 0), (0, 1), (1, 1), (1, -1)], None),
    "pencil5": (XY, [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)], None),
    "double_x_y": (XY, [(1, 0), (0, 1)], [2, 1]),
    "double_pencil3": (XY, [(1, 0), (0, 1), (1, 1)], [2, 2, 1]),
    "double_pencil4": (XY, [(1, 0), (0, 1), (1, 1), (1, -1)], [2, 1, 2, 1]),
    # three variables with multiplicities
    "double_x_boolean3": (XYZ, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [2, 1, 1]),
    "double_boolean3": (XYZ, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [2, 2, 2]),
    "double_generic4": (XYZ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [2, 1, 2, 1]),
    "double_near_pencil4": (XYZ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], [1, 2, 1, 2]),
    "double_near_pencil5": (XYZ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (0, 0, 1)],
                            [1, 1, 1, 1, 2]),
    "pencil_plus_line5": (XYZ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (0, 0, 1)], None),
    "two_triples5": (XYZ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1)], None),
    "planar_pair": (XYZ, [(1, 0, 0), (0, 1, 0)], [2, 1]),
    "double_braid3": (XYZ, [(1, -1, 0), (1, 0, -1), (0, 1, -1)], [2, 1, 1]),
    # four variables (star configurations in P^3)
    "boolean4": (("x0", "x1", "x2", "x3"),
                 [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], None),
    "generic5_p3": (("x0", "x1", "x2", "x3"),
                    [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)], None),
}

NAMED = ("boolean3", "generic4", "near_pencil4", "generic5", "braid3")


def names() -> list[str]:
    return list(_ENTRIES)


def get(name: str) -> Arrangement:
    try:
        names_, forms, mults = _ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown catalog arrangement {name!r}; known: {', '.join(_ENTRIES)}")
    return _arr(names_, forms, mults, name=name)


def decomposition_catalog(max_n: int = 6) -> list[Arrangement]:
    """k in {2,3}, support <= 5, multiplicities <= 2, n <= max_n."""
    out = []
    for name in _ENTRIES:
        a = get(name)
        if a.k in (2, 3) and a.s <= 5 and max(a.mults) <= 2 and a.n <= max_n:
            out.append(a)
    return out


def star_support(N: int, s: int) -> Arrangement:
    """s hyperplanes of P^N meeting properly: coordinate hyperplanes plus generic extras."""
    if s < N + 1:
        raise ValueError("need s >= N + 1")
    names_ = ("x", "y", "z") if N == 2 else tuple(f"x{i}" for i in range(N + 1))
    forms = [tuple(int(i == j) for j in range(N + 1)) for i in range(N + 1)]
    # rows of a Vandermonde-type matrix keep every maximal minor nonzero
    for extra in range(s - N - 1):
        forms.append(tuple((j + 1) ** extra for j in range(N + 1)))
    arr = _arr(names_, forms, name=f"star_P{N}_s{s}")
    if not arr.meets_properly():
        raise AssertionError(f"{arr} does not meet properly")
    return arr
