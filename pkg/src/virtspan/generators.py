"""Constructors for the example families and classical anchor diagrams.

The necklace ``H_n`` is a row of ``n + 1`` circles, each consecutive pair
overlapping in a lens with two crossings: the bottom one real (right circle
over), the top one virtual.  Crossing ``2k`` is the bottom crossing of pair
``k`` and ``2k + 1`` its top crossing.  Slots are read counterclockwise off
the picture of circles centred on a horizontal line; at the top crossings
slot 0 is on the right circle.  ``H'_n`` makes the top crossing of pair 0
real as well (crossing id 1, right circle under), so that
``virtualize(H'_n, 1) == H_n``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .codec import parse
from .diagram import Diagram, Kind, STRAND02_UNDER, realize, virtualize

#: Crossing id of the distinguished top crossing of ``H'_n``.
HPRIME_DESIGNATED = 1


def unknot() -> Diagram:
    return Diagram((), (), free_loops=1)


def kink(handedness: int = 1) -> Diagram:
    """One-crossing unknot; bracket ``-A^3`` for ``+1`` and ``-A^-3`` for ``-1``."""
    if handedness == 1:
        return parse("X 0 0 1 1")
    if handedness == -1:
        return parse("X 0 1 1 0")
    raise ValueError(f"handedness must be +1 or -1, got {handedness!r}")


def hopf() -> Diagram:
    return parse("X 0 3 1 2\nX 2 1 3 0")


def trefoil() -> Diagram:
    return parse("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2")


def figure_eight() -> Diagram:
    return parse("X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8")


def torus_2n(n: int) -> Diagram:
    """Closure of the 2-braid with ``n`` equal crossings (the torus link T(2, n)).

    Arc ``2k`` (``2k + 1``) enters crossing ``k`` from the bottom left (right);
    the strand from bottom left to top right is the under-strand.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"torus_2n needs n >= 2, got {n!r}")

    def left(k: int) -> int:
        return 2 * (k % n)

    def right(k: int) -> int:
        return 2 * (k % n) + 1

    lines = [f"X {left(k)} {right(k)} {right(k + 1)} {left(k + 1)}" for k in range(n)]
    return parse("\n".join(lines))


def _necklace(n: int) -> Diagram:
    # slot layouts, as (circle role, direction of travel) per slot;
    # directions are counterclockwise ("ccw") or clockwise ("cw") around that circle
    bottom = (("L", "ccw"), ("R", "cw"), ("L", "cw"), ("R", "ccw"))
    top = (("R", "cw"), ("L", "ccw"), ("R", "ccw"), ("L", "cw"))
    kinds = []
    slot_of = {}
    for k in range(n):
        for cid, layout, kind in (
            (2 * k, bottom, Kind.REAL),
            (2 * k + 1, top, Kind.VIRTUAL),
        ):
            kinds.append(kind)
            for slot, key in enumerate(layout):
                slot_of[(cid, key)] = slot

    def port(cid, role, direction):
        return 4 * cid + slot_of[(cid, (role, direction))]

    matching = [-1] * (4 * len(kinds))
    for i in range(n + 1):
        # crossings on circle i in counterclockwise order, with circle i's role there
        points = []
        if i < n:
            points.append((2 * i + 1, "L"))  # top-right
        if i > 0:
            points.append((2 * (i - 1) + 1, "R"))  # top-left
            points.append((2 * (i - 1), "R"))  # bottom-left
        if i < n:
            points.append((2 * i, "L"))  # bottom-right
        for j, (cid, role) in enumerate(points):
            ncid, nrole = points[(j + 1) % len(points)]
            a = port(cid, role, "ccw")
            b = port(ncid, nrole, "cw")
            matching[a], matching[b] = b, a
    return Diagram(tuple(kinds), tuple(matching))


def necklace_Hn(n: int) -> Diagram:
    """``H_n``: ``n`` real and ``n`` virtual crossings."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"necklace_Hn needs n >= 2, got {n!r}")
    return _necklace(n)


def necklace_Hprime_n(n: int) -> Diagram:
    """``H'_n``: ``H_n`` with crossing :data:`HPRIME_DESIGNATED` made real."""
    return realize(necklace_Hn(n), HPRIME_DESIGNATED, STRAND02_UNDER)


def virtualized(D: Diagram, p: int) -> Diagram:
    return virtualize(D, p)


def random_diagram(seed: int, c_real: int, c_virtual: int) -> Diagram:
    """A uniformly random port matching on ``c_real + c_virtual`` crossings.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``: the
    crossing kinds are shuffled, then the port list is shuffled and paired off
    consecutively.  Output depends only on the arguments.
    """
    n = c_real + c_virtual
    if c_real < 0 or c_virtual < 0 or n < 1:
        raise ValueError("need c_real, c_virtual >= 0 and at least one crossing")
    rng = random.Random(seed)
    kinds = [Kind.REAL] * c_real + [Kind.VIRTUAL] * c_virtual
    rng.shuffle(kinds)
    ports = list(range(4 * n))
    rng.shuffle(ports)
    matching = [0] * (4 * n)
    for a, b in zip(ports[::2], ports[1::2]):
        matching[a], matching[b] = b, a
    return Diagram(tuple(kinds), tuple(matching))


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: Optional[int] = None
    orientation: Optional[int] = None

    def build(self) -> Diagram:
        return build_family(self.name, self.n, self.orientation)


_FIXED = {
    "unknot": unknot,
    "hopf": hopf,
    "trefoil": trefoil,
    "figure8": figure_eight,
}
_PARAM = {
    "torus": torus_2n,
    "hn": necklace_Hn,
    "hprime": necklace_Hprime_n,
}
FAMILIES = tuple(sorted([*_FIXED, *_PARAM, "kink"]))


def build_family(name: str, n: Optional[int] = None, orientation: Optional[int] = None) -> Diagram:
    if name in _FIXED:
        return _FIXED[name]()
    if name == "kink":
        # the handedness may arrive either as the parameter or the orientation
        for h in (orientation, n):
            if h is not None:
                return kink(h)
        return kink()
    if name in _PARAM:
        if n is None:
            raise ValueError(f"family {name!r} needs a parameter n")
        return _PARAM[name](n)
    raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def classical_anchors() -> dict[str, Diagram]:
    """Classical diagrams with known brackets, keyed by name."""
    out = {
        "unknot": unknot(),
        "kink+": kink(1),
        "kink-": kink(-1),
        "hopf": hopf(),
        "trefoil": trefoil(),
        "figure8": figure_eight(),
    }
    for n in range(2, 9):
        out[f"torus{n}"] = torus_2n(n)
    return out


def corpus(max_n: int = 8) -> dict[str, Diagram]:
    """Reference corpus: classical anchors, their single virtualizations and
    the necklaces ``H_n``, ``H'_n`` for ``2 <= n <= max_n``."""
    out = classical_anchors()
    for name, D in list(out.items()):
        if D.c >= 2:
            for p in D.real_crossings:
                out[f"{name}~v{p}"] = virtualize(D, p)
    for n in range(2, max_n + 1):
        out[f"H{n}"] = necklace_Hn(n)
        out[f"H'{n}"] = necklace_Hprime_n(n)
    return out
