"""Combinatorial virtual link diagrams and their state splicings.

A diagram is a list of crossings, each with four ports numbered ``0..3``
counterclockwise, together with a fixed-point-free involution on the ports
(each port is glued to the other end of its arc).  At a real crossing the
strand through slots 0 and 2 passes under the strand through slots 1 and 3.

Ports are addressed either as ``(crossing_id, slot)`` pairs or by the flat
index ``4 * crossing_id + slot``; the matching is stored on flat indices.

Splice conventions at a real crossing:

* A-splice joins slots {0, 1} and {2, 3};
* B-splice joins slots {0, 3} and {1, 2};

and a virtual crossing simply passes through, joining {0, 2} and {1, 3}.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

import numpy as np

Port = Tuple[int, int]


class DiagramError(ValueError):
    """A diagram violates one of its structural invariants."""


class Kind(enum.Enum):
    REAL = "X"
    VIRTUAL = "V"


REAL = Kind.REAL
VIRTUAL = Kind.VIRTUAL

#: Under-strand choices accepted by :func:`realize`.
STRAND02_UNDER = "strand02_under"
STRAND13_UNDER = "strand13_under"
ORIENTATIONS = (STRAND02_UNDER, STRAND13_UNDER)

# slot -> partner slot inside a crossing
_A_PAIRING = (1, 0, 3, 2)
_B_PAIRING = (3, 2, 1, 0)
_PASS_PAIRING = (2, 3, 0, 1)
_INNER = {"A": _A_PAIRING, "B": _B_PAIRING}


@dataclass(frozen=True)
class Crossing:
    kind: Kind

    @property
    def is_real(self) -> bool:
        return self.kind is Kind.REAL


@dataclass(frozen=True)
class Diagram:
    """A virtual link diagram as a rotation system with a port matching.

    ``kinds[i]`` is the kind of crossing ``i`` and ``matching[q]`` is the
    flat index of the port glued to port ``q``.  ``free_loops`` counts
    crossing-free circle components.
    """

    kinds: Tuple[Kind, ...]
    matching: Tuple[int, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kinds", tuple(Kind(k) for k in self.kinds))
        object.__setattr__(self, "matching", tuple(int(m) for m in self.matching))
        validate(self)

    @classmethod
    def from_pairs(
        cls,
        kinds: Sequence[Kind],
        pairs: Iterable[Tuple[Port, Port]],
        free_loops: int = 0,
    ) -> "Diagram":
        """Build from a list of glued ``((crossing, slot), (crossing, slot))`` pairs."""
        n_ports = 4 * len(kinds)
        matching = [-1] * n_ports
        for (c1, s1), (c2, s2) in pairs:
            for c, s in ((c1, s1), (c2, s2)):
                if not (0 <= s < 4):
                    raise DiagramError(f"bad slot {s} at crossing {c}")
                if not (0 <= c < len(kinds)):
                    raise DiagramError(f"no crossing {c}")
            a, b = 4 * c1 + s1, 4 * c2 + s2
            if a == b:
                raise DiagramError(f"port {(c1, s1)} matched to itself")
            for q in (a, b):
                if matching[q] != -1:
                    raise DiagramError(f"port {divmod(q, 4)} used twice")
            matching[a], matching[b] = b, a
        return cls(tuple(kinds), tuple(matching), free_loops)

    @property
    def crossings(self) -> Tuple[Crossing, ...]:
        return tuple(Crossing(k) for k in self.kinds)

    @property
    def n_crossings(self) -> int:
        return len(self.kinds)

    @property
    def real_crossings(self) -> Tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.kinds) if k is Kind.REAL)

    @property
    def virtual_crossings(self) -> Tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.kinds) if k is Kind.VIRTUAL)

    @property
    def c(self) -> int:
        """Number of real crossings; virtual crossings never count."""
        return sum(1 for k in self.kinds if k is Kind.REAL)

    @property
    def virtual_count(self) -> int:
        return len(self.kinds) - self.c

    def partner(self, port: Port) -> Port:
        c, s = port
        return divmod(self.matching[4 * c + s], 4)

    def is_classical(self) -> bool:
        return self.virtual_count == 0

    def pairs(self) -> list[Tuple[Port, Port]]:
        """Glued port pairs, each listed once, ordered by the smaller flat index."""
        out = []
        for q, r in enumerate(self.matching):
            if q < r:
                out.append((divmod(q, 4), divmod(r, 4)))
        return out


def validate(D: Diagram) -> None:
    """Raise :class:`DiagramError` unless ``D`` satisfies every structural invariant."""
    n_ports = 4 * len(D.kinds)
    if len(D.matching) != n_ports:
        raise DiagramError(
            f"matching has {len(D.matching)} entries for {len(D.kinds)} crossings ({n_ports} ports)"
        )
    if not isinstance(D.free_loops, int) or D.free_loops < 0:
        raise DiagramError(f"free_loops must be a nonnegative integer, got {D.free_loops!r}")
    if n_ports == 0 and D.free_loops < 1:
        raise DiagramError("a diagram without crossings needs at least one free loop")
    for q, r in enumerate(D.matching):
        if not (0 <= r < n_ports):
            raise DiagramError(f"port {divmod(q, 4)} is dangling (partner {r})")
        if r == q:
            raise DiagramError(f"port {divmod(q, 4)} is matched to itself")
        if D.matching[r] != q:
            raise DiagramError(f"port {divmod(r, 4)} is used twice")


@dataclass(frozen=True)
class State:
    """An assignment of ``"A"`` or ``"B"`` to every real crossing of a diagram."""

    choice: Mapping[int, str]

    def __post_init__(self):
        frozen = {}
        for cid in sorted(self.choice):
            v = self.choice[cid]
            if v not in ("A", "B"):
                raise ValueError(f"state value must be 'A' or 'B', got {v!r}")
            frozen[int(cid)] = v
        object.__setattr__(self, "choice", MappingProxyType(frozen))

    def __getitem__(self, cid: int) -> str:
        return self.choice[cid]

    def __eq__(self, other) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return dict(self.choice) == dict(other.choice)

    def __hash__(self) -> int:
        return hash(tuple(self.choice.items()))

    def __repr__(self) -> str:
        return "State(" + "".join(self.choice.values()) + ")"

    @property
    def alpha(self) -> int:
        return sum(1 for v in self.choice.values() if v == "A")

    @property
    def beta(self) -> int:
        return sum(1 for v in self.choice.values() if v == "B")

    def flip(self, p: int) -> "State":
        return flip(self, p)


def _check_state(D: Diagram, s: State) -> None:
    if set(s.choice) != set(D.real_crossings):
        raise ValueError("state domain differs from the real crossings of the diagram")


def state_all_A(D: Diagram) -> State:
    return State({p: "A" for p in D.real_crossings})


def state_all_B(D: Diagram) -> State:
    return State({p: "B" for p in D.real_crossings})


def flip(s: State, p: int) -> State:
    """Swap the splice choice at real crossing ``p``."""
    if p not in s.choice:
        raise ValueError(f"crossing {p} is not a real crossing of this state")
    new = dict(s.choice)
    new[p] = "B" if new[p] == "A" else "A"
    return State(new)


def iter_states(D: Diagram) -> Iterator[State]:
    """All ``2**c`` states, lexicographic over crossing ids with A < B."""
    real = D.real_crossings
    for idx in range(1 << len(real)):
        yield state_from_index(D, idx)


def state_from_index(D: Diagram, idx: int) -> State:
    """Decode the state numbered ``idx`` in the order of :func:`iter_states`.

    The first real crossing is the most significant bit; a set bit means B.
    """
    real = D.real_crossings
    r = len(real)
    return State({p: "B" if (idx >> (r - 1 - i)) & 1 else "A" for i, p in enumerate(real)})


def state_index(D: Diagram, s: State) -> int:
    real = D.real_crossings
    r = len(real)
    idx = 0
    for i, p in enumerate(real):
        if s[p] == "B":
            idx |= 1 << (r - 1 - i)
    return idx


@dataclass(frozen=True)
class SplicedCurves:
    """The closed curves of ``D(s)``.

    ``component_of`` labels every port with its curve id; ids are contiguous
    from 0 in order of the smallest port on each curve.  Free loops carry no
    ports but are included in ``component_count``.
    """

    component_count: int
    component_of: Mapping[Port, int] = field(repr=False)

    def __getitem__(self, port: Port) -> int:
        return self.component_of[port]


def _inner_table(D: Diagram, s: State) -> list[Tuple[int, int, int, int]]:
    table = []
    for i, k in enumerate(D.kinds):
        table.append(_INNER[s[i]] if k is Kind.REAL else _PASS_PAIRING)
    return table


def splice(D: Diagram, s: State) -> SplicedCurves:
    """Trace the curves of ``D(s)`` by walking arcs and in-crossing joins."""
    _check_state(D, s)
    inner = _inner_table(D, s)
    n_ports = 4 * D.n_crossings
    label = [-1] * n_ports
    next_id = 0
    for start in range(n_ports):
        if label[start] != -1:
            continue
        q = start
        while label[q] == -1:
            label[q] = next_id
            r = D.matching[q]
            label[r] = next_id
            c, slot = divmod(r, 4)
            q = 4 * c + inner[c][slot]
        next_id += 1
    component_of = {divmod(q, 4): lab for q, lab in enumerate(label)}
    return SplicedCurves(next_id + D.free_loops, MappingProxyType(component_of))


def component_count(D: Diagram, s: State) -> int:
    return splice(D, s).component_count


def virtualize(D: Diagram, p: int) -> Diagram:
    """Replace real crossing ``p`` by a virtual one; ids and rotation are kept."""
    if not (0 <= p < D.n_crossings) or D.kinds[p] is not Kind.REAL:
        raise DiagramError(f"crossing {p} is not a real crossing")
    kinds = list(D.kinds)
    kinds[p] = Kind.VIRTUAL
    return Diagram(tuple(kinds), D.matching, D.free_loops)


def realize(D: Diagram, v: int, orientation_choice: str = STRAND02_UNDER) -> Diagram:
    """Turn virtual crossing ``v`` into a real one with the chosen under-strand.

    With ``strand13_under`` the slots of ``v`` are rotated one step so that
    the under-strand again occupies slots 0 and 2; the cyclic order of the
    four ports is unchanged.
    """
    if not (0 <= v < D.n_crossings) or D.kinds[v] is not Kind.VIRTUAL:
        raise DiagramError(f"crossing {v} is not a virtual crossing")
    if orientation_choice not in ORIENTATIONS:
        raise ValueError(f"orientation_choice must be one of {ORIENTATIONS}")
    kinds = list(D.kinds)
    kinds[v] = Kind.REAL
    if orientation_choice == STRAND02_UNDER:
        return Diagram(tuple(kinds), D.matching, D.free_loops)

    def relabel(q: int) -> int:
        c, s = divmod(q, 4)
        return 4 * c + (s - 1) % 4 if c == v else q

    matching = [0] * len(D.matching)
    for q, r in enumerate(D.matching):
        matching[relabel(q)] = relabel(r)
    return Diagram(tuple(kinds), tuple(matching), D.free_loops)


def connecting_arc_components(D: Diagram, s: State, p: int) -> Tuple[int, int]:
    """Curve ids of the two strands left at real crossing ``p`` by its splice.

    Slots 0 and 2 always lie on different strands of either splice, so the
    connecting arc runs between the curves through those two ports.
    """
    if p not in s.choice:
        raise ValueError(f"crossing {p} is not a real crossing")
    curves = splice(D, s)
    return curves[(p, 0)], curves[(p, 2)]


def incident_components(D: Diagram, s: State, v: int) -> frozenset[int]:
    """Ids of the curves of ``D(s)`` passing through virtual crossing ``v``."""
    if not (0 <= v < D.n_crossings) or D.kinds[v] is not Kind.VIRTUAL:
        raise DiagramError(f"crossing {v} is not a virtual crossing")
    curves = splice(D, s)
    return frozenset((curves[(v, 0)], curves[(v, 1)]))


# ---------------------------------------------------------------------------
# Vectorised counting over many states at once.

def _state_bits(n_real: int, indices: np.ndarray) -> np.ndarray:
    """Boolean ``(len(indices), n_real)`` array; True means B."""
    shifts = np.arange(n_real - 1, -1, -1, dtype=np.int64)
    return ((indices[:, None] >> shifts[None, :]) & 1).astype(bool)


def component_counts(D: Diagram, indices: np.ndarray | None = None, chunk: int = 1 << 14) -> np.ndarray:
    """``#D(s)`` for the states numbered ``indices`` (default: all states).

    Uses the successor permutation ``q -> inner(matching(q))`` on ports.  Each
    curve carries exactly two of its cycles (one per direction of travel),
    which are counted by min-label pointer doubling.
    """
    real = D.real_crossings
    r = len(real)
    if indices is None:
        indices = np.arange(1 << r, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    n_ports = 4 * D.n_crossings
    if n_ports == 0:
        return np.full(len(indices), D.free_loops, dtype=np.int64)

    matching = np.asarray(D.matching, dtype=np.int64)
    base = np.empty(n_ports, dtype=np.int64)
    for c, k in enumerate(D.kinds):
        pairing = _A_PAIRING if k is Kind.REAL else _PASS_PAIRING
        base[4 * c:4 * c + 4] = [4 * c + t for t in pairing]
    # flipping A -> B at a real crossing: slot t goes to B_PAIRING[t]
    real_ports = np.array([4 * p + t for p in real for t in range(4)], dtype=np.int64)
    b_targets = np.array([4 * p + _B_PAIRING[t] for p in real for t in range(4)], dtype=np.int64)

    rounds = max(1, int(np.ceil(np.log2(n_ports))) + 1)
    ident = np.arange(n_ports, dtype=np.int64)
    out = np.empty(len(indices), dtype=np.int64)
    for lo in range(0, len(indices), chunk):
        idx = indices[lo:lo + chunk]
        m = len(idx)
        inner = np.broadcast_to(base, (m, n_ports)).copy()
        if r:
            bits = np.repeat(_state_bits(r, idx), 4, axis=1)
            cur = inner[:, real_ports]
            inner[:, real_ports] = np.where(bits, b_targets[None, :], cur)
        succ = np.take_along_axis(inner, np.broadcast_to(matching, (m, n_ports)), axis=1)
        lab = np.broadcast_to(ident, (m, n_ports)).copy()
        for _ in range(rounds):
            lab = np.minimum(lab, np.take_along_axis(lab, succ, axis=1))
            succ = np.take_along_axis(succ, succ, axis=1)
        cycles = (lab == ident[None, :]).sum(axis=1)
        out[lo:lo + m] = cycles // 2 + D.free_loops
    return out
