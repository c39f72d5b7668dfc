"""Adequacy predicates, admissibility and the span equality certificates.

Everything here is decided from curve counts of single states:

* the Euler characteristic of the Turaev surface is ``#D(s_A) + #D(s_B) - c``;
* a connecting arc at ``p`` in ``D(s)`` is admissible exactly when changing
  the splice at ``p`` does not increase the number of curves;
* a diagram is A-adequate when every single flip away from ``s_A`` strictly
  lowers the count, and pseudo-adequate when no such flip raises it (and
  symmetrically for ``s_B``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

from .kauffman import DEFAULT_MAX_CROSSINGS, kmt_bound, span_bracket
from .diagram import (
    ORIENTATIONS,
    Diagram,
    DiagramError,
    Kind,
    State,
    component_count,
    connecting_arc_components,
    flip,
    incident_components,
    realize,
    splice,
    state_all_A,
    state_all_B,
    virtualize,
)

NOT_CLASSICAL = "NotClassical"
INCONCLUSIVE = "Inconclusive"


def euler_characteristic(D: Diagram) -> int:
    return (
        component_count(D, state_all_A(D))
        + component_count(D, state_all_B(D))
        - D.c
    )


def is_admissible(D: Diagram, s: State, p: int) -> bool:
    """True iff flipping the splice at ``p`` does not increase ``#D(s)``."""
    return component_count(D, flip(s, p)) <= component_count(D, s)


@dataclass(frozen=True)
class AdequacyReport:
    a_adequate: bool
    b_adequate: bool
    adequate: bool
    pseudo_adequate: bool
    failing_crossings_A: Tuple[int, ...] = ()
    failing_crossings_B: Tuple[int, ...] = ()
    comp_sA: int = 0
    comp_sB: int = 0

    def as_dict(self) -> dict:
        return {
            "a_adequate": self.a_adequate,
            "b_adequate": self.b_adequate,
            "adequate": self.adequate,
            "pseudo_adequate": self.pseudo_adequate,
            "failing_crossings_A": list(self.failing_crossings_A),
            "failing_crossings_B": list(self.failing_crossings_B),
        }


def adequacy_report(D: Diagram) -> AdequacyReport:
    sA, sB = state_all_A(D), state_all_B(D)
    kA, kB = component_count(D, sA), component_count(D, sB)
    fail_A, fail_B = [], []
    pseudo = True
    for p in D.real_crossings:
        kA1 = component_count(D, flip(sA, p))
        kB1 = component_count(D, flip(sB, p))
        if kA1 >= kA:
            fail_A.append(p)
        if kB1 >= kB:
            fail_B.append(p)
        if kA1 > kA or kB1 > kB:
            pseudo = False
    a_ok, b_ok = not fail_A, not fail_B
    return AdequacyReport(
        a_adequate=a_ok,
        b_adequate=b_ok,
        adequate=a_ok and b_ok,
        pseudo_adequate=pseudo,
        failing_crossings_A=tuple(fail_A),
        failing_crossings_B=tuple(fail_B),
        comp_sA=kA,
        comp_sB=kB,
    )


def is_adequate(D: Diagram) -> bool:
    return adequacy_report(D).adequate


def is_pseudo_adequate(D: Diagram) -> bool:
    return adequacy_report(D).pseudo_adequate


def v_adequacy_witnesses(D: Diagram, mode: str = "adequate") -> list[Tuple[int, str]]:
    """Single realizations ``(v, orientation)`` turning ``D`` (pseudo-)adequate.

    ``mode`` is ``"adequate"`` or ``"pseudo"``.  An empty list means no
    single virtual crossing can be made real to reach the predicate.
    """
    if mode not in ("adequate", "pseudo"):
        raise ValueError(f"mode must be 'adequate' or 'pseudo', got {mode!r}")
    out = []
    for v in D.virtual_crossings:
        for o in ORIENTATIONS:
            rep = adequacy_report(realize(D, v, o))
            if rep.adequate if mode == "adequate" else rep.pseudo_adequate:
                out.append((v, o))
    return out


@dataclass(frozen=True)
class AdmissibilityCheck:
    state: str
    crossing: int
    passed: bool


@dataclass(frozen=True)
class Theorem43Certificate:
    """Record of the hypotheses of the v-pseudo-adequate span equality.

    ``source`` is the pseudo-adequate candidate ``D'``; the certified diagram
    is ``virtualize(source, virtualized_crossing)``.  Each check names a real
    crossing whose connecting arc has both ends on a curve through the new
    virtual crossing.
    """

    source: Diagram
    virtualized_crossing: int
    pseudo_adequate_source: bool
    incident_A: Tuple[int, ...]
    incident_B: Tuple[int, ...]
    admissibility_checks: Tuple[AdmissibilityCheck, ...] = field(default=())
    valid: bool = False

    @property
    def diagram(self) -> Diagram:
        return virtualize(self.source, self.virtualized_crossing)

    def as_dict(self) -> dict:
        return {
            "virtualized_crossing": self.virtualized_crossing,
            "pseudo_adequate_source": self.pseudo_adequate_source,
            "incident_components_A": list(self.incident_A),
            "incident_components_B": list(self.incident_B),
            "admissibility_checks": [
                {"state": ch.state, "crossing": ch.crossing, "passed": ch.passed}
                for ch in self.admissibility_checks
            ],
            "valid": self.valid,
        }


def check_theorem_43(Dprime: Diagram, p: int) -> Theorem43Certificate:
    """Check whether virtualizing ``p`` in ``Dprime`` provably keeps the KMT equality.

    When ``vp`` lies on two curves of ``D(s_A)`` (or ``D(s_B)``), arcs landing
    with both ends on either of them are checked.
    """
    if not (0 <= p < Dprime.n_crossings) or Dprime.kinds[p] is not Kind.REAL:
        raise DiagramError(f"crossing {p} is not a real crossing")
    pseudo = adequacy_report(Dprime).pseudo_adequate
    D = virtualize(Dprime, p)
    checks = []
    incident = {}
    for tag, s in (("A", state_all_A(D)), ("B", state_all_B(D))):
        curves = splice(D, s)
        k = curves.component_count
        around_vp = {curves[(p, 0)], curves[(p, 1)]}
        incident[tag] = tuple(sorted(around_vp))
        for q in D.real_crossings:
            i, j = curves[(q, 0)], curves[(q, 2)]
            if i == j and i in around_vp:
                ok = component_count(D, flip(s, q)) <= k
                checks.append(AdmissibilityCheck(tag, q, ok))
    valid = pseudo and all(ch.passed for ch in checks)
    return Theorem43Certificate(
        source=Dprime,
        virtualized_crossing=p,
        pseudo_adequate_source=pseudo,
        incident_A=incident["A"],
        incident_B=incident["B"],
        admissibility_checks=tuple(checks),
        valid=valid,
    )


@dataclass(frozen=True)
class ClassicalityVerdict:
    span: int
    verdict: str

    @property
    def not_classical(self) -> bool:
        return self.verdict == NOT_CLASSICAL


def classicality_obstruction(D: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> ClassicalityVerdict:
    """``NotClassical`` when the bracket span is not a multiple of 4.

    A multiple of 4 proves nothing, so the other outcome is ``Inconclusive``.
    """
    sp = span_bracket(D, max_crossings)
    return ClassicalityVerdict(sp, NOT_CLASSICAL if sp % 4 else INCONCLUSIVE)


__all__ = [
    "AdequacyReport",
    "AdmissibilityCheck",
    "ClassicalityVerdict",
    "INCONCLUSIVE",
    "NOT_CLASSICAL",
    "Theorem43Certificate",
    "adequacy_report",
    "check_theorem_43",
    "classicality_obstruction",
    "connecting_arc_components",
    "euler_characteristic",
    "incident_components",
    "is_adequate",
    "is_admissible",
    "is_pseudo_adequate",
    "kmt_bound",
    "v_adequacy_witnesses",
]
