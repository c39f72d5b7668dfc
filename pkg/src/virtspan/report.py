"""One-shot collection of every invariant the tool reports for a diagram."""
from __future__ import annotations

from dataclasses import dataclass

from .adequacy import INCONCLUSIVE, NOT_CLASSICAL, adequacy_report
from .kauffman import DEFAULT_MAX_CROSSINGS, bracket
from .diagram import Diagram
from .laurent import LaurentPoly, span

#: Column order of batch CSV output (after the leading ``file`` column).
FIELDS = (
    "c",
    "virtual_count",
    "free_loops",
    "comp_sA",
    "comp_sB",
    "euler_char",
    "kmt_bound",
    "span",
    "a_adequate",
    "b_adequate",
    "adequate",
    "pseudo_adequate",
    "classicality",
    "bracket",
)


@dataclass(frozen=True)
class InvariantReport:
    c: int
    virtual_count: int
    free_loops: int
    comp_sA: int
    comp_sB: int
    euler_char: int
    kmt_bound: int
    bracket: LaurentPoly
    span: int
    a_adequate: bool
    b_adequate: bool
    adequate: bool
    pseudo_adequate: bool
    classicality: str

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "virtual_count": self.virtual_count,
            "free_loops": self.free_loops,
            "comp_sA": self.comp_sA,
            "comp_sB": self.comp_sB,
            "euler_char": self.euler_char,
            "kmt_bound": self.kmt_bound,
            "bracket": self.bracket.to_pairs(),
            "span": self.span,
            "a_adequate": self.a_adequate,
            "b_adequate": self.b_adequate,
            "adequate": self.adequate,
            "pseudo_adequate": self.pseudo_adequate,
            "classicality": self.classicality,
        }

    def row(self) -> list[str]:
        d = self.as_dict()
        d["bracket"] = str(self.bracket)
        return [str(d[f]).lower() if isinstance(d[f], bool) else str(d[f]) for f in FIELDS]

    def text(self) -> str:
        lines = [
            f"real crossings      {self.c}",
            f"virtual crossings   {self.virtual_count}",
            f"free loops          {self.free_loops}",
            f"#D(s_A), #D(s_B)    {self.comp_sA}, {self.comp_sB}",
            f"Euler char          {self.euler_char}",
            f"bracket             {self.bracket}",
            f"span                {self.span}",
            f"KMT bound           {self.kmt_bound}",
            f"A-/B-adequate       {self.a_adequate}/{self.b_adequate}",
            f"adequate            {self.adequate}",
            f"pseudo-adequate     {self.pseudo_adequate}",
            f"classicality        {self.classicality}",
        ]
        return "\n".join(lines)


def invariant_report(D: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> InvariantReport:
    poly = bracket(D, max_crossings)
    adq = adequacy_report(D)
    chi = adq.comp_sA + adq.comp_sB - D.c
    sp = span(poly)
    return InvariantReport(
        c=D.c,
        virtual_count=D.virtual_count,
        free_loops=D.free_loops,
        comp_sA=adq.comp_sA,
        comp_sB=adq.comp_sB,
        euler_char=chi,
        kmt_bound=4 * D.c + 2 * (chi - 2),
        bracket=poly,
        span=sp,
        a_adequate=adq.a_adequate,
        b_adequate=adq.b_adequate,
        adequate=adq.adequate,
        pseudo_adequate=adq.pseudo_adequate,
        classicality=NOT_CLASSICAL if sp % 4 else INCONCLUSIVE,
    )
