"""
Virtualizing one crossing of an alternating diagram
===================================================

Turning a single real crossing of the trefoil or figure-eight into a
virtual one drops the span by 6.  The result is 2 mod 4, so no
classical diagram can have that bracket.
"""
from virtspan import generators as gen
from virtspan.adequacy import classicality_obstruction
from virtspan.diagram import virtualize
from virtspan.kauffman import bracket, span_bracket

for D, name in [(gen.trefoil(), "trefoil"), (gen.figure_eight(), "figure8"), (gen.torus_2n(5), "torus5")]:
    base = span_bracket(D)
    for p in D.real_crossings:
        V = virtualize(D, p)
        verdict = classicality_obstruction(V)
        print(f"{name} crossing {p}: {base} -> {verdict.span}  {verdict.verdict}")

print(bracket(virtualize(gen.trefoil(), 0)))
