"""
Bracket polynomials of small classical diagrams
===============================================

Builds a few standard diagrams, prints their brackets, and the
per-state curve counts behind the Hopf link.
"""
from virtspan import generators as gen
from virtspan.diagram import component_counts, state_from_index
from virtspan.kauffman import bracket, span_bracket

for name in ["unknot", "kink+", "kink-", "hopf", "trefoil", "figure8"]:
    D = gen.classical_anchors()[name]
    print(f"{name:8s} c={D.c}  <D> = {bracket(D)}   span {span_bracket(D)}")

# every state of the Hopf diagram, with the number of curves it leaves
H = gen.hopf()
counts = component_counts(H)
for i, k in enumerate(counts):
    s = state_from_index(H, i)
    print("".join(s[p] for p in H.real_crossings), int(k))

# (2, n) torus closures: span grows by 4 per crossing
print([span_bracket(gen.torus_2n(n)) for n in range(2, 9)])
