"""
Checking the span bound on random diagrams
==========================================

Random rotation systems with a mix of real and virtual crossings.  The
span never exceeds 4c + 2(chi - 2), and pseudo-adequate ones hit it.
"""
import numpy as np

from virtspan import generators as gen
from virtspan.adequacy import adequacy_report
from virtspan.kauffman import kmt_bound, span_bracket

gaps, tight = [], 0
for seed in range(400):
    D = gen.random_diagram(seed, 1 + seed % 10, seed % 4)
    s, b = span_bracket(D), kmt_bound(D)
    assert s <= b
    gaps.append(b - s)
    if adequacy_report(D).pseudo_adequate:
        assert s == b
        tight += 1

gaps = np.array(gaps)
print("largest gap", gaps.max(), " mean gap", gaps.mean().round(2))
print("gap histogram", np.bincount(gaps))
print("pseudo-adequate diagrams", tight)
