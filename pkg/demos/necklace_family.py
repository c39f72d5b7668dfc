"""
The virtual necklaces H_n and H'_n
==================================

H_n alternates n real and n virtual crossings along a row of n+1
circles.  Adding one real crossing gives H'_n, which virtualizes back
to H_n at the designated crossing.
"""
from virtspan import generators as gen
from virtspan.adequacy import adequacy_report, check_theorem_43, euler_characteristic
from virtspan.diagram import virtualize
from virtspan.kauffman import kmt_bound, span_bracket

print(" n  span(H)  bound  chi  pseudo  span(H')  cert")
for n in range(2, 9):
    H = gen.necklace_Hn(n)
    Hp = gen.necklace_Hprime_n(n)
    cert = check_theorem_43(Hp, gen.HPRIME_DESIGNATED)
    print(f"{n:2d}  {span_bracket(H):7d}  {kmt_bound(H):5d}  {euler_characteristic(H):3d}"
          f"  {str(adequacy_report(H).pseudo_adequate):6s}  {span_bracket(Hp):8d}  {cert.valid}")
    assert virtualize(Hp, gen.HPRIME_DESIGNATED) == H

# H_n is pseudo-adequate but not adequate: some flips leave the count unchanged
rep = adequacy_report(gen.necklace_Hn(4))
print(rep.adequate, rep.pseudo_adequate, rep.failing_crossings_A)
