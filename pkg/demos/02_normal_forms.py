"""Normal forms in U(L) and the PBW certificate.

Run with:  python3 demos/02_normal_forms.py
"""

from qlie.basis import parse_element, render
from qlie.pbw import RewriteSystem, overlap_confluence, pbw_independence
from qlie.structure import abelianized, quantum_sl_plus

s = quantum_sl_plus(3)
rs = RewriteSystem(s)

for text in ["e(2,3)*e(1,2)", "e(2,4)*e(1,3)", "e(3,4)*e(2,4)*e(1,4)*e(1,2)"]:
    x = parse_element(text, 3)
    print(f"{text:<32} -> {render(rs.normal_form(x))}")

# the same word in the q-symmetric algebra: only the swaps survive
sym = RewriteSystem(abelianized(s), "symmetric")
print("in S(L):  e(2,4)*e(1,3) ->", render(sym.normal_form(parse_element("e(2,4)*e(1,3)", 3))))

# step by step
trace = []
rs.normal_form(parse_element("e(3,4)*e(1,3)*e(1,2)", 3), trace=trace)
for step in trace:
    print(f"  step {step['step']}: rewrite {step['word']:<22} now {step['current']}")

# every overlap x y z with x > y > z resolves the same way from both ends
conf = overlap_confluence(rs)
print("\nconfluence:", conf.passed, f"({conf.strict} strict, {conf.repeated} repeated overlaps)")

# and the nondecreasing words really are independent up to length 3
r = pbw_independence(rs, 3)
print(f"rank of all normal forms: {r.rank}, quotient dimension: {r.quotient_dim}, "
      f"sorted words: {r.monomial_count}")
