"""The filtration by eta-degree and the associated graded algebra.

Run with:  python3 demos/03_graded_algebra.py
"""

from qlie.graded import omega_check, omega_multiplicativity, zero_divisor_probe
from qlie.pbw import RewriteSystem, overlap_confluence
from qlie.structure import quantum_sl_plus

s = quantum_sl_plus(3)
rs = RewriteSystem(s)
conf = overlap_confluence(rs)  # omega_check refuses to run without this

print(" m  dim U_m  dim G^m  sorted words  injective  surjective")
for m in range(7):
    r = omega_check(s, m, confluence=conf, rs=rs)
    print(f"{m:>2} {r['dim_U_m']:>8} {r['dim_G_m']:>8} {r['sorted_word_count']:>13}"
          f" {r['injective']!s:>10} {r['surjective']!s:>11}")

# omega is a linear bijection level by level, but is it multiplicative?
mult = omega_multiplicativity(s, 6, rs=rs)
print("\nomega multiplicative up to degree 6:", mult["passed"],
      f"({mult['failures']} of {mult['checked']} products differ)")
if mult["witness"]:
    w = mult["witness"]
    print(f"  {w['left']} * {w['right']}: in G {w['product_in_G']}, in S(L) {w['omega_of_product']}")

probe = zero_divisor_probe(s, 2, 100, seed=0, rs=rs)
print("\nzero products among 100 random pairs:", probe["zero_products"])
