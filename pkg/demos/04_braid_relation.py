"""R(lam), its inverse R'(lam), and the braid relation.

Run with:  python3 demos/04_braid_relation.py
"""

from qlie.basis import UNIT, make_gen, render
from qlie.structure import quantum_sl_plus
from qlie.ybe import braid_check, build_R, build_V, check_inverse

s = quantum_sl_plus(2)
R = build_R(s, "left")
e12, e23 = make_gen(1, 2, 2), make_gen(2, 3, 2)
print("R(e12 (x) e23) =", render(R.image(e12, e23)))
print("R(1 (x) e12)   =", render(R.image(UNIT, e12)))

print("R R' = R' R = 1:", check_inverse(s)["passed"])

for n in (2, 3):
    s = quantum_sl_plus(n)
    for variant, which in (("left", "V1"), ("right", "V2")):
        v = build_V(s, which)
        r = braid_check(s, v, variant)
        print(f"n={n} {which} ({len(v.triples)} triples), {variant}: "
              f"{'holds' if r['passed'] else 'fails on ' + str(r['failures'])}")
        if r["witness"]:
            print("    ", r["witness"]["input"], "->", r["witness"]["residual"])

full = braid_check(quantum_sl_plus(2), "full", "left")
print(f"\nsl3, all {full['checked']} words of the triple tensor power: {full['failures']} residuals")
print("  e.g.", full["witness"]["input"], "->", full["witness"]["residual"])
