"""Walk through the structure tables of (sl_4^+)_q.

Run with:  python3 demos/01_structure_tables.py
"""

from qlie.axioms import check_antisymmetry, check_stability, verify_all
from qlie.basis import Element, make_gen, render
from qlie.structure import c_const, quantum_sl_plus

n = 3
s = quantum_sl_plus(n)
print(s.name, "has", len(s.gens), "generators, in order:")
print("  ", " < ".join(str(g) for g in s.gens))

e = lambda i, j: make_gen(i, j, n)

# presymmetry: a scaled flip, with the exponent read from [h_ab, e_ij]
for x, y in [(e(1, 2), e(2, 3)), (e(2, 3), e(1, 2)), (e(1, 3), e(2, 4))]:
    print(f"S({x} (x) {y}) = {render(s.S(x, y))}    c = {c_const(x, y)}")

# brackets on ascending pairs are classical; descending ones pick up a power of q
print("[e(1,2), e(2,3)]_q =", render(s.br(e(1, 2), e(2, 3))))
print("[e(2,3), e(1,2)]_q =", render(s.br(e(2, 3), e(1, 2))))

# the pseudobracket only fires on interleaved pairs e_ab, e_ij with a < i < b < j
print("<e(1,3), e(2,4)> =", render(s.pb(e(1, 3), e(2, 4))))
print("<e(2,4), e(1,3)> =", render(s.pb(e(2, 4), e(1, 3))))

print()
for r in verify_all(s):
    print(f"{r.axiom:<22} {'pass' if r.passed else 'FAIL'}  ({r.checked} instances)")

# the two ways of measuring the degree of a pseudobracket output disagree
bad = check_stability(s, "sum")
print("\nstability under the summed degree:", "pass" if bad.passed else "fails")
print("  first witness:", bad.witness)
# e(2,3) (x) e(1,4) has degrees 2 + 4 = 6, while the bound from e(1,3), e(2,4) is 3 + 3 - 1 = 5

corrupted = s.with_entry("bracket_table", (e(1, 2), e(2, 3)), Element.word((e(1, 3), ), 2))
print("antisymmetry after doubling one bracket entry:",
      "pass" if check_antisymmetry(corrupted).passed else "fails")
