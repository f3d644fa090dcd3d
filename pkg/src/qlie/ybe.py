"""R(lam) and R'(lam) on L~ (x) L~, the inverse identity, and braid-relation checks.

``L~ = L + k`` is modelled by adjoining the marker ``UNIT``.  The presymmetry
extends by the plain flip on any pair involving the marker, and the
projection ``p: L~ -> L`` kills the marker, so brackets with it vanish.
``lam`` is a formal parameter; every identity is checked coefficientwise in
``lam``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Tuple

from .axioms import check_identity, jacobi_residual, multiplicativity_identities, Ops
from .basis import UNIT, Element, Gen, Word, extend_bilinear, render
from .scalars import LScalar
from .structure import TLieStructure

VARIANTS = ("left", "right")


def _lift(x: Element) -> Element:
    return x.map_coeffs(LScalar.lift)


@dataclass
class OperatorMatrix:
    """Linear operator on L~ (x) L~ given by the images of basis words."""

    index: List[Word]
    columns: Dict[Word, Element]
    name: str = ""

    def image(self, a: Gen, b: Gen) -> Element:
        return self.columns[(a, b)]

    def at(self, pos: int, x: Element) -> Element:
        """Apply to the factors at ``pos``, ``pos+1`` of every word."""
        return extend_bilinear(self.image, pos, x, unit_ok=True)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """``self @ other`` applies ``other`` first."""
        cols = {w: self.at(1, other.columns[w]) for w in self.index}
        return OperatorMatrix(self.index, cols, f"{self.name}{other.name}")

    def entry(self, row: Word, col: Word) -> LScalar:
        return LScalar.lift(self.columns[col].coeff(row))

    def is_identity(self) -> Tuple[bool, dict]:
        for w in self.index:
            r = self.columns[w] - _lift(Element.word(w))
            if r:
                return False, {"input": render(Element.word(w)), "residual": render(r)}
        return True, None

    def max_lam_degree(self) -> int:
        return max((c.degree() for col in self.columns.values()
                    for c in col.terms.values()), default=0)


def extended_basis(s: TLieStructure) -> List[Gen]:
    return [UNIT] + sorted(s.gens)


def s_tilde(s: TLieStructure, a: Gen, b: Gen) -> Element:
    if a.is_unit or b.is_unit:
        return Element.word((b, a))
    return s.S(a, b)


def bracket_p(s: TLieStructure, a: Gen, b: Gen) -> Element:
    if a.is_unit or b.is_unit:
        return Element()
    return s.br(a, b)


def build_R(s: TLieStructure, variant: str = "left") -> OperatorMatrix:
    """``left``: S~ + lam [p,p] (x) 1; ``right``: S~ + lam 1 (x) [p,p]."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    basis = extended_basis(s)
    lam = LScalar.lam(1)
    index = [(a, b) for a in basis for b in basis]
    cols = {}
    for a, b in index:
        out = _lift(s_tilde(s, a, b))
        br = bracket_p(s, a, b)
        for (g,), c in br.terms.items():
            w = (g, UNIT) if variant == "left" else (UNIT, g)
            out.add_term(w, lam * c)
        cols[(a, b)] = out
    return OperatorMatrix(index, cols, "R" if variant == "left" else "R'")


def specialize(op: OperatorMatrix, value: int) -> Dict[Word, Element]:
    return {w: col.map_coeffs(lambda c: LScalar.lift(c.specialize(value)))
            for w, col in op.columns.items()}


def check_inverse(s: TLieStructure) -> dict:
    """R(lam) R'(lam) = R'(lam) R(lam) = 1 as lam-polynomial matrices."""
    t0 = time.perf_counter()
    r, rp = build_R(s, "left"), build_R(s, "right")
    ok1, w1 = (r @ rp).is_identity()
    ok2, w2 = (rp @ r).is_identity()
    return {"check": "inverse", "n": s.n, "passed": ok1 and ok2,
            "R_Rprime": ok1, "Rprime_R": ok2, "witness": w1 or w2,
            "checked": 2 * len(r.index), "elapsed": time.perf_counter() - t0}


@dataclass
class SubspaceBasis:
    which: str
    triples: List[Word]


def _compare_with_bracket(s: TLieStructure, x: Gen, y: Gen, sign: int) -> int:
    """Order of ``y`` against ``[x,y]_q`` (-1, 0, +1).

    ``sign = -1`` puts every basis element below zero, ``+1`` above.
    """
    bg = s.bracket_gen(x, y)
    if bg is None:
        return sign
    g = bg[1]
    if y < g:
        return -1
    if y > g:
        return 1
    return 0


def build_V(s: TLieStructure, which: str) -> SubspaceBasis:
    """``V1``: x<y<z, y < [x,y]_q, basis below 0.  ``V2``: x<y<z, y > [x,y]_q, basis above 0."""
    out = []
    for t in combinations(sorted(s.gens), 3):
        x, y, _ = t
        if which == "V1" and _compare_with_bracket(s, x, y, sign=-1) < 0:
            out.append(t)
        elif which == "V2" and _compare_with_bracket(s, x, y, sign=+1) > 0:
            out.append(t)
        elif which not in ("V1", "V2"):
            raise ValueError(f"unknown subspace {which!r}")
    return SubspaceBasis(which, out)


def space_words(s: TLieStructure, space) -> List[Word]:
    if isinstance(space, SubspaceBasis):
        return list(space.triples)
    if space == "full":
        return list(product(extended_basis(s), repeat=3))
    if space == "cube":
        return list(product(sorted(s.gens), repeat=3))
    if space == "L3":
        return list(combinations(sorted(s.gens), 3))
    raise ValueError(f"unknown space {space!r}")


def braid_residual(r: OperatorMatrix):
    def res(x: Element) -> Element:
        x = _lift(x)
        lhs = r.at(1, r.at(2, r.at(1, x)))
        rhs = r.at(2, r.at(1, r.at(2, x)))
        return lhs - rhs
    return res


def braid_check(s: TLieStructure, space, variant: str = "left") -> dict:
    """R1 R2 R1 = R2 R1 R2 on each basis word of the space, as lam-polynomials."""
    t0 = time.perf_counter()
    r = build_R(s, variant)
    words = space_words(s, space)
    failures = []
    max_deg = 0
    for w in words:
        x = _lift(Element.word(w))
        lhs = r.at(1, r.at(2, r.at(1, x)))
        rhs = r.at(2, r.at(1, r.at(2, x)))
        for col in (lhs, rhs):
            for c in col.terms.values():
                max_deg = max(max_deg, c.degree())
        d = lhs - rhs
        if d:
            failures.append({"input": render(Element.word(w)), "residual": render(d)})
    label = space.which if isinstance(space, SubspaceBasis) else space
    return {"check": "braid", "n": s.n, "space": label, "variant": variant,
            "checked": len(words), "failures": len(failures),
            "witness": failures[0] if failures else None,
            "failing_inputs": [f["input"] for f in failures],
            "max_lam_degree": max_deg, "passed": not failures,
            "elapsed": time.perf_counter() - t0}


def braid_conditions(s: TLieStructure, triples: List[Word], variant: str = "left") -> dict:
    """The identities equivalent to the braid relation on a set of triples in L^3.

    ``left`` needs the Jacobi identity (jT) with the multiplicativity
    identities ``left``, ``right``, ``x1``; ``right`` needs the right Jacobi
    identity with ``left``, ``right``, ``x2``.
    """
    ids = multiplicativity_identities(s)
    if variant == "left":
        jac = check_identity("jT", triples, jacobi_residual(s))
        extra = check_identity("x1", triples, ids["x1"])
    else:
        o = Ops(s)
        B1, B2, S2 = o.B(1), o.B(2), o.S(2)
        jac = check_identity("second", triples,
                             lambda x: B1(B2(x)) - B1(B1(x)) + B1(B1(S2(x))))
        extra = check_identity("x2", triples, ids["x2"])
    parts = [jac, check_identity("mult_left", triples, ids["left"]),
             check_identity("mult_right", triples, ids["right"]), extra]
    return {"variant": variant, "passed": all(p.passed for p in parts),
            "parts": {p.axiom: p.passed for p in parts}}
