"""Exhaustive verification of the T-Lie axioms and side conditions.

Operator identities are evaluated on basis words of L(x)L or L(x)L(x)L using
positional operators: ``S1 = S (x) 1``, ``S2 = 1 (x) S``, and likewise the
bracket at position 1 or 2.  Compositions read right to left, as in
``[,](1 (x) [,])(S (x) 1)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, List, Optional

from .basis import Element, Word, extend_bilinear, render
from .structure import ClassicalOracle, TLieStructure

TRIPLE_SPACES = ("L3", "3L", "all")


@dataclass
class AxiomReport:
    axiom: str
    passed: bool
    checked: int = 0
    failures: int = 0
    skipped: int = 0
    witness: Optional[dict] = None
    parts: List["AxiomReport"] = field(default_factory=list)
    elapsed: float = 0.0
    note: str = ""

    def find(self, axiom: str) -> "AxiomReport":
        if self.axiom == axiom:
            return self
        for p in self.parts:
            try:
                return p.find(axiom)
            except KeyError:
                pass
        raise KeyError(axiom)

    def to_dict(self, timings: bool = False) -> dict:
        d = {"axiom": self.axiom, "passed": self.passed, "checked": self.checked,
             "failures": self.failures, "skipped": self.skipped, "witness": self.witness}
        if self.note:
            d["note"] = self.note
        if timings:
            d["elapsed"] = round(self.elapsed, 6)
        if self.parts:
            d["parts"] = [p.to_dict(timings) for p in self.parts]
        return d


def combine(axiom: str, parts: List[AxiomReport], note: str = "") -> AxiomReport:
    return AxiomReport(
        axiom=axiom,
        passed=all(p.passed for p in parts),
        checked=sum(p.checked for p in parts),
        failures=sum(p.failures for p in parts),
        skipped=sum(p.skipped for p in parts),
        witness=next((p.witness for p in parts if p.witness), None),
        parts=parts,
        elapsed=sum(p.elapsed for p in parts),
        note=note,
    )


# -- triple spaces -----------------------------------------------------------

def pairs(s: TLieStructure) -> List[Word]:
    return [(a, b) for a in s.gens for b in s.gens]


def triple_space(s: TLieStructure, kind: str) -> List[Word]:
    """``L3``: x<y<z; ``3L``: x>y>z; ``all``: the full cube."""
    gens = sorted(s.gens)
    if kind == "L3":
        return [t for t in combinations(gens, 3)]
    if kind == "3L":
        return [tuple(reversed(t)) for t in combinations(gens, 3)]
    if kind == "all":
        return list(product(gens, repeat=3))
    raise ValueError(f"unknown triple space {kind!r}")


# -- positional operators ----------------------------------------------------

class Ops:
    """Positional operators built from the tables of one structure."""

    def __init__(self, s: TLieStructure):
        self.s = s

    def S(self, pos: int) -> Callable[[Element], Element]:
        return lambda x: extend_bilinear(self.s.S, pos, x)

    def B(self, pos: int) -> Callable[[Element], Element]:
        return lambda x: extend_bilinear(self.s.br, pos, x)

    def P(self, pos: int) -> Callable[[Element], Element]:
        return lambda x: extend_bilinear(self.s.pb, pos, x)

    @staticmethod
    def chain(*fs: Callable[[Element], Element]) -> Callable[[Element], Element]:
        """Composition ``fs[0] o fs[1] o ...`` (rightmost applied first)."""
        def run(x):
            for f in reversed(fs):
                x = f(x)
            return x
        return run


def check_identity(axiom: str, inputs: Iterable[Word],
                   residual: Callable[[Element], Element], note: str = "") -> AxiomReport:
    """Evaluate ``residual`` on every input word; pass iff all vanish."""
    t0 = time.perf_counter()
    checked = failures = 0
    witness = None
    for w in inputs:
        checked += 1
        r = residual(Element.word(w))
        if r:
            failures += 1
            if witness is None:
                witness = {"input": render(Element.word(w)), "residual": render(r)}
    return AxiomReport(axiom=axiom, passed=failures == 0, checked=checked, failures=failures,
                       witness=witness, elapsed=time.perf_counter() - t0, note=note)


def _difference(lhs, rhs):
    return lambda x: lhs(x) - rhs(x)


# -- identities ---------------------------------------------------------------

def multiplicativity_identities(s: TLieStructure) -> dict:
    """Residual maps for the multiplicativity identities on triples.

    ``left``:  S([,] (x) 1) = (1 (x) [,]) S1 S2
    ``right``: S(1 (x) [,]) = ([,] (x) 1) S2 S1
    ``x1``:    S(1 (x) [,]) S1 = ([,] (x) 1) S2
    ``x2``:    S([,] (x) 1) S2 = (1 (x) [,]) S1
    """
    o = Ops(s)
    S, S1, S2, B1, B2 = o.S(1), o.S(1), o.S(2), o.B(1), o.B(2)
    c = o.chain
    return {
        "left": _difference(c(S, B1), c(B2, S1, S2)),
        "right": _difference(c(S, B2), c(B1, S2, S1)),
        "x1": _difference(c(S, B2, S1), c(B1, S2)),
        "x2": _difference(c(S, B1, S2), c(B2, S1)),
    }


def jacobi_residual(s: TLieStructure):
    """[,](1 (x) [,]) - [,]([,] (x) 1) - [,](1 (x) [,])(S (x) 1)."""
    o = Ops(s)
    B1, B2, S1 = o.B(1), o.B(2), o.S(1)
    return lambda x: B1(B2(x)) - B1(B1(x)) - B1(B2(S1(x)))


def second_jacobi_residual(s: TLieStructure):
    """[,]((1 (x) [,]) S1 S2 - ([,] (x) 1) S2 S1 + ([,] (x) 1) S2)."""
    o = Ops(s)
    B1, B2, S1, S2 = o.B(1), o.B(2), o.S(1), o.S(2)
    return lambda x: B1(B2(S1(S2(x))) - B1(S2(S1(x))) + B1(S2(x)))


def _scalar_form(s: TLieStructure, which: str):
    """Scalar forms on x(x)y(x)z for descending triples.

    ``j1``: [x,[y,z]] - [[x,y],z] - q_{x,y} [y,[x,z]]
    ``j2``: [x,[y,z]] - [[x,y],z] + q_{y,z} [[x,z],y]
    """
    o = Ops(s)
    B1, B2 = o.B(1), o.B(2)

    def res(x: Element) -> Element:
        ((w, c),) = x.terms.items()
        a, b, d = w
        out = B1(B2(x)) - B1(B1(x))
        if which == "j1":
            out = out - B1(B2(Element.word((b, a, d), c))).scale(s.qxy(a, b))
        else:
            out = out + B1(B1(Element.word((a, d, b), c))).scale(s.qxy(b, d))
        return out
    return res


# -- checks --------------------------------------------------------------------

def check_antisymmetry(s: TLieStructure) -> AxiomReport:
    o = Ops(s)
    S, B, P = o.S(1), o.B(1), o.P(1)
    prs = pairs(s)
    return combine("antisymmetry", [
        check_identity("2a", prs, lambda x: B(S(x)) + B(x), "[,]S = -[,]"),
        check_identity("2b", prs, lambda x: P(S(x)) + P(x), "<,>S = -<,>"),
        check_identity("2c", prs, lambda x: B(P(x)), "[,]<,> = 0"),
    ])


def check_jacobi(s: TLieStructure) -> AxiomReport:
    return combine("jacobi", [
        check_identity("jT", triple_space(s, "all"), jacobi_residual(s)),
        check_identity("j1", triple_space(s, "3L"), _scalar_form(s, "j1"),
                       "scalar form on descending triples"),
    ])


def check_second_jacobi(s: TLieStructure) -> AxiomReport:
    return combine("second_jacobi", [
        check_identity("jacobi2", triple_space(s, "3L"), second_jacobi_residual(s)),
        check_identity("j2", triple_space(s, "3L"), _scalar_form(s, "j2"),
                       "scalar form on descending triples"),
    ])


def check_multiplicativity(s: TLieStructure, v: str, braid_side: bool = False) -> AxiomReport:
    """Multiplicativity (m1)-(m4) on a triple space.

    With ``braid_side`` the two further identities required by the braid
    relation (``x1``, ``x2``) are checked on the same space.
    """
    ids = multiplicativity_identities(s)
    if v == "L3":
        t = triple_space(s, "L3")
        parts = [check_identity("m1", t, ids["left"]), check_identity("m2", t, ids["right"])]
    elif v == "3L":
        t = triple_space(s, "3L")
        parts = [check_identity("m3", t, ids["left"]), check_identity("m4", t, ids["right"])]
    elif v == "all":
        up, down = triple_space(s, "L3"), triple_space(s, "3L")
        t = triple_space(s, "all")
        skipped = len(t) - len(up) - len(down)
        parts = [check_identity("m1", up, ids["left"]), check_identity("m2", up, ids["right"]),
                 check_identity("m3", down, ids["left"]), check_identity("m4", down, ids["right"])]
        for p in parts:
            p.skipped = skipped
            p.note = "triples with a repeated generator are out of space"
    else:
        raise ValueError(f"unknown triple space {v!r}")
    if braid_side:
        parts += [check_identity("x1", t, ids["x1"]), check_identity("x2", t, ids["x2"])]
    out = combine(f"multiplicativity[{v}]", parts)
    out.skipped = max(p.skipped for p in parts)
    return out


def check_prejacobi_conditions(s: TLieStructure) -> AxiomReport:
    ids = multiplicativity_identities(s)
    o = Ops(s)
    S, S1, S2, B, B1, B2 = o.S(1), o.S(1), o.S(2), o.B(1), o.B(1), o.B(2)
    down = triple_space(s, "3L")
    cube = triple_space(s, "all")
    ad_inputs = [(a, b, b) for a in s.gens for b in s.gens]

    def ad(x):
        return B(S(B1(x))) - B1(B2(S1(S2(x))))

    def first(x):
        return B1(B2(x)) - B1(B1(x)) - B1(B2(S1(x)))

    def second(x):
        return B1(B2(x)) - B1(B1(x)) + B1(B1(S2(x)))

    return combine("prejacobi", [
        check_identity("c1", down, ids["left"]),
        check_identity("c2", down, ids["right"]),
        check_identity("ad", ad_inputs, ad, "[,]S([x,y] (x) y) = [,](1 (x) [,])S1S2(x (x) y (x) y)"),
        check_identity("first", cube, first, "left Jacobi identity"),
        check_identity("second", cube, second, "right Jacobi identity"),
    ], note="balanced structure with gamma = 1 - S")


def check_stability(s: TLieStructure, convention: str = "max") -> AxiomReport:
    """Strict gradation of the bracket and the filtration bound of the pseudobracket.

    ``sum``: the total degree of each pseudobracket output word is at most
    eta1 + eta2 - 1.  ``max``: each factor's degree is at most eta1 + eta2 - 1.
    """
    if convention not in ("sum", "max"):
        raise ValueError(f"unknown filtration convention {convention!r}")
    eta = s.eta
    prs = pairs(s)

    def grading(x):
        ((w, _),) = x.terms.items()
        a, b = w
        out = s.br(a, b)
        bad = {u: c for u, c in out.terms.items()
               if len(u) != 1 or eta[u[0]] != eta[a] + eta[b] - 1}
        return Element(bad)

    def filtration(x):
        ((w, _),) = x.terms.items()
        a, b = w
        bound = eta[a] + eta[b] - 1
        bad = {}
        for u, c in s.pb(a, b).terms.items():
            degs = [eta[g] for g in u]
            deg = sum(degs) if convention == "sum" else max(degs)
            if deg > bound:
                bad[u] = c
        return Element(bad)

    return combine(f"stability[{convention}]", [
        check_identity("1a", prs, grading, "[L_a, L_b] in L_(a+b-1)"),
        check_identity("1b", prs, filtration, f"<L_a, L_b> in (L(x)L)_(a+b-1), {convention} degree"),
    ])


def check_descending_triples(s: TLieStructure) -> AxiomReport:
    """[[z,x],y] vanishes classically and for the q-bracket whenever x > y > z."""
    o = Ops(s)
    B1 = o.B(1)
    oracle = ClassicalOracle(s.n)

    def classical(a, b):
        return oracle.bracket(a, b)

    def res(x):
        ((w, c),) = x.terms.items()
        a, b, d = w
        zxy = Element.word((d, a, b), c)
        qpart = B1(B1(zxy))
        cpart = extend_bilinear(classical, 1, extend_bilinear(classical, 1, zxy))
        # the two parts must vanish separately, so never let them cancel
        return qpart if qpart else cpart

    return combine("descending_triples", [check_identity("dt", triple_space(s, "3L"), res)])


def check_scalar_hypotheses(s: TLieStructure) -> AxiomReport:
    """q_{x,y} q_{y,x} = 1 and S^2 = 1 on every pair of generators."""
    o = Ops(s)
    S = o.S(1)
    prs = pairs(s)

    def inverse_pair(x):
        ((w, _),) = x.terms.items()
        a, b = w
        prod_ = s.qxy(a, b) * s.qxy(b, a)
        return Element.scalar(prod_ - 1) if prod_ != 1 else Element()

    return combine("scalar_hypotheses", [
        check_identity("q_inverse", prs, inverse_pair, "q_{x,y} q_{y,x} = 1"),
        check_identity("S2_identity", prs, lambda x: S(S(x)) - x, "S^2 = 1"),
    ])


def verify_all(s: TLieStructure, convention: str = "max") -> List[AxiomReport]:
    """The full axiom suite in a fixed order."""
    return [
        check_antisymmetry(s),
        check_jacobi(s),
        check_second_jacobi(s),
        check_multiplicativity(s, "L3"),
        check_multiplicativity(s, "3L"),
        check_prejacobi_conditions(s),
        check_descending_triples(s),
        check_scalar_hypotheses(s),
        check_stability(s, convention),
    ]
