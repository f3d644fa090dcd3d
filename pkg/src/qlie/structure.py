"""Structure tables of the quantum T-Lie algebra (sl_{n+1}^+)_q.

A ``TLieStructure`` stores, for every ordered pair of generators, the image of
the presymmetry ``S`` (a scalar times the swapped pair), the bracket (a
multiple of one generator, or zero) and the pseudobracket (a multiple of a
length-2 word, or zero).  Tables are materialized eagerly; ``n`` stays small.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Tuple

from .basis import Element, Gen, eta_default, generators, make_gen
from .scalars import ONE, ZERO, Q_MINUS_QINV, QScalar

Pair = Tuple[Gen, Gen]
STableEntry = Tuple[QScalar, Gen, Gen]


class ClassicalOracle:
    """Exact matrix-unit arithmetic in gl_{n+1}; ground truth for brackets."""

    def __init__(self, n: int):
        self.n = n
        self.dim = n + 1

    @staticmethod
    def unit(i: int, j: int) -> Dict[Tuple[int, int], int]:
        return {(i, j): 1}

    @staticmethod
    def matmul(a, b):
        out: Dict[Tuple[int, int], int] = {}
        for (i, k), x in a.items():
            for (k2, j), y in b.items():
                if k == k2:
                    out[(i, j)] = out.get((i, j), 0) + x * y
        return {key: v for key, v in out.items() if v}

    @classmethod
    def commutator(cls, a, b):
        ab = cls.matmul(a, b)
        ba = cls.matmul(b, a)
        out = dict(ab)
        for key, v in ba.items():
            out[key] = out.get(key, 0) - v
        return {key: v for key, v in out.items() if v}

    def h(self, g: Gen):
        """``h_ab = [e_ab, e_ab^t]``."""
        return self.commutator(self.unit(g.i, g.j), self.unit(g.j, g.i))

    def bracket(self, a: Gen, b: Gen) -> Element:
        m = self.commutator(self.unit(a.i, a.j), self.unit(b.i, b.j))
        terms = {}
        for (i, j), v in m.items():
            if not i < j:
                raise AssertionError(f"commutator left the upper triangular part: E{i}{j}")
            terms[(Gen(i, j),)] = QScalar.const(v)
        return Element(terms)

    def c_const(self, ab: Gen, ij: Gen) -> int:
        m = self.commutator(self.h(ab), self.unit(ij.i, ij.j))
        if not m:
            return 0
        if set(m) != {(ij.i, ij.j)}:
            raise AssertionError(f"e({ij.i},{ij.j}) is not an eigenvector of ad h")
        return m[(ij.i, ij.j)]


def c_const(ab: Gen, ij: Gen) -> int:
    """Integer ``c`` with ``[h_ab, e_ij] = c e_ij``."""
    return ClassicalOracle(max(ab.j, ij.j)).c_const(ab, ij)


def classical_bracket(a: Gen, b: Gen) -> Element:
    """The usual sl_{n+1} commutator on matrix units."""
    return ClassicalOracle(max(a.j, b.j)).bracket(a, b)


@dataclass(frozen=True)
class TLieStructure:
    """Bracket, presymmetry and pseudobracket tables on a finite ordered basis."""

    n: int
    gens: Tuple[Gen, ...]
    eta: Mapping[Gen, int]
    s_table: Mapping[Pair, STableEntry]
    bracket_table: Mapping[Pair, Element]
    pseudo_table: Mapping[Pair, Element]
    name: str = "custom"
    _zero: Element = field(default_factory=Element, repr=False, compare=False)

    # -- generator-pair rules ----------------------------------------------

    def S(self, a: Gen, b: Gen) -> Element:
        c, x, y = self.s_table[(a, b)]
        return Element._raw({(x, y): c})

    def br(self, a: Gen, b: Gen) -> Element:
        return self.bracket_table.get((a, b), self._zero)

    def pb(self, a: Gen, b: Gen) -> Element:
        return self.pseudo_table.get((a, b), self._zero)

    def qxy(self, a: Gen, b: Gen) -> QScalar:
        """Scalar ``q_{a,b}`` of ``S(a (x) b) = q_{a,b} b (x) a``."""
        c, x, y = self.s_table[(a, b)]
        if (x, y) != (b, a):
            raise ValueError(f"S({a},{b}) is not a scaled flip")
        return c

    def bracket_gen(self, a: Gen, b: Gen):
        """``(scalar, generator)`` of a nonzero bracket, or ``None``."""
        v = self.br(a, b)
        if not v:
            return None
        ((w, c),) = v.terms.items()
        return c, w[0]

    def eta_of(self, g: Gen) -> int:
        return self.eta[g]

    # -- linear extensions on length-2 words --------------------------------

    def _apply2(self, rule, x: Element) -> Element:
        out = Element._raw({})
        for w, c in x.terms.items():
            if len(w) != 2:
                raise ValueError(f"expected a length-2 word, got length {len(w)}")
            for u, d in rule(*w).terms.items():
                out.add_term(u, d * c)
        return out

    def presymmetry(self, x: Element) -> Element:
        return self._apply2(self.S, x)

    def bracket(self, x: Element) -> Element:
        return self._apply2(self.br, x)

    def pseudobracket(self, x: Element) -> Element:
        return self._apply2(self.pb, x)

    def replace(self, **changes) -> "TLieStructure":
        return dataclasses.replace(self, **changes)

    def with_entry(self, table: str, pair: Pair, value) -> "TLieStructure":
        """Copy with a single table entry overwritten (negative controls)."""
        t = dict(getattr(self, table))
        t[pair] = value
        return self.replace(**{table: t, "name": self.name + "+corrupted"})

    def descriptor(self) -> dict:
        return {"name": self.name, "n": self.n,
                "eta": {str(g): self.eta[g] for g in self.gens}}


def _antisymmetric_extension(gens, s_table, upper: Dict[Pair, Element]) -> Dict[Pair, Element]:
    """Fill descending pairs so that ``f S = -f``: ``f(y,x) = -q_{y,x} f(x,y)``."""
    out = {}
    for (a, b), v in upper.items():
        if v:
            out[(a, b)] = v
    for a in gens:
        for b in gens:
            if a > b:
                c, x, y = s_table[(a, b)]
                v = upper.get((x, y))
                if v:
                    out[(a, b)] = v.scale(-c)
    return out


def quantum_sl_plus(n: int, eta: Callable[[Gen], int] = eta_default) -> TLieStructure:
    """The T-Lie algebra (sl_{n+1}^+)_q on the basis ``e_ij``, ``1 <= i < j <= n+1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    oracle = ClassicalOracle(n)
    gens = generators(n)
    s_table: Dict[Pair, STableEntry] = {}
    upper_br: Dict[Pair, Element] = {}
    upper_pb: Dict[Pair, Element] = {}
    for x in gens:
        for y in gens:
            if x == y:
                s_table[(x, y)] = (ONE, x, x)
            elif x < y:
                k = oracle.c_const(x, y)
                s_table[(x, y)] = (QScalar.qpow(k), y, x)
                s_table[(y, x)] = (QScalar.qpow(-k), x, y)
                upper_br[(x, y)] = oracle.bracket(x, y)
                a, b, i, j = x.i, x.j, y.i, y.j
                if a < i < b < j:
                    upper_pb[(x, y)] = Element.word(
                        (make_gen(i, b, n), make_gen(a, j, n)), Q_MINUS_QINV)
    return TLieStructure(
        n=n,
        gens=tuple(gens),
        eta={g: eta(g) for g in gens},
        s_table=s_table,
        bracket_table=_antisymmetric_extension(gens, s_table, upper_br),
        pseudo_table=_antisymmetric_extension(gens, s_table, upper_pb),
        name=f"(sl_{n + 1}^+)_q",
    )


def make_sign_presymmetry(degrees: Mapping[Gen, int]) -> Dict[Pair, STableEntry]:
    """``S(x (x) y) = (-1)^((deg x - 1)(deg y - 1)) y (x) x`` on the given symbols."""
    table = {}
    for x, m in degrees.items():
        for y, k in degrees.items():
            sign = -1 if ((m - 1) * (k - 1)) % 2 else 1
            table[(x, y)] = (QScalar.const(sign), y, x)
    return table


def sign_structure(n: int, degrees: Mapping[Gen, int] = None,
                   bracket: str = "classical") -> TLieStructure:
    """Classical sl_{n+1}^+ bracket with a sign presymmetry and zero pseudobracket.

    With all degrees 1 this is the ordinary Lie algebra sl_{n+1}^+ viewed as a
    T-Lie algebra with the plain flip.
    """
    gens = generators(n)
    degrees = degrees or {g: 1 for g in gens}
    s_table = make_sign_presymmetry(degrees)
    br: Dict[Pair, Element] = {}
    if bracket == "classical":
        oracle = ClassicalOracle(n)
        for x in gens:
            for y in gens:
                v = oracle.bracket(x, y)
                if v:
                    br[(x, y)] = v
    return TLieStructure(
        n=n, gens=tuple(gens), eta={g: 1 for g in gens}, s_table=s_table,
        bracket_table=br, pseudo_table={}, name=f"sign-presymmetry sl_{n + 1}^+")


def abelianized(s: TLieStructure) -> TLieStructure:
    """The abelian T-Lie algebra L^0: same presymmetry, zero brackets."""
    return s.replace(bracket_table={}, pseudo_table={}, name=s.name + "^0")


def structure_dump(s: TLieStructure) -> dict:
    """JSON-ready rendering of all four tables, keyed by ``"e(a,b),e(i,j)"``."""
    from .basis import render

    def key(a, b):
        return f"{a},{b}"

    c_tab, s_tab, b_tab, p_tab = {}, {}, {}, {}
    for a in s.gens:
        for b in s.gens:
            if a.j and b.j:
                c_tab[key(a, b)] = c_const(a, b)
            c, x, y = s.s_table[(a, b)]
            s_tab[key(a, b)] = {"scalar": str(c), "output": render(Element.word((x, y)))}
            b_tab[key(a, b)] = render(s.br(a, b))
            p_tab[key(a, b)] = render(s.pb(a, b))
    return {"structure": s.descriptor(), "c": c_tab, "S": s_tab,
            "bracket": b_tab, "pseudobracket": p_tab}


__all__ = [
    "ClassicalOracle", "TLieStructure", "abelianized", "c_const", "classical_bracket",
    "make_sign_presymmetry", "quantum_sl_plus", "sign_structure", "structure_dump", "ZERO",
]
