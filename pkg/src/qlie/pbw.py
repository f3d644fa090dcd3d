"""Normal forms in U(L) and S(L) by rewriting, overlap confluence, PBW rank checks.

The defining relation of U(L), read left to right on a descending pair
``x > y``::

    x y  ->  q_{x,y} y x + <x,y> + [x,y]

In symmetric mode (the abelian structure L^0) only the first term is kept.
Every rewrite strictly lowers a word in degree-lexicographic order: a swap is
lexicographically smaller, a bracket is shorter, and a pseudobracket word
starts with a smaller generator.  ``max_steps`` turns an unexpected
non-terminating table into a diagnosable error instead of a hang.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Dict, List, Optional, Tuple

from .basis import Element, Gen, Word, deglex_key, is_sorted_word, render, sorted_words
from .linalg import EchelonForm
from .structure import TLieStructure

MODES = ("enveloping", "symmetric")


class NoRedex(ValueError):
    """The word is already nondecreasing."""


class GuardExceeded(RuntimeError):
    def __init__(self, msg: str, trace: List[dict]):
        super().__init__(msg)
        self.trace = trace


def descents(w: Word) -> List[int]:
    """1-based positions ``k`` with ``w[k] > w[k+1]``."""
    return [k + 1 for k in range(len(w) - 1) if w[k] > w[k + 1]]


@dataclass
class RewriteSystem:
    structure: TLieStructure
    mode: str = "enveloping"
    max_steps: int = 10_000
    _rules: Dict[Tuple[Gen, Gen], Element] = field(default_factory=dict, repr=False)
    _cache: Dict[Word, Element] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        s = self.structure
        for x in s.gens:
            for y in s.gens:
                if x > y:
                    rhs = s.S(x, y)
                    if self.mode == "enveloping":
                        rhs = rhs + s.pb(x, y) + s.br(x, y)
                    self._rules[(x, y)] = rhs

    def relation(self, x: Gen, y: Gen) -> Element:
        """Right-hand side for the descending pair ``x y``."""
        return self._rules[(x, y)]

    def rewrite_at(self, w: Word, pos: int) -> Element:
        """Rewrite the descending pair at 1-based ``pos``."""
        k = pos - 1
        x, y = w[k], w[k + 1]
        if not x > y:
            raise NoRedex(f"no descending pair at position {pos} of {render(Element.word(w))}")
        head, tail = w[:k], w[k + 2:]
        out = Element._raw({})
        for u, c in self._rules[(x, y)].terms.items():
            out.add_term(head + u + tail, c)
        return out

    def rewrite_step(self, w: Word, strategy: str = "leftmost") -> Element:
        ds = descents(w)
        if not ds:
            raise NoRedex(f"{render(Element.word(w))} is nondecreasing")
        return self.rewrite_at(w, ds[0] if strategy == "leftmost" else ds[-1])

    def normal_form(self, x: Element, strategy: str = "leftmost",
                    trace: Optional[List[dict]] = None) -> Element:
        """Reduce until every word is nondecreasing.

        The largest non-normal word (degree-lexicographically) is rewritten at
        each step, so no word is processed twice.
        """
        if any(g.is_unit for w in x.terms for g in w):
            raise ValueError("unit markers are not allowed in U(L) elements")
        if trace is None and strategy == "leftmost":
            out = Element._raw({})
            for w, c in x.terms.items():
                for u, d in self._word_nf(w).terms.items():
                    out.add_term(u, d * c)
            return out
        return self._reduce(x, strategy, trace)

    def _reduce(self, x: Element, strategy: str, trace: Optional[List[dict]]) -> Element:
        cur = Element._raw(dict(x.terms))
        steps = 0
        while True:
            pending = [w for w in cur.terms if not is_sorted_word(w)]
            if not pending:
                return cur
            w = max(pending, key=deglex_key)
            c = cur.terms.pop(w)
            img = self.rewrite_step(w, strategy)
            for u, d in img.terms.items():
                cur.add_term(u, d * c)
            steps += 1
            if trace is not None:
                trace.append({"step": steps, "word": render(Element.word(w)),
                              "coeff": str(c), "result": render(img.scale(c)),
                              "current": render(cur)})
            if steps > self.max_steps:
                raise GuardExceeded(f"no normal form after {self.max_steps} steps",
                                    trace if trace is not None else [])

    def _word_nf(self, w: Word) -> Element:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        res = self._reduce(Element.word(w), "leftmost", None)
        self._cache[w] = res
        return res


# -- confluence ----------------------------------------------------------------

@dataclass
class ConfluenceReport:
    mode: str
    n: int
    outcomes: List[dict]
    passed: bool
    strict: int = 0
    repeated: int = 0
    elapsed: float = 0.0

    def to_dict(self, full: bool = False, timings: bool = False) -> dict:
        d = {"check": f"confluence[{self.mode}]", "n": self.n, "passed": self.passed,
             "strict_overlaps": self.strict, "repeated_overlaps": self.repeated,
             "checked": len(self.outcomes)}
        bad = [o for o in self.outcomes if not o["equal"]]
        d["witness"] = bad[0] if bad else None
        if full:
            d["outcomes"] = self.outcomes
        if timings:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def _two_way(rs: RewriteSystem, w: Word) -> Tuple[Element, Element]:
    x = Element.word(w)
    a = rs.rewrite_at(w, 1) if w[0] > w[1] else x
    b = rs.rewrite_at(w, 2) if w[1] > w[2] else x
    return rs.normal_form(a, "leftmost"), rs.normal_form(b, "rightmost")


def overlap_confluence(rs: RewriteSystem) -> ConfluenceReport:
    """Resolve every overlap ``x y z`` with ``x > y > z`` two ways.

    The repeated-generator words ``x y y`` and ``x x y`` (``x > y``) are
    reduced with opposite strategies as well.
    """
    t0 = time.perf_counter()
    gens = sorted(rs.structure.gens)
    strict = [tuple(reversed(t)) for t in combinations(gens, 3)]
    repeated = []
    for y, x in combinations(gens, 2):
        repeated += [(x, y, y), (x, x, y)]
    outcomes = []
    for w in strict + repeated:
        a, b = _two_way(rs, w)
        outcomes.append({"word": render(Element.word(w)), "left": render(a),
                         "right": render(b), "equal": a == b})
    return ConfluenceReport(mode=rs.mode, n=rs.structure.n, outcomes=outcomes,
                            passed=all(o["equal"] for o in outcomes),
                            strict=len(strict), repeated=len(repeated),
                            elapsed=time.perf_counter() - t0)


# -- PBW rank certification ----------------------------------------------------

@dataclass
class RankReport:
    n: int
    max_len: int
    mode: str
    monomial_count: int
    rank: int
    quotient_dim: int
    words: int
    relations: int
    passed: bool
    elapsed: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        d = {"check": f"pbw_independence[{self.mode}]", "n": self.n, "max_len": self.max_len,
             "monomial_count": self.monomial_count, "rank": self.rank,
             "quotient_dim": self.quotient_dim, "words": self.words,
             "relations": self.relations, "passed": self.passed}
        if timings:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def multiset_count(ngens: int, max_len: int) -> int:
    return sum(comb(ngens + ell - 1, ell) for ell in range(max_len + 1))


def all_words(gens: List[Gen], max_len: int) -> List[Word]:
    out: List[Word] = []
    for ell in range(max_len + 1):
        out.extend(product(gens, repeat=ell))
    return out


def ideal_elements(rs: RewriteSystem, max_len: int) -> List[Element]:
    """``u (x y - S(x y) - <x,y> - [x,y]) v`` for all words with ``|u| + 2 + |v| <= max_len``."""
    s = rs.structure
    gens = sorted(s.gens)
    gens_rel = []
    for x in gens:
        for y in gens:
            r = Element.word((x, y)) - s.S(x, y)
            if rs.mode == "enveloping":
                r = r - s.pb(x, y) - s.br(x, y)
            if r:
                gens_rel.append(r)
    out = []
    for total in range(0, max_len - 1):
        for left in range(total + 1):
            for u in product(gens, repeat=left):
                for v in product(gens, repeat=total - left):
                    uu, vv = Element.word(u), Element.word(v)
                    for r in gens_rel:
                        out.append(uu * r * vv)
    return out


def pbw_independence(rs: RewriteSystem, max_len: int) -> RankReport:
    """Certify the sorted words of length <= max_len as a basis at this truncation.

    Two ranks are computed over Q(q): the rank of the normal forms of all
    words (must equal the number of sorted words), and the dimension of the
    truncated tensor algebra modulo the truncated ideal (must equal it too).
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    t0 = time.perf_counter()
    gens = sorted(rs.structure.gens)
    count = multiset_count(len(gens), max_len)
    words = all_words(gens, max_len)
    order = sorted(words, key=deglex_key, reverse=True)

    ech = EchelonForm(order)
    for w in words:
        ech.add(dict(rs.normal_form(Element.word(w)).terms))
    rank = ech.rank
    sorted_only = all(is_sorted_word(k) for k in ech.pivots)

    rel = ideal_elements(rs, max_len)
    ideal = EchelonForm(order)
    for r in rel:
        ideal.add(dict(r.terms))
    quotient_dim = len(words) - ideal.rank

    return RankReport(n=rs.structure.n, max_len=max_len, mode=rs.mode, monomial_count=count,
                      rank=rank, quotient_dim=quotient_dim, words=len(words),
                      relations=len(rel),
                      passed=sorted_only and rank == count and quotient_dim == count,
                      elapsed=time.perf_counter() - t0)


def sorted_monomials(gens: List[Gen], max_len: int) -> List[Word]:
    out: List[Word] = []
    for ell in range(max_len + 1):
        out.extend(sorted_words(gens, ell))
    return out
