"""The filtration U_m of U(L) by eta-degree and the associated graded algebra G.

Once the rewriting system is certified confluent, nondecreasing words are a
basis of U(L), so U_m and G^m = U_m / U_{m-1} are computed in coordinates:
U_m is the span of normal forms of all words of eta-degree <= m, and a class in
G^m is read off modulo the span of U_{m-1}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import List, Optional

from .basis import Element, Word, deglex_key, render, sorted_words, word_eta
from .linalg import EchelonForm
from .pbw import ConfluenceReport, RewriteSystem
from .scalars import QScalar
from .structure import TLieStructure, abelianized


class PreconditionUnverified(RuntimeError):
    """Confluence has not been certified for this structure."""


@dataclass
class FiltrationLevel:
    m: int
    basis: List[Word]


@dataclass
class GradedComponent:
    m: int
    basis: List[Word]


def _eta(s: TLieStructure):
    return lambda g: s.eta[g]


def _words_up_to(s: TLieStructure, m: int, sorted_only: bool) -> List[Word]:
    """Words (or nondecreasing words) of eta-degree <= m."""
    if m < 0:
        return []
    gens = sorted(s.gens)
    min_eta = min(s.eta.values())
    out = []
    for ell in range(m // min_eta + 1):
        it = sorted_words(gens, ell) if sorted_only else product(gens, repeat=ell)
        for w in it:
            if word_eta(w, _eta(s)) <= m:
                out.append(tuple(w))
    return sorted(out, key=deglex_key)


def filtration_basis(s: TLieStructure, m: int) -> FiltrationLevel:
    """Nondecreasing words of eta-degree <= m; empty for m = -1."""
    return FiltrationLevel(m, _words_up_to(s, m, sorted_only=True))


def graded_component(s: TLieStructure, m: int) -> GradedComponent:
    """Nondecreasing words of eta-degree exactly m."""
    return GradedComponent(m, [w for w in _words_up_to(s, m, True)
                               if word_eta(w, _eta(s)) == m])


def _require_confluence(s: TLieStructure, confluence: Optional[ConfluenceReport],
                        assume_confluent: bool):
    if assume_confluent:
        return
    if confluence is None or not confluence.passed or confluence.n != s.n \
            or confluence.mode != "enveloping":
        raise PreconditionUnverified(
            f"confluence of the enveloping rewriting system for n={s.n} is not certified")


def _column_order(s: TLieStructure, m: int) -> List[Word]:
    """Sorted words, highest eta-degree first, so pivots land in the top degree."""
    basis = filtration_basis(s, m).basis
    return sorted(basis, key=lambda w: (word_eta(w, _eta(s)), deglex_key(w)), reverse=True)


def _span(rs: RewriteSystem, words: List[Word], order: List[Word]) -> EchelonForm:
    ech = EchelonForm(order)
    for w in words:
        ech.add(dict(rs.normal_form(Element.word(w)).terms))
    return ech


def omega_check(s: TLieStructure, m: int, confluence: Optional[ConfluenceReport] = None,
                assume_confluent: bool = False, rs: Optional[RewriteSystem] = None) -> dict:
    """Injectivity and surjectivity of omega: S(L)_m -> G^m at one level.

    ``dim G^m`` is computed as ``dim U_m - dim U_{m-1}`` from the normal forms
    of all words, independently of the count of nondecreasing words.
    """
    _require_confluence(s, confluence, assume_confluent)
    rs = rs or RewriteSystem(s)
    eta = _eta(s)
    order = _column_order(s, m)
    all_m = _words_up_to(s, m, sorted_only=False)
    lower = [w for w in all_m if word_eta(w, eta) <= m - 1]

    filtration_ok = True
    for w in all_m:
        nf = rs.normal_form(Element.word(w))
        if any(word_eta(u, eta) > word_eta(w, eta) for u in nf.terms):
            filtration_ok = False
            break

    u_m = _span(rs, all_m, order)
    u_prev = _span(rs, lower, order)
    dim_g = u_m.rank - u_prev.rank

    top = graded_component(s, m).basis
    image_rank = 0
    for z in top:
        if u_prev.add(dict(rs.normal_form(Element.word(z)).terms)):
            image_rank += 1
    injective = image_rank == len(top)
    surjective = image_rank == dim_g
    return {
        "level": m,
        "dim_U_m": u_m.rank,
        "dim_U_m_minus_1": u_m.rank - dim_g,
        "dim_G_m": dim_g,
        "sorted_word_count": len(top),
        "image_rank": image_rank,
        "injective": injective,
        "surjective": surjective,
        "filtration_ok": filtration_ok,
        "passed": injective and surjective and filtration_ok and dim_g == len(top),
    }


def omega_matrix(s: TLieStructure, m: int, rs: Optional[RewriteSystem] = None):
    """Rows: omega of each degree-m sorted word in G^m coordinates (degree-m sorted words)."""
    rs = rs or RewriteSystem(s)
    eta = _eta(s)
    top = graded_component(s, m).basis
    rows = []
    for z in top:
        nf = rs.normal_form(Element.word(z))
        rows.append([nf.coeff(c) if word_eta(c, eta) == m else QScalar() for c in top])
    return top, top, rows


def render_matrix(m: int, rows_words, cols_words, rows) -> str:
    lines = [f"# level {m}: {len(rows_words)} x {len(cols_words)}",
             "# columns: " + " ".join(render(Element.word(w)) for w in cols_words)]
    for w, r in zip(rows_words, rows):
        lines.append(render(Element.word(w)) + " | " + "\t".join(str(v) for v in r))
    return "\n".join(lines) + "\n"


def _top_part(x: Element, eta, m: int) -> Element:
    return Element({w: c for w, c in x.terms.items() if word_eta(w, eta) == m})


def omega_multiplicativity(s: TLieStructure, max_deg: int,
                           rs: Optional[RewriteSystem] = None) -> dict:
    """Compare omega(z) omega(z') in G with omega(z z') for sorted words z, z'.

    The product in G is the top eta-degree part of the U(L) normal form of
    ``z z'``; the product in S(L) is the q-symmetric normal form.
    """
    rs = rs or RewriteSystem(s)
    sym = RewriteSystem(abelianized(s), "symmetric")
    eta = _eta(s)
    basis = [w for w in filtration_basis(s, max_deg).basis if w]
    checked = failures = 0
    witness = None
    for u in basis:
        for v in basis:
            m = word_eta(u, eta) + word_eta(v, eta)
            if m > max_deg:
                continue
            checked += 1
            uv = Element.word(u + v)
            in_g = _top_part(rs.normal_form(uv), eta, m)
            in_s = sym.normal_form(uv)
            if in_g != in_s:
                failures += 1
                if witness is None:
                    witness = {"left": render(Element.word(u)), "right": render(Element.word(v)),
                               "product_in_G": render(in_g), "omega_of_product": render(in_s)}
    return {"check": "omega_multiplicativity", "n": s.n, "max_deg": max_deg,
            "checked": checked, "failures": failures, "witness": witness,
            "passed": failures == 0}


def filtration_product_check(s: TLieStructure, max_level: int,
                             rs: Optional[RewriteSystem] = None) -> dict:
    """U_a U_b lies in U_(a+b): normal forms of products never raise eta-degree."""
    rs = rs or RewriteSystem(s)
    eta = _eta(s)
    words = [w for w in _words_up_to(s, max_level, sorted_only=False) if w]
    checked = failures = 0
    witness = None
    for u in words:
        for v in words:
            m = word_eta(u, eta) + word_eta(v, eta)
            if m > max_level:
                continue
            checked += 1
            nf = rs.normal_form(Element.word(u + v))
            if any(word_eta(w, eta) > m for w in nf.terms):
                failures += 1
                if witness is None:
                    witness = {"left": render(Element.word(u)), "right": render(Element.word(v)),
                               "normal_form": render(nf)}
    return {"check": "filtration_product", "n": s.n, "max_level": max_level,
            "checked": checked, "failures": failures, "witness": witness,
            "passed": failures == 0}


_COEFFS = [QScalar.const(1), QScalar.const(-1), QScalar.const(2), QScalar.const(-3),
           QScalar.qpow(1), QScalar.qpow(-1), QScalar.qpow(2, -1), QScalar({1: 1, -1: -1})]


def random_element(s: TLieStructure, deg: int, rng: random.Random, max_terms: int = 3) -> Element:
    gens = sorted(s.gens)
    while True:
        x = Element()
        for _ in range(rng.randint(1, max_terms)):
            ell = rng.randint(0, deg)
            w = tuple(rng.choice(gens) for _ in range(ell))
            x = x + Element.word(w, rng.choice(_COEFFS))
        if x:
            return x


def zero_divisor_probe(s: TLieStructure, deg: int, trials: int, seed: int = 0,
                       rs: Optional[RewriteSystem] = None) -> dict:
    """Multiply seeded random nonzero elements of U(L) and look for a zero product."""
    if deg < 1 or trials < 1:
        raise ValueError("deg and trials must be >= 1")
    rs = rs or RewriteSystem(s)
    rng = random.Random(seed)
    witness = None
    found = 0
    def draw():
        while True:
            x = rs.normal_form(random_element(s, deg, rng))
            if x:
                return x

    for t in range(trials):
        a, b = draw(), draw()
        if not rs.normal_form(a * b):
            found += 1
            if witness is None:
                witness = {"trial": t, "left": render(a), "right": render(b)}
    return {"check": "zero_divisor_probe", "n": s.n, "deg": deg, "trials": trials,
            "seed": seed, "checked": trials, "failures": found, "zero_products": found,
            "witness": witness, "passed": found == 0}
