"""Generators ``e(i,j)``, their total order and grading, and free-module elements.

Elements of L, its tensor powers, U(L) and S(L) all share one representation:
a finite linear combination of *words* (tuples of generators) with exact
scalar coefficients.  Concatenation of words is the tensor product.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Tuple

from .scalars import LScalar, QScalar, render_q

LT, EQ, GT = -1, 0, 1


class Gen(NamedTuple):
    """Matrix unit ``e_ij`` of the upper triangular part, ``i < j``.

    Comparison follows the weight order: ``e_ab < e_ij`` iff ``a+b < i+j``, or
    the sums tie and ``b < j``.  ``UNIT`` (``Gen(0, 0)``) sorts below every
    generator.
    """

    i: int
    j: int

    @property
    def key(self) -> Tuple[int, int]:
        return (self.i + self.j, self.j)

    def __lt__(self, other):
        return (self.i + self.j, self.j) < (other.i + other.j, other.j)

    def __le__(self, other):
        return (self.i + self.j, self.j) <= (other.i + other.j, other.j)

    def __gt__(self, other):
        return (self.i + self.j, self.j) > (other.i + other.j, other.j)

    def __ge__(self, other):
        return (self.i + self.j, self.j) >= (other.i + other.j, other.j)

    @property
    def is_unit(self) -> bool:
        return self.j == 0

    def __str__(self):
        return "1" if self.j == 0 else f"e({self.i},{self.j})"

    def __repr__(self):
        return "UNIT" if self.j == 0 else f"e({self.i},{self.j})"


UNIT = Gen(0, 0)

Word = Tuple[Gen, ...]


def gen_compare(a: Gen, b: Gen) -> int:
    """Return ``LT``, ``EQ`` or ``GT``."""
    ka, kb = a.key, b.key
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


def make_gen(i: int, j: int, n: int) -> Gen:
    if not (1 <= i < j <= n + 1):
        raise IndexError(f"e({i},{j}) out of range for n={n}: requires 1 <= i < j <= {n + 1}")
    return Gen(i, j)


def generators(n: int) -> List[Gen]:
    """All ``e_ij`` with ``1 <= i < j <= n+1``, in increasing order."""
    return sorted(Gen(i, j) for j in range(2, n + 2) for i in range(1, j))


def eta_default(g: Gen) -> int:
    return g.j - g.i + 1


def word_eta(w: Word, eta: Callable[[Gen], int]) -> int:
    return sum(eta(g) for g in w if not g.is_unit)


def is_sorted_word(w: Word) -> bool:
    return all(not (w[k] > w[k + 1]) for k in range(len(w) - 1))


def deglex_key(w: Word):
    return (len(w), w)


def sorted_words(gens: List[Gen], length: int) -> Iterator[Word]:
    """Nondecreasing words of exactly the given length."""
    return combinations_with_replacement(sorted(gens), length)


class Element:
    """Finite linear combination of words with ``QScalar``/``LScalar`` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, object] = None):
        t = {}
        if terms:
            for w, c in terms.items():
                if isinstance(c, int):
                    c = QScalar.const(c)
                if c:
                    t[tuple(w)] = c
        self.terms = t

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def word(cls, w: Iterable[Gen], coeff=None) -> "Element":
        c = QScalar.const(1) if coeff is None else coeff
        return cls({tuple(w): c})

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls({(): c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self) -> List[Tuple[Word, object]]:
        """Terms in deterministic (lexicographic) word order."""
        return sorted(self.terms.items(), key=lambda t: t[0])

    def words(self) -> List[Word]:
        return sorted(self.terms)

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), QScalar())

    def add_term(self, w: Word, c) -> None:
        """In-place accumulate; for use by builders that own the element."""
        t = self.terms
        s = t[w] + c if w in t else c
        if s:
            t[w] = s
        else:
            t.pop(w, None)

    def __add__(self, other: "Element") -> "Element":
        out = Element._raw(dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __neg__(self):
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        out = Element._raw(dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, -c)
        return out

    def scale(self, c) -> "Element":
        out = Element._raw({})
        if not c:
            return out
        for w, v in self.terms.items():
            p = v * c
            if p:
                out.terms[w] = p
        return out

    def __mul__(self, other):
        """Concatenation product (tensor product of words)."""
        if not isinstance(other, Element):
            return self.scale(other)
        out = Element._raw({})
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.add_term(w1 + w2, c1 * c2)
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, f) -> "Element":
        out = Element._raw({})
        for w, c in self.terms.items():
            out.add_term(w, f(c))
        return out

    def lengths(self) -> set:
        return {len(w) for w in self.terms}

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Element({render(self)!r})"


def _render_word(w: Word) -> str:
    return "*".join(str(g) for g in w) if w else "1"


def _render_coeff(c) -> str:
    if isinstance(c, LScalar):
        if c.degree() == 0:
            c = c.at(0)
        elif len(c.coeffs) == 1 and c.coeffs[c.degree()] == 1:
            return str(c)
        else:
            return f"({c})"
    if c.is_monomial():
        return render_q(c)
    return f"({render_q(c)})"


def render(x: Element) -> str:
    """Render in the element grammar, e.g. ``q*e(1,2)*e(2,3) - q*e(1,3)``."""
    items = x.items()
    if not items:
        return "0"
    parts = []
    for idx, (w, c) in enumerate(items):
        neg = c.leading_negative()
        if neg:
            c = -c
        if c == 1:
            body = _render_word(w)
        elif not w:
            body = _render_coeff(c)
        else:
            body = f"{_render_coeff(c)}*{_render_word(w)}"
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" {'-' if neg else '+'} {body}")
    return "".join(parts)


def extend_bilinear(rule: Callable[[Gen, Gen], Element], position: int, x: Element,
                    unit_ok: bool = False) -> Element:
    """Apply ``rule`` to the factors at ``position``, ``position+1`` (1-based) of every word.

    The remaining factors stay in place and the result is extended linearly.
    ``rule`` returns an element whose words replace the two factors.
    """
    p = position - 1
    out = Element._raw({})
    for w, c in x.terms.items():
        if len(w) < position + 1 or p < 0:
            raise ValueError(f"word {_render_word(w)} too short for position {position}")
        a, b = w[p], w[p + 1]
        if not unit_ok and (a.is_unit or b.is_unit):
            raise ValueError(f"unit marker at position {position} of {_render_word(w)}")
        img = rule(a, b)
        if not img.terms:
            continue
        head, tail = w[:p], w[p + 2:]
        for u, d in img.terms.items():
            out.add_term(head + u + tail, d * c)
    return out


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, n: int, unit_marker: bool):
        self.s = text
        self.k = 0
        self.n = n
        self.unit_marker = unit_marker
        self.depth = 0

    def peek(self) -> str:
        while self.k < len(self.s) and self.s[self.k].isspace():
            self.k += 1
        return self.s[self.k] if self.k < len(self.s) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.k)
        self.k += 1

    def integer(self) -> int:
        self.peek()
        start = self.k
        if self.k < len(self.s) and self.s[self.k] in "+-":
            self.k += 1
        while self.k < len(self.s) and self.s[self.k].isdigit():
            self.k += 1
        tok = self.s[start:self.k]
        if tok in ("", "+", "-"):
            raise ParseError("expected integer", start)
        return int(tok)

    def expr(self) -> Element:
        out = Element()
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.k += 1
        out = self.term().scale(QScalar.const(sign))
        while self.peek() in ("+", "-"):
            op = self.s[self.k]
            self.k += 1
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> Element:
        out = self.factor()
        while self.peek() == "*":
            self.k += 1
            out = out * self.factor()
        return out

    def factor(self) -> Element:
        ch = self.peek()
        if ch == "(":
            self.k += 1
            self.depth += 1
            inner = self.expr()
            self.expect(")")
            self.depth -= 1
            return inner
        if ch == "-":
            self.k += 1
            return -self.factor()
        if ch == "q":
            self.k += 1
            e = 1
            if self.peek() == "^":
                self.k += 1
                e = self.integer()
            return Element.scalar(QScalar.qpow(e))
        if self.s.startswith("lam", self.k):
            self.k += 3
            e = 1
            if self.peek() == "^":
                self.k += 1
                e = self.integer()
            return Element.scalar(LScalar.lam(e))
        if ch == "e":
            start = self.k
            self.k += 1
            self.expect("(")
            i = self.integer()
            self.expect(",")
            j = self.integer()
            self.expect(")")
            if not i < j:
                raise ParseError(f"e({i},{j}) requires i < j", start)
            try:
                g = make_gen(i, j, self.n)
            except IndexError as exc:
                raise ParseError(str(exc), start) from None
            return Element.word((g,))
        if ch.isdigit():
            start = self.k
            v = self.integer()
            if self.unit_marker and self.depth == 0 and self.s[start:self.k] == "1":
                return Element.word((UNIT,))
            return Element.scalar(QScalar.const(v))
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input", self.k)


def parse_element(text: str, n: int, unit_marker: bool = False) -> Element:
    """Parse the element grammar; ``1`` is the unit marker when ``unit_marker``."""
    p = _Parser(text, n, unit_marker)
    out = p.expr()
    if p.peek():
        raise ParseError(f"unexpected {p.peek()!r}", p.k)
    return out
