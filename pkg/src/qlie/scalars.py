"""Exact scalars: Laurent polynomials in ``q`` and polynomials in ``lam``.

``QScalar`` is an element of Z[q, q^-1]; ``LScalar`` is an element of
Z[q, q^-1][lam] with nonnegative powers of the spectral parameter.  Both are
immutable and hashable, stored in canonical form (no zero coefficients).
"""

from __future__ import annotations

from math import gcd
from typing import Dict, Iterable, Mapping, Tuple, Union


def _clean(items: Iterable[Tuple[int, object]]) -> Dict[int, object]:
    return {k: v for k, v in items if v}


class QScalar:
    """Laurent polynomial with integer coefficients in one variable ``q``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                v = int(v)
                if v:
                    c[int(k)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, int]) -> "QScalar":
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, v: int) -> "QScalar":
        return cls._raw({0: v} if v else {})

    @classmethod
    def qpow(cls, k: int, coeff: int = 1) -> "QScalar":
        return cls._raw({k: coeff} if coeff else {})

    @classmethod
    def lift(cls, x: Union["QScalar", int]) -> "QScalar":
        if isinstance(x, QScalar):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to QScalar")

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self):
        """(exponent, coefficient) pairs, highest exponent first."""
        return sorted(self._c.items(), reverse=True)

    def __bool__(self):
        return bool(self._c)

    def is_unit(self) -> bool:
        """Units of Z[q, q^-1] are exactly +-q^k."""
        if len(self._c) != 1:
            return False
        (v,) = self._c.values()
        return v in (1, -1)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def degree(self) -> int:
        return max(self._c) if self._c else None

    def low_degree(self) -> int:
        return min(self._c) if self._c else None

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QScalar.const(other)
        elif not isinstance(other, QScalar):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return QScalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return QScalar._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QScalar.const(other)
        elif not isinstance(other, QScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QScalar._raw({})
            return QScalar._raw({k: v * other for k, v in self._c.items()})
        if not isinstance(other, QScalar):
            return NotImplemented
        c: Dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return QScalar._raw(_clean(c.items()))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = QScalar.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "QScalar":
        """Inverse of a unit +-q^k; anything else raises ``ZeroDivisionError``."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not invertible in Z[q, q^-1]")
        ((k, v),) = self._c.items()
        return QScalar._raw({-k: v})

    def shift(self, k: int) -> "QScalar":
        return QScalar._raw({e + k: v for e, v in self._c.items()})

    def exquo(self, other: "QScalar") -> "QScalar":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        if not other:
            raise ZeroDivisionError("division by zero QScalar")
        if not self:
            return self
        if other.is_monomial():
            ((k, v),) = other._c.items()
            c = {}
            for e, w in self._c.items():
                quo, rem = divmod(w, v)
                if rem:
                    raise ArithmeticError(f"{self} not divisible by {other}")
                c[e - k] = quo
            return QScalar._raw(c)
        # long division from the top degree down
        rem = dict(self._c)
        dtop = other.degree()
        dlow = other.low_degree()
        lead = other._c[dtop]
        quo: Dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dlow:
                raise ArithmeticError(f"{self} not divisible by {other}")
            t, r = divmod(rem[top], lead)
            if r:
                raise ArithmeticError(f"{self} not divisible by {other}")
            shift = top - dtop
            quo[shift] = t
            for e, v in other._c.items():
                s = rem.get(e + shift, 0) - t * v
                if s:
                    rem[e + shift] = s
                else:
                    rem.pop(e + shift, None)
        return QScalar._raw(quo)

    # -- comparison, hashing, display ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, QScalar):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __call__(self, value):
        """Evaluate at ``q = value`` (any field element supporting ``**``)."""
        return sum((v * value ** k for k, v in self._c.items()), 0 * value)

    def leading_negative(self) -> bool:
        return bool(self._c) and self._c[max(self._c)] < 0

    def __str__(self):
        return render_q(self)

    def __repr__(self):
        return f"QScalar({render_q(self)!r})"


def _mono(k: int) -> str:
    if k == 1:
        return "q"
    return f"q^{k}"


def render_q(x: QScalar) -> str:
    """Render as ``q^2 - q^-2``; zero renders as ``0``."""
    items = x.items()
    if not items:
        return "0"
    parts = []
    for idx, (k, v) in enumerate(items):
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if k == 0:
            body = str(a)
        elif a == 1:
            body = _mono(k)
        else:
            body = f"{a}*{_mono(k)}"
        if idx == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


ZERO = QScalar()
ONE = QScalar.const(1)
Q = QScalar.qpow(1)
Q_INV = QScalar.qpow(-1)
Q_MINUS_QINV = Q - Q_INV


class LScalar:
    """Polynomial in ``lam`` with ``QScalar`` coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, QScalar] = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("negative powers of lam are not allowed")
                v = QScalar.lift(v)
                if v:
                    c[int(k)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def lift(cls, x) -> "LScalar":
        if isinstance(x, LScalar):
            return x
        x = QScalar.lift(x)
        return cls._raw({0: x} if x else {})

    @classmethod
    def lam(cls, k: int = 1, coeff=ONE) -> "LScalar":
        return cls({k: coeff})

    @property
    def coeffs(self) -> Dict[int, QScalar]:
        return dict(self._c)

    def degree(self) -> int:
        return max(self._c) if self._c else None

    def at(self, k: int) -> QScalar:
        return self._c.get(k, ZERO)

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other):
        if isinstance(other, LScalar):
            return other
        if isinstance(other, (QScalar, int)):
            return LScalar.lift(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, ZERO) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LScalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LScalar._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: Dict[int, QScalar] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, ZERO) + v1 * v2
        return LScalar._raw(_clean(c.items()))

    __rmul__ = __mul__

    def specialize(self, value) -> QScalar:
        """Substitute ``lam = value`` for an integer or QScalar value."""
        out = ZERO
        for k, v in self._c.items():
            out = out + v * (QScalar.lift(value) ** k)
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def leading_negative(self) -> bool:
        return bool(self._c) and self._c[max(self._c)].leading_negative()

    def __str__(self):
        return render_l(self)

    def __repr__(self):
        return f"LScalar({render_l(self)!r})"


def render_l(x: LScalar) -> str:
    """Render as ``lam*(q - q^-1) + q``, highest power of lam first."""
    if not x:
        return "0"
    parts = []
    for k in sorted(x._c, reverse=True):
        v = x._c[k]
        if k == 0:
            parts.append(render_q(v))
            continue
        lam = "lam" if k == 1 else f"lam^{k}"
        if v == 1:
            parts.append(lam)
        elif v.is_monomial() and not v.leading_negative():
            parts.append(f"{lam}*{render_q(v)}")
        else:
            parts.append(f"{lam}*({render_q(v)})")
    return " + ".join(parts)


Scalar = Union[QScalar, LScalar]
