"""Exact elements a + b*k + c/k of Q(k), restricted to the span {1, k, 1/k}.

``k`` is either a transcendental symbol or a fixed nonzero rational.  In the
rational mode every value collapses to a single fraction.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import ParameterError, ParseError, SpanError

Number = Union[int, Fraction]

TRANSCENDENTAL = None


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class ExactScalar:
    __slots__ = ("a", "b", "c", "kappa")

    def __init__(self, a: Number = 0, b: Number = 0, c: Number = 0, kappa: Number | None = TRANSCENDENTAL):
        a, b, c = _frac(a), _frac(b), _frac(c)
        if kappa is not None:
            kappa = _frac(kappa)
            if kappa == 0:
                raise ParameterError("kappa must be nonzero")
            a, b, c = a + b * kappa + c / kappa, Fraction(0), Fraction(0)
        self.a, self.b, self.c, self.kappa = a, b, c, kappa

    # constructors
    @classmethod
    def const(cls, x: Number) -> "ExactScalar":
        return cls(x)

    @classmethod
    def symbol(cls) -> "ExactScalar":
        return cls(0, 1, 0)

    def evaluate(self, r: Number) -> "ExactScalar":
        """Specialize k to the rational r."""
        if self.kappa is not None:
            raise ParameterError("scalar already lives in a rational kappa mode")
        return ExactScalar(self.a, self.b, self.c, kappa=r)

    # predicates
    @property
    def is_constant(self) -> bool:
        return self.b == 0 and self.c == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def is_integer(self) -> bool:
        return self.is_constant and self.a.denominator == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a rational number")
        return self.a

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    # arithmetic
    def _coerce(self, other) -> "ExactScalar | None":
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other, kappa=self.kappa)
        return None

    def _mode(self, other: "ExactScalar"):
        if self.kappa == other.kappa:
            return self.kappa
        # a pure constant fits either mode
        if self.kappa is None and self.is_constant:
            return other.kappa
        if other.kappa is None and other.is_constant:
            return self.kappa
        raise ParameterError("cannot mix scalars from different kappa modes")

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.a + o.a, self.b + o.b, self.c + o.c, kappa=self._mode(o))

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, -self.c, kappa=self.kappa)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        mode = self._mode(o)
        if self.b * o.b != 0 or self.c * o.c != 0:
            raise SpanError(f"({self})*({o}) leaves span{{1, k, 1/k}}")
        a = self.a * o.a + self.b * o.c + self.c * o.b
        b = self.a * o.b + self.b * o.a
        c = self.a * o.c + self.c * o.a
        return ExactScalar(a, b, c, kappa=mode)

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_constant:
            return ExactScalar(1 / self.a, kappa=self.kappa)
        if self.a == 0 and self.c == 0:
            return ExactScalar(0, 0, 1 / self.b)
        if self.a == 0 and self.b == 0:
            return ExactScalar(0, 1 / self.c, 0)
        raise SpanError(f"1/({self}) leaves span{{1, k, 1/k}}")

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # comparison
    def _key(self):
        return (self.a, self.b, self.c)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, ExactScalar) else other
        if o is None:
            return NotImplemented
        try:
            self._mode(o)
        except ParameterError:
            return False
        return self._key() == o._key()

    def __hash__(self):
        if self.is_constant:
            return hash(self.a)
        return hash(self._key())

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        if self.is_constant:
            return fmt_fraction(self.a)
        parts = []
        for coeff, unit in ((self.a, ""), (self.b, "k"), (self.c, "/k")):
            if coeff == 0:
                continue
            if unit == "k":
                body = "k" if abs(coeff) == 1 else f"{fmt_fraction(abs(coeff))}k"
            elif unit == "/k":
                body = f"{fmt_fraction(abs(coeff))}/k" if abs(coeff).denominator == 1 else f"({fmt_fraction(abs(coeff))})/k"
            else:
                body = fmt_fraction(abs(coeff))
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # serialization
    def to_json(self) -> dict:
        return {
            "a": fmt_fraction(self.a),
            "b": fmt_fraction(self.b),
            "c": fmt_fraction(self.c),
            "kappa": "transcendental" if self.kappa is None else fmt_fraction(self.kappa),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactScalar":
        kappa = obj.get("kappa", "transcendental")
        kappa = None if kappa == "transcendental" else Fraction(kappa)
        return cls(Fraction(obj.get("a", "0")), Fraction(obj.get("b", "0")), Fraction(obj.get("c", "0")), kappa=kappa)


KAPPA = ExactScalar.symbol()

_TERM = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_scalar(text: str) -> ExactScalar:
    """Parse forms like ``-1/2``, ``k``, ``3/2 - 2k``, ``1/2 + 3/k``."""
    src = text.replace(" ", "").replace("κ", "k")
    if not src:
        raise ParseError("empty scalar")
    # a leading sign is part of the first term; protect signs inside "p/q"
    total = ExactScalar(0)
    pos = 0
    for m in _TERM.finditer(src):
        if m.start() != pos:
            raise ParseError(f"cannot parse scalar {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        try:
            if body.endswith("/k"):
                coeff = Fraction(body[:-2].strip("()") or "1")
                total = total + ExactScalar(0, 0, sign * coeff)
            elif body.endswith("k"):
                head = body[:-1].rstrip("*").strip("()")
                total = total + ExactScalar(0, sign * Fraction(head or "1"), 0)
            else:
                total = total + ExactScalar(sign * Fraction(body))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse scalar {text!r}") from exc
    if pos != len(src):
        raise ParseError(f"cannot parse scalar {text!r}")
    return total


def as_scalar(x) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return ExactScalar(_frac(x))
