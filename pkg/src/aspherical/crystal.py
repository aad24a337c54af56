"""Crystal operators on l-multipartitions at irrational kappa.

A z-class groups boxes whose charged contents agree modulo (1/kappa)Z.  Its
addable (+) and removable (-) boxes, sorted by c_b, form the z-signature.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Union

from .errors import DegenerateParameterError, ParseError
from .multipartition import (
    Box,
    MultiPartition,
    addable_boxes,
    c_of_box,
    removable_boxes,
)
from .parameters import HyperplaneParams, SParams, s_to_h

Params = Union[HyperplaneParams, SParams]


class Convention(Enum):
    PRINTED = "printed"  # left to right by increasing c_b
    EXAMPLE = "example"  # left to right by decreasing c_b


@dataclass(frozen=True, order=True)
class ZClass:
    """Components of one block class, and the content on its smallest component."""

    components: tuple[int, ...]
    content: int

    def __str__(self):
        return ",".join(map(str, self.components)) + ":" + str(self.content)

    def to_json(self) -> dict:
        return {"components": list(self.components), "content": self.content}


def parse_zclass(text: str) -> ZClass:
    try:
        comps, content = text.split(":")
        return ZClass(tuple(sorted(int(c) for c in comps.split(","))), int(content))
    except ValueError as exc:
        raise ParseError(f"z-class must look like '0,1:0', got {text!r}") from exc


class _Regime:
    """Precomputed block data for one parameter point."""

    def __init__(self, params: Params):
        s = params.to_sparams() if isinstance(params, HyperplaneParams) else params
        kappa = s.kappa
        if kappa.kappa is not None or kappa.a != 0 or kappa.c != 0 or kappa.b == 0:
            raise DegenerateParameterError("crystal operators need kappa = beta*k with k transcendental")
        self.s = s
        self.h = s_to_h(s)
        beta = kappa.b
        ell = s.ell

        def shift(a: int, b: int) -> int | None:
            diff = s.s[a] - s.s[b]
            if diff.b != 0 or diff.a.denominator != 1 or (beta * diff.c).denominator != 1:
                return None
            return int(diff.a)

        classes: dict[int, tuple[int, ...]] = {}
        self.offset: dict[int, int] = {}
        for a in range(ell):
            base = next(b for b in range(ell) if shift(a, b) is not None)
            classes[a] = tuple(b for b in range(ell) if shift(a, b) is not None)
            self.offset[a] = shift(a, base)
        self.classes = classes
        self._c: dict[Box, object] = {}

    def zclass(self, b: Box) -> ZClass:
        return ZClass(self.classes[b.i], b.content + self.offset[b.i])

    def c(self, b: Box):
        key = Box(b.i, b.content, 0)
        val = self._c.get(key)
        if val is None:
            val = c_of_box(b, self.h)
            self._c[key] = val
        return val

    def cmp(self, b1: Box, b2: Box) -> int:
        diff = self.c(b1) - self.c(b2)
        if not diff.is_integer():
            raise DegenerateParameterError(f"boxes {b1}, {b2} in one class have non-integral c-difference")
        d = diff.to_int()
        if d == 0:
            raise DegenerateParameterError(f"boxes {b1}, {b2} tie in the c-order")
        return d


@lru_cache(maxsize=256)
def _regime(params: Params) -> _Regime:
    return _Regime(params)


def zclass_of_box(b: Box, params: Params) -> ZClass:
    return _regime(params).zclass(b)


def z_classes(nu: MultiPartition, params: Params) -> list[ZClass]:
    reg = _regime(params)
    return sorted({reg.zclass(b) for b in addable_boxes(nu) + removable_boxes(nu)})


@dataclass(frozen=True)
class ZSignature:
    entries: tuple[tuple[str, Box], ...]

    @property
    def word(self) -> str:
        return "".join(sign for sign, _ in self.entries)

    def __str__(self):
        return self.word

    def to_json(self) -> list:
        return [{"sign": sign, "box": b.to_json()} for sign, b in self.entries]


def signature(nu: MultiPartition, z: ZClass, params: Params,
              convention: Convention = Convention.PRINTED) -> ZSignature:
    reg = _regime(params)
    items = [("+", b) for b in addable_boxes(nu) if reg.zclass(b) == z]
    items += [("-", b) for b in removable_boxes(nu) if reg.zclass(b) == z]
    key = cmp_to_key(lambda p, q: reg.cmp(p[1], q[1]))
    items.sort(key=key, reverse=convention is Convention.EXAMPLE)
    return ZSignature(tuple(items))


def reduce_signature(sig: ZSignature, strategy: str = "stack") -> ZSignature:
    """Erase "-+" pairs that become adjacent until no "-" precedes a "+"."""
    if strategy == "stack":
        kept: list[tuple[str, Box]] = []
        for entry in sig.entries:
            if entry[0] == "+" and kept and kept[-1][0] == "-":
                kept.pop()
            else:
                kept.append(entry)
        return ZSignature(tuple(kept))
    if strategy == "scan":
        entries = list(sig.entries)
        changed = True
        while changed:
            changed = False
            # erase the rightmost adjacent pair first, to differ from the stack
            for k in range(len(entries) - 2, -1, -1):
                if entries[k][0] == "-" and entries[k + 1][0] == "+":
                    del entries[k:k + 2]
                    changed = True
                    break
        return ZSignature(tuple(entries))
    raise ValueError(f"unknown strategy {strategy!r}")


def e_tilde(nu: MultiPartition, z: ZClass, params: Params,
            convention: Convention = Convention.PRINTED) -> MultiPartition | None:
    red = reduce_signature(signature(nu, z, params, convention))
    for sign, b in red.entries:
        if sign == "-":
            return nu.remove_box(b)
    return None


def f_tilde(nu: MultiPartition, z: ZClass, params: Params,
            convention: Convention = Convention.PRINTED) -> MultiPartition | None:
    red = reduce_signature(signature(nu, z, params, convention))
    for sign, b in reversed(red.entries):
        if sign == "+":
            return nu.add_box(b)
    return None


def is_highest_weight(nu: MultiPartition, params: Params,
                      convention: Convention = Convention.PRINTED) -> bool:
    reg = _regime(params)
    for b in removable_boxes(nu):
        if e_tilde(nu, reg.zclass(b), params, convention) is not None:
            return False
    return True


@lru_cache(maxsize=1 << 18)
def depth_by_descent(nu: MultiPartition, params: Params,
                     convention: Convention = Convention.PRINTED) -> int:
    """Apply the first nonzero e-tilde (in z-class order) until highest weight."""
    steps = 0
    while True:
        for z in z_classes(nu, params):
            nxt = e_tilde(nu, z, params, convention)
            if nxt is not None:
                nu = nxt
                steps += 1
                break
        else:
            return steps


@lru_cache(maxsize=1 << 18)
def descent_lengths(nu: MultiPartition, params: Params,
                    convention: Convention = Convention.PRINTED) -> frozenset[int]:
    """Lengths of every e-tilde path from nu down to a highest-weight element."""
    children = {e_tilde(nu, z, params, convention) for z in z_classes(nu, params)}
    children.discard(None)
    if not children:
        return frozenset({0})
    return frozenset(k + 1 for child in children for k in descent_lengths(child, params, convention))


def depth_exhaustive(nu: MultiPartition, params: Params,
                     convention: Convention = Convention.PRINTED) -> int:
    return max(descent_lengths(nu, params, convention))


# Fock space

class FockVector:
    """Finite linear combination of multipartitions with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[MultiPartition, Fraction] = {}
        for nu, coeff in items:
            acc[nu] = acc.get(nu, Fraction(0)) + Fraction(coeff)
        self.terms = {nu: c for nu, c in acc.items() if c != 0}

    @classmethod
    def basis(cls, nu: MultiPartition) -> "FockVector":
        return cls({nu: 1})

    def __add__(self, other: "FockVector") -> "FockVector":
        return FockVector(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, c) -> "FockVector":
        return FockVector({nu: c * v for nu, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}|{nu}>" for nu, c in sorted(self.terms.items()))


def fock_f(v: FockVector, z: ZClass, params: Params) -> FockVector:
    reg = _regime(params)
    out = []
    for nu, c in v.terms.items():
        out += [(nu.add_box(b), c) for b in addable_boxes(nu) if reg.zclass(b) == z]
    return FockVector(out)


def fock_e(v: FockVector, z: ZClass, params: Params) -> FockVector:
    reg = _regime(params)
    out = []
    for nu, c in v.terms.items():
        out += [(nu.remove_box(b), c) for b in removable_boxes(nu) if reg.zclass(b) == z]
    return FockVector(out)


__all__ = [
    "Convention", "ZClass", "ZSignature", "FockVector", "parse_zclass", "zclass_of_box",
    "z_classes", "signature", "reduce_signature", "e_tilde", "f_tilde", "is_highest_weight",
    "depth_by_descent", "descent_lengths", "depth_exhaustive", "fock_f", "fock_e",
]
