"""Multipartitions, boxes, charged contents, c-functions and the two orders.

Boxes are 1-based with x the column and y the row (English convention), so
the content of a box is x - y.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

import networkx as nx

from .errors import ModelViolationError, NotAddableError, ParseError, SpanError
from .parameters import HParams, SParams, h_to_s
from .scalar import ExactScalar

Partition = tuple[int, ...]


class Box(NamedTuple):
    i: int
    x: int
    y: int

    @property
    def content(self) -> int:
        return self.x - self.y

    def to_json(self) -> dict:
        return {"i": self.i, "x": self.x, "y": self.y}


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    return tuple(sorted(_partitions(n, n)))


@dataclass(frozen=True, order=True)
class MultiPartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(tuple(int(v) for v in c) for c in self.components)
        for c in comps:
            if any(v <= 0 for v in c) or list(c) != sorted(c, reverse=True):
                raise ParseError(f"not a partition: {c}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def empty(cls, ell: int) -> "MultiPartition":
        return cls(((),) * ell)

    @property
    def ell(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def __len__(self):
        return self.size

    def boxes(self) -> list[Box]:
        return [Box(i, x, y) for i, c in enumerate(self.components)
                for y, row in enumerate(c, 1) for x in range(1, row + 1)]

    def contains(self, b: Box) -> bool:
        c = self.components[b.i]
        return b.y <= len(c) and b.x <= c[b.y - 1]

    def add_box(self, b: Box) -> "MultiPartition":
        if b not in addable_boxes(self):
            raise NotAddableError(f"{b} is not addable to {self}")
        comp = list(self.components[b.i])
        if b.y == len(comp) + 1:
            comp.append(1)
        else:
            comp[b.y - 1] += 1
        return self._replace(b.i, tuple(comp))

    def remove_box(self, b: Box) -> "MultiPartition":
        if b not in removable_boxes(self):
            raise NotAddableError(f"{b} is not removable from {self}")
        comp = list(self.components[b.i])
        comp[b.y - 1] -= 1
        if comp[-1] == 0:
            comp.pop()
        return self._replace(b.i, tuple(comp))

    def _replace(self, i: int, comp: Partition) -> "MultiPartition":
        comps = list(self.components)
        comps[i] = comp
        return MultiPartition(tuple(comps))

    def __str__(self):
        return "(" + ",".join("(" + ",".join(map(str, c)) + ")" for c in self.components) + ")"

    def to_json(self) -> dict:
        return {"components": [list(c) for c in self.components]}

    @classmethod
    def from_json(cls, obj: dict) -> "MultiPartition":
        return cls(tuple(tuple(c) for c in obj["components"]))


def parse_multipartition(text: str) -> MultiPartition:
    """Parse the text form ``((4,2),(1))``; ``()`` or ``∅`` is the empty partition."""
    src = text.replace(" ", "").replace("∅", "()")
    if len(src) < 2 or src[0] != "(" or src[-1] != ")":
        raise ParseError(f"cannot parse multipartition {text!r}")
    body, comps, depth, cur = src[1:-1], [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
            if depth > 1:
                raise ParseError(f"cannot parse multipartition {text!r}")
            cur = ""
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"cannot parse multipartition {text!r}")
            try:
                comps.append(tuple(int(v) for v in cur.split(",") if v))
            except ValueError as exc:
                raise ParseError(f"cannot parse multipartition {text!r}") from exc
        elif depth == 1:
            cur += ch
        elif ch != ",":
            raise ParseError(f"cannot parse multipartition {text!r}")
    if depth != 0 or not comps:
        raise ParseError(f"cannot parse multipartition {text!r}")
    return MultiPartition(tuple(comps))


@lru_cache(maxsize=None)
def _multipartitions(ell: int, n: int) -> tuple[MultiPartition, ...]:
    def rec(k: int, left: int):
        if k == 1:
            for p in partitions(left):
                yield (p,)
            return
        for first in range(left + 1):
            for p in partitions(first):
                for rest in rec(k - 1, left - first):
                    yield (p,) + rest
    return tuple(sorted(MultiPartition(c) for c in rec(ell, n)))


def enumerate_multipartitions(ell: int, n: int) -> list[MultiPartition]:
    if ell < 1 or n < 0:
        raise ValueError("need ell >= 1 and n >= 0")
    return list(_multipartitions(ell, n))


@lru_cache(maxsize=1 << 16)
def _addable(nu: MultiPartition) -> tuple[Box, ...]:
    out = []
    for i, c in enumerate(nu.components):
        rows = list(c) + [0]
        for y, length in enumerate(rows, 1):
            if y == 1 or rows[y - 2] > length:
                out.append(Box(i, length + 1, y))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _removable(nu: MultiPartition) -> tuple[Box, ...]:
    out = []
    for i, c in enumerate(nu.components):
        for y, length in enumerate(c, 1):
            if y == len(c) or c[y] < length:
                out.append(Box(i, length, y))
    return tuple(out)


def addable_boxes(nu: MultiPartition) -> list[Box]:
    return list(_addable(nu))


def removable_boxes(nu: MultiPartition) -> list[Box]:
    return list(_removable(nu))


def charged_content(b: Box, s: SParams) -> ExactScalar:
    return s.s[b.i] + b.content


def c_of_box(b: Box, h: HParams) -> ExactScalar:
    return h.kappa * (h.ell * b.content) + h.ell * h.h[b.i]


def c_of_box_s(b: Box, s: SParams) -> ExactScalar:
    """Same value through kappa*l*cont^s(b) - i."""
    return s.kappa * s.ell * charged_content(b, s) - b.i


def c_function(nu: MultiPartition, h: HParams) -> ExactScalar:
    return sum((c_of_box(b, h) for b in nu.boxes()), ExactScalar(0))


def _kappa_multiple_is_integer(kappa: ExactScalar, delta: ExactScalar) -> bool:
    try:
        return (kappa * delta).is_integer()
    except SpanError:
        # the product has a k^2 or k^-2 term, which is never an integer
        return False


def boxes_equivalent(b: Box, b2: Box, s: SParams) -> bool:
    return _kappa_multiple_is_integer(s.kappa, charged_content(b, s) - charged_content(b2, s))


class Order(Enum):
    """Outcome of comparing b with b' in the order b <= b' iff c_b - c_b' >= 0."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def c_difference(b: Box, b2: Box, h: HParams) -> int:
    diff = c_of_box(b, h) - c_of_box(b2, h)
    if not diff.is_integer():
        raise ModelViolationError(f"equivalent boxes {b}, {b2} have non-integral c-difference {diff}")
    return diff.to_int()


def box_compare(b: Box, b2: Box, h: HParams, s: SParams | None = None) -> Order:
    s = s if s is not None else h_to_s(h)
    if not boxes_equivalent(b, b2, s):
        return Order.INCOMPARABLE
    d = c_difference(b, b2, h)
    if d > 0:
        return Order.LESS
    if d < 0:
        return Order.GREATER
    return Order.EQUAL


def preceq_multipartition(lam: MultiPartition, lam2: MultiPartition, h: HParams) -> bool:
    """Perfect matching of boxes with b <= b' in the box order."""
    if lam.size != lam2.size:
        return False
    if lam == lam2:
        return True
    s = h_to_s(h)
    left, right = lam.boxes(), lam2.boxes()
    g = nx.Graph()
    top = [("L", k) for k in range(len(left))]
    g.add_nodes_from(top)
    g.add_nodes_from(("R", k) for k in range(len(right)))
    for a, b in enumerate(left):
        for c, b2 in enumerate(right):
            if box_compare(b, b2, h, s) in (Order.LESS, Order.EQUAL):
                g.add_edge(("L", a), ("R", c))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=top)
    return sum(1 for node in top if node in matching) == len(left)


def leq_c(lam: MultiPartition, lam2: MultiPartition, h: HParams) -> bool:
    if lam == lam2:
        return True
    diff = c_function(lam, h) - c_function(lam2, h)
    return diff.is_integer() and diff.to_int() > 0


def format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(map(str, p)) + ")"


__all__ = [
    "Box", "MultiPartition", "Partition", "Order", "partitions", "parse_multipartition",
    "enumerate_multipartitions", "addable_boxes", "removable_boxes", "charged_content",
    "c_of_box", "c_of_box_s", "c_function", "boxes_equivalent", "box_compare", "c_difference",
    "preceq_multipartition", "leq_c",
]
