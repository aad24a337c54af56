"""Closed-form depths and supports on a Weil-generic aspherical hyperplane.

For t >= 0 the rectangle lives in component j and the addable boxes of
component i are scanned.  For t < 0 the two labels are exchanged, which also
flips the sign of m: the relation reads s_j - s_i = -m - t/kappa.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAddableError
from .multipartition import Box, MultiPartition, addable_boxes, enumerate_multipartitions
from .parameters import HyperplaneParams, rectangle_bound


@dataclass(frozen=True)
class SupportStratum:
    p: int

    @property
    def dimension(self) -> int:
        return self.p

    @property
    def description(self) -> str:
        return f"closure of X(W_{{{self.p},0}})"


def _roles(hp: HyperplaneParams) -> tuple[int, int, int]:
    """(scanned component, rectangle component, effective m)."""
    if hp.t >= 0:
        return hp.i, hp.j, hp.m
    return hp.j, hp.i, -hp.m


def _rectangle(r: int, m: int) -> tuple[int, ...]:
    if m >= 0:
        return (r + m,) * r
    return (r,) * (r - m)


def singular_family(hp: HyperplaneParams, n: int) -> list[MultiPartition]:
    if n == 0:
        return [MultiPartition.empty(hp.ell)]
    _, host, m = _roles(hp)
    out = []
    r = 1
    while r * (r + abs(m)) <= n:
        if r * (r + abs(m)) == n:
            comps = [()] * hp.ell
            comps[host] = _rectangle(r, m)
            out.append(MultiPartition(tuple(comps)))
        r += 1
    return out


def r_of_addable_box(nu: MultiPartition, b: Box, hp: HyperplaneParams) -> int:
    scanned, host, m = _roles(hp)
    if b.i != scanned or b not in addable_boxes(nu):
        raise NotAddableError(f"{b} is not an addable box of component {scanned}")
    target = b.content + m
    comp = nu.components[host]
    # the diagonal x - y = target is a chain; take its last (lowest) box
    last = None
    for y, row in enumerate(comp, 1):
        x = y + target
        if 1 <= x <= row:
            last = Box(host, x, y)
    if last is None:
        return 0
    # the rectangle has r rows when m >= 0 and r columns when m < 0
    gap = last.y - b.y if m >= 0 else last.x - b.x
    return max(gap + 1, 0)


def rectangle_index(nu: MultiPartition, hp: HyperplaneParams) -> int:
    scanned, _, _ = _roles(hp)
    return max((r_of_addable_box(nu, b, hp) for b in addable_boxes(nu) if b.i == scanned), default=0)


def closed_form_depth(nu: MultiPartition, hp: HyperplaneParams) -> int:
    r = rectangle_index(nu, hp)
    return nu.size - r * (r + abs(hp.m))


def support_stratum(nu: MultiPartition, hp: HyperplaneParams) -> SupportStratum:
    return SupportStratum(closed_form_depth(nu, hp))


def possible_support_dims(hp: HyperplaneParams, n: int) -> set[int]:
    q = rectangle_bound(n, hp.m)
    return {n - r * (r + abs(hp.m)) for r in range(q + 1)}


def support_table(hp: HyperplaneParams, n: int) -> list[dict]:
    rows = []
    for nu in enumerate_multipartitions(hp.ell, n):
        depth = closed_form_depth(nu, hp)
        rows.append({"nu": str(nu), "depth": depth, "support_dim": depth,
                     "rectangle": rectangle_index(nu, hp), "singular": depth == 0})
    return rows


__all__ = [
    "SupportStratum", "singular_family", "r_of_addable_box", "rectangle_index",
    "closed_form_depth", "support_stratum", "possible_support_dims", "support_table",
]
