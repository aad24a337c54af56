"""Parameter systems for the cyclotomic Cherednik algebra of G(l,1,n).

Three coordinate systems are used: (c0, d_j), (kappa, h_j) and (kappa, s_j),
related by kappa = -c0, d_j = -l h_j and h_j = kappa s_j - j/l.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import ParameterError, SpanError
from .scalar import KAPPA, ExactScalar, as_scalar, fmt_fraction

# Offsets 1/p for otherwise unconstrained charges.  Sums of at most p-1 boxes
# of distinct offsets never become integral, which is all genericity needs.
_GENERIC_PRIMES = (10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093)


def _scalars(xs) -> tuple[ExactScalar, ...]:
    return tuple(as_scalar(x) for x in xs)


def _check_ell(ell: int, values: Sequence) -> None:
    if ell < 2:
        raise ParameterError("ell must be at least 2")
    if len(values) != ell:
        raise ParameterError(f"expected {ell} entries, got {len(values)}")


@dataclass(frozen=True)
class CParams:
    ell: int
    c0: ExactScalar
    d: tuple[ExactScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "c0", as_scalar(self.c0))
        object.__setattr__(self, "d", _scalars(self.d))
        _check_ell(self.ell, self.d)

    def to_json(self) -> dict:
        return {"ell": self.ell, "c0": self.c0.to_json(), "d": [x.to_json() for x in self.d]}


@dataclass(frozen=True)
class HParams:
    ell: int
    kappa: ExactScalar
    h: tuple[ExactScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", as_scalar(self.kappa))
        object.__setattr__(self, "h", _scalars(self.h))
        _check_ell(self.ell, self.h)
        if self.kappa.is_zero():
            raise ParameterError("kappa must be nonzero")

    def to_json(self) -> dict:
        return {"ell": self.ell, "kappa": self.kappa.to_json(), "h": [x.to_json() for x in self.h]}


@dataclass(frozen=True)
class SParams:
    ell: int
    kappa: ExactScalar
    s: tuple[ExactScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", as_scalar(self.kappa))
        object.__setattr__(self, "s", _scalars(self.s))
        _check_ell(self.ell, self.s)
        if self.kappa.is_zero():
            raise ParameterError("kappa must be nonzero")

    def to_json(self) -> dict:
        return {"ell": self.ell, "kappa": self.kappa.to_json(), "s": [x.to_json() for x in self.s]}


@dataclass(frozen=True, order=True)
class HyperplaneParams:
    """The regime s_i - s_j = m + t/kappa with kappa transcendental."""

    ell: int
    i: int
    j: int
    m: int
    t: int

    def __post_init__(self):
        if self.ell < 2:
            raise ParameterError("ell must be at least 2")
        if not 0 <= self.i < self.j <= self.ell - 1:
            raise ParameterError(f"need 0 <= i < j <= ell-1, got i={self.i}, j={self.j}")

    @property
    def k(self) -> int:
        """Constant of the c-form d_i - d_j - l m c0 = k."""
        return self.i - self.j - self.ell * self.t

    def to_sparams(self) -> SParams:
        """Symbolic generic point: kappa is the symbol, free charges get offsets 1/p."""
        if self.ell > len(_GENERIC_PRIMES):
            raise ParameterError("ell too large for the generic surrogate")
        s = [ExactScalar(Fraction(1, _GENERIC_PRIMES[a])) for a in range(self.ell)]
        s[self.j] = s[self.i] - self.m - self.t * KAPPA.inverse()
        return SParams(self.ell, KAPPA, tuple(s))

    def instantiate(self, kappa: Fraction, s: Sequence[Fraction]) -> SParams:
        """Rational point on the hyperplane; s[j] is overwritten by the relation."""
        kappa = Fraction(kappa)
        vals = [Fraction(x) for x in s]
        vals[self.j] = vals[self.i] - self.m - Fraction(self.t) / kappa
        return SParams(self.ell, ExactScalar(kappa), tuple(ExactScalar(v) for v in vals))

    def __str__(self):
        return f"{self.i},{self.j},{self.m},{self.t}"

    def to_json(self) -> dict:
        return {"ell": self.ell, "i": self.i, "j": self.j, "m": self.m, "t": self.t}


# conversions

def c_to_h(p: CParams) -> HParams:
    if p.c0.is_zero():
        raise ParameterError("c0 = 0 gives kappa = 0")
    return HParams(p.ell, -p.c0, tuple(-x / p.ell for x in p.d))


def h_to_c(p: HParams) -> CParams:
    return CParams(p.ell, -p.kappa, tuple(-p.ell * x for x in p.h))


def h_to_s(p: HParams) -> SParams:
    return SParams(p.ell, p.kappa, tuple((x + Fraction(j, p.ell)) / p.kappa for j, x in enumerate(p.h)))


def s_to_h(p: SParams) -> HParams:
    return HParams(p.ell, p.kappa, tuple(p.kappa * x - Fraction(j, p.ell) for j, x in enumerate(p.s)))


def c_to_s(p: CParams) -> SParams:
    return h_to_s(c_to_h(p))


def s_to_c(p: SParams) -> CParams:
    return h_to_c(s_to_h(p))


# parameter maps

def lambda_classical(p: CParams) -> tuple[ExactScalar, ...]:
    ell, d = p.ell, p.d
    first = (ell * p.c0 - d[0] + d[ell - 1]) / ell
    return (first,) + tuple((d[k - 1] - d[k]) / ell for k in range(1, ell))


def lambda_quantum(p: CParams) -> tuple[ExactScalar, ...]:
    ell, d = p.ell, p.d
    first = (1 - ell * (p.c0 + 1) + d[0] - d[ell - 1]) / ell
    out = (first,) + tuple((1 - d[k - 1] + d[k]) / ell for k in range(1, ell))
    # telescoping: the ones contribute l - l(c0+1), the d's cancel
    assert sum(out, ExactScalar(0)) == -p.c0
    return out


# aspherical locus

def floor_shifted_sqrt(n: int, m: int) -> int:
    """floor(sqrt(n + m^2/4) - m/2), computed exactly."""
    return (math.isqrt(4 * n + m * m) - m) // 2


def rectangle_bound(n: int, m: int) -> int:
    """q = floor(sqrt(n + m^2/4) - |m|/2): the largest r with r(r+|m|) <= n."""
    return floor_shifted_sqrt(n, abs(m))


class Witness(NamedTuple):
    kind: str  # "a" or "b"
    j: int | None
    m: int
    k: int
    khat: int | None = None


def _b_triples(ell: int, n: int) -> Iterator[tuple[int, int, int]]:
    for j in range(1, ell):
        for m in range(-(n - 1), n):
            top = j + (floor_shifted_sqrt(n, m) - 1) * ell
            for k in range(1, top + 1):
                if k % ell:
                    yield j, m, k


def _is_fraction_equal(x: ExactScalar, value: Fraction) -> bool:
    return x.is_constant and x.a == value


def aspherical_witnesses_c(p: CParams, n: int) -> list[Witness]:
    out = []
    for m in range(2, n + 1):
        for k in range(1, m):
            if _is_fraction_equal(p.c0, Fraction(-k, m)):
                out.append(Witness("a", None, m, k))
    ell, d = p.ell, p.d
    for j, m, k in _b_triples(ell, n):
        if d[j] - d[(j - k) % ell] + ell * m * p.c0 == k:
            out.append(Witness("b", j, m, k))
    return out


def is_aspherical_c(p: CParams, n: int) -> tuple[bool, Witness | None]:
    ws = aspherical_witnesses_c(p, n)
    return (bool(ws), ws[0] if ws else None)


def aspherical_witnesses_s(p: SParams, n: int) -> list[Witness]:
    out = []
    for m in range(2, n + 1):
        for k in range(1, m):
            if _is_fraction_equal(p.kappa, Fraction(k, m)):
                out.append(Witness("a", None, m, k))
    ell, s = p.ell, p.s
    for j, m, k in _b_triples(ell, n):
        r = (j - k) % ell
        khat = j - r
        try:
            rhs = p.kappa * ell * (s[r] - s[j] - m)
        except SpanError:
            continue  # a k^2 or k^-2 term survives, so no integer equality
        if rhs == k - khat:
            out.append(Witness("b", j, m, k, khat))
    return out


def is_aspherical_s(p: SParams, n: int) -> tuple[bool, Witness | None]:
    ws = aspherical_witnesses_s(p, n)
    return (bool(ws), ws[0] if ws else None)


def hyperplane_from_triple(ell: int, j: int, m: int, k: int) -> HyperplaneParams:
    """Normal form of the relation k = d_j - d_{j-k} + l m c0."""
    r = (j - k) % ell
    # s_r - s_j = m + t/kappa
    t, num = divmod(k - (j - r), ell)
    assert num == 0
    if r < j:
        return HyperplaneParams(ell, r, j, m, t)
    return HyperplaneParams(ell, j, r, -m, -t)


def enumerate_aspherical_hyperplanes(ell: int, n: int) -> list[HyperplaneParams]:
    if ell < 2 or n < 1:
        raise ParameterError("need ell >= 2 and n >= 1")
    return sorted({hyperplane_from_triple(ell, j, m, k) for j, m, k in _b_triples(ell, n)})


def witness_hyperplane(ell: int, w: Witness) -> HyperplaneParams | None:
    if w.kind != "b":
        return None
    return hyperplane_from_triple(ell, w.j, w.m, w.k)


def format_vector(xs: Sequence[ExactScalar]) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def parse_hyperplane(ell: int, text: str) -> HyperplaneParams:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ParameterError("hyperplane must be given as i,j,m,t")
    return HyperplaneParams(ell, *parts)


__all__ = [
    "CParams", "HParams", "SParams", "HyperplaneParams", "Witness",
    "c_to_h", "h_to_c", "h_to_s", "s_to_h", "c_to_s", "s_to_c",
    "lambda_classical", "lambda_quantum",
    "is_aspherical_c", "is_aspherical_s", "aspherical_witnesses_c", "aspherical_witnesses_s",
    "enumerate_aspherical_hyperplanes", "hyperplane_from_triple", "witness_hyperplane",
    "floor_shifted_sqrt", "rectangle_bound", "parse_hyperplane", "format_vector", "fmt_fraction",
]
