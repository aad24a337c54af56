"""Quiver root data: Tits form, Kac's root test, Crawley-Boevey criteria,
Nakajima genericity, flatness, and slice quivers with their parameters."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod
from typing import Hashable, Mapping, Sequence

from .errors import InconsistentDecompositionError, ResourceLimitError
from .parameters import HyperplaneParams, lambda_quantum, rectangle_bound, s_to_c
from .scalar import ExactScalar, as_scalar

INFINITY = "inf"
MAX_BOXES = 200_000  # cap on the number of sub-vectors an exhaustive search visits

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class QuiverData:
    vertices: tuple[Hashable, ...]
    arrows: tuple[tuple[Hashable, Hashable], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple((t, h) for t, h in self.arrows))
        known = set(self.vertices)
        for t, h in self.arrows:
            if t not in known or h not in known:
                raise ValueError(f"arrow {t}->{h} references an unknown vertex")

    @property
    def index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def loops(self, vertex) -> int:
        return sum(1 for t, h in self.arrows if t == h == vertex)

    def vec(self, v: Mapping | Sequence[int]) -> DimVector:
        if isinstance(v, Mapping):
            return tuple(int(v.get(x, 0)) for x in self.vertices)
        if len(v) != len(self.vertices):
            raise ValueError("dimension vector length does not match the vertex count")
        return tuple(int(x) for x in v)

    def to_json(self) -> dict:
        counts: dict = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return {"vertices": [str(v) for v in self.vertices],
                "arrows": [{"t": str(t), "h": str(h), "mult": k} for (t, h), k in counts.items()]}


def cyclic_quiver(ell: int) -> QuiverData:
    return QuiverData(tuple(range(ell)), tuple((k, (k + 1) % ell) for k in range(ell)))


def framed(q: QuiverData, w: Sequence[int]) -> QuiverData:
    """Add a vertex INFINITY with w_k arrows from INFINITY to k."""
    w = q.vec(w)
    extra = tuple((INFINITY, x) for x, wk in zip(q.vertices, w) for _ in range(wk))
    return QuiverData(q.vertices + (INFINITY,), q.arrows + extra)


def tits_form(q: QuiverData, v1, v2) -> int:
    a, b = q.vec(v1), q.vec(v2)
    idx = q.index
    total = 2 * sum(x * y for x, y in zip(a, b))
    for t, h in q.arrows:
        total -= a[idx[t]] * b[idx[h]] + a[idx[h]] * b[idx[t]]
    return total


def p_of(q: QuiverData, v) -> int:
    norm = tits_form(q, v, v)
    assert norm % 2 == 0
    return 1 - norm // 2


class RootKind(Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_A_ROOT = "not_a_root"


def _connected(q: QuiverData, v: DimVector) -> bool:
    idx = q.index
    support = {k for k, x in enumerate(v) if x}
    if not support:
        return False
    adj: dict[int, set[int]] = {k: set() for k in support}
    for t, h in q.arrows:
        a, b = idx[t], idx[h]
        if a in support and b in support:
            adj[a].add(b)
            adj[b].add(a)
    start = next(iter(support))
    seen, stack = {start}, [start]
    while stack:
        for nb in adj[stack.pop()] - seen:
            seen.add(nb)
            stack.append(nb)
    return seen == support


@lru_cache(maxsize=1 << 16)
def _classify(q: QuiverData, v: DimVector) -> RootKind:
    v = list(v)
    n = len(v)
    loop_free = [k for k, x in enumerate(q.vertices) if q.loops(x) == 0]
    while True:
        if any(x < 0 for x in v) or not any(v):
            return RootKind.NOT_A_ROOT
        if not _connected(q, tuple(v)):
            return RootKind.NOT_A_ROOT
        if sum(v) == 1 and v[v.index(1)] == 1 and v.index(1) in loop_free:
            return RootKind.REAL
        for k in loop_free:
            e = [0] * n
            e[k] = 1
            pair = tits_form(q, v, e)
            if pair > 0:
                v[k] -= pair
                break
        else:
            return RootKind.IMAGINARY


def classify_root(q: QuiverData, v) -> RootKind:
    return _classify(q, q.vec(v))


def is_root(q: QuiverData, v) -> bool:
    return classify_root(q, v) is not RootKind.NOT_A_ROOT


def _subvectors(v: DimVector):
    if prod(x + 1 for x in v) > MAX_BOXES:
        raise ResourceLimitError(f"exhaustive search below {v} is too large")
    return product(*(range(x + 1) for x in v))


def _dot(lam: Sequence[ExactScalar], v: Sequence[int]) -> ExactScalar:
    return sum((x * k for x, k in zip(lam, v) if k), ExactScalar(0))


def _best_root_sums(q: QuiverData, v: DimVector, allowed) -> dict[DimVector, float]:
    """For every u <= v, the largest sum of p over decompositions of u into allowed roots."""
    subs = sorted(_subvectors(v), key=sum)
    parts = [u for u in subs if any(u) and allowed(u) and is_root(q, u)]
    pvals = {u: p_of(q, u) for u in parts}
    best: dict[DimVector, float] = {subs[0]: 0}
    for u in subs[1:]:
        val = float("-inf")
        for a in parts:
            if all(x <= y for x, y in zip(a, u)):
                rest = tuple(y - x for x, y in zip(a, u))
                if best.get(rest, float("-inf")) > float("-inf"):
                    val = max(val, pvals[a] + best[rest])
        best[u] = val
    return best


def cb_simple_exists(qw: QuiverData, lambda_ext: Sequence, vtilde) -> bool:
    """Crawley-Boevey: a simple of dimension vtilde exists for the deformed
    preprojective algebra at lambda_ext.  Decomposition pieces are taken to be
    positive roots orthogonal to lambda, as in the original criterion."""
    lam = [as_scalar(x) for x in lambda_ext]
    v = qw.vec(vtilde)
    if not any(v) or not is_root(qw, v) or not _dot(lam, v).is_zero():
        return False
    best = _best_root_sums(qw, v, lambda u: _dot(lam, u).is_zero())
    target = p_of(qw, v)
    for a in _subvectors(v):
        if not any(a) or a == v:
            continue
        if not _dot(lam, a).is_zero() or not is_root(qw, a):
            continue
        rest = tuple(y - x for x, y in zip(a, v))
        if best[rest] > float("-inf") and p_of(qw, a) + best[rest] >= target:
            return False
    return True


def moment_flat(q: QuiverData, v, w) -> bool:
    """p(v) + w.v >= w.v0 + sum_{i>=0} p(v^i) over v = v0 + (roots v^1, ...)."""
    v, w = q.vec(v), q.vec(w)
    if not any(v):
        return True
    best = _best_root_sums(q, v, lambda u: True)
    lhs = p_of(q, v) + sum(a * b for a, b in zip(w, v))
    for v0 in _subvectors(v):
        rest = tuple(y - x for x, y in zip(v0, v))
        if best[rest] == float("-inf"):
            continue
        if lhs - (sum(a * b for a, b in zip(w, v0)) + p_of(q, v0) + best[rest]) < 0:
            return False
    return True


def generic_pair(q: QuiverData, v, lam: Sequence, theta: Sequence) -> bool:
    v = q.vec(v)
    lam = [as_scalar(x) for x in lam]
    theta = [Fraction(x) for x in theta]
    for u in _subvectors(v):
        if not any(u):
            continue
        if sum(a * b for a, b in zip(theta, u)) == 0 and _dot(lam, u).is_zero() and is_root(q, u):
            return False
    return True


def rho(q: QuiverData, v, w) -> tuple[Fraction, ...]:
    v, w = q.vec(v), q.vec(w)
    idx = q.index
    out = []
    for k, x in enumerate(q.vertices):
        incoming = sum(v[idx[t]] for t, h in q.arrows if h == x)
        outgoing = sum(v[idx[h]] for t, h in q.arrows if t == x)
        out.append(Fraction(-(incoming - outgoing - w[k]), 2))
    return tuple(out)


@dataclass(frozen=True)
class Decomposition:
    v0: DimVector
    parts: tuple[tuple[DimVector, int], ...] = ()

    def total(self) -> DimVector:
        out = list(self.v0)
        for part, mult in self.parts:
            out = [a + mult * b for a, b in zip(out, part)]
        return tuple(out)


@dataclass(frozen=True)
class SliceQuiver:
    quiver: QuiverData
    vhat: DimVector
    what: DimVector
    lambda_hat: tuple[ExactScalar, ...] = field(default=())

    def to_json(self) -> dict:
        return {"quiver": self.quiver.to_json(), "vhat": list(self.vhat), "what": list(self.what),
                "lambda_hat": [str(x) for x in self.lambda_hat]}


def slice_quiver(q: QuiverData, v, w, dec: Decomposition, lam: Sequence) -> SliceQuiver:
    v, w = q.vec(v), q.vec(w)
    if dec.total() != v:
        raise InconsistentDecompositionError(f"decomposition sums to {dec.total()}, not {v}")
    for part, mult in dec.parts:
        if mult < 0 or not any(part):
            raise InconsistentDecompositionError("parts must be nonzero with nonnegative multiplicity")
        if not is_root(q, part):
            raise InconsistentDecompositionError(f"part {part} is not a root")
    k = len(dec.parts)
    vecs = [part for part, _ in dec.parts]
    arrows = []
    for a in range(k):
        arrows += [(a, a)] * p_of(q, vecs[a])
        for b in range(a + 1, k):
            arrows += [(a, b)] * (-tits_form(q, vecs[a], vecs[b]))
    qhat = QuiverData(tuple(range(k)), tuple(arrows))
    vhat = tuple(mult for _, mult in dec.parts)
    what = tuple(sum(x * y for x, y in zip(w, vecs[a])) - tits_form(q, dec.v0, vecs[a]) for a in range(k))
    # The shift enters with the opposite sign to the printed rho: that is the
    # convention under which the Grassmannian slice at lambda = 0 has
    # parameter v - s.
    shift = [-x for x in rho(q, v, w)]
    shift_hat = [-x for x in rho(qhat, vhat, what)]
    lam = [as_scalar(x) for x in lam]
    moved = [x - y for x, y in zip(lam, shift)]
    lam_hat = tuple(_dot(moved, vecs[a]) + shift_hat[a] for a in range(k))
    return SliceQuiver(qhat, vhat, what, lam_hat)


# presets

def grassmannian_decomposition(v: int, s: int) -> Decomposition:
    return Decomposition((v - s,), (((1,), s),))


def grassmannian_slice(v: int, w: int, s: int, lam=0) -> SliceQuiver:
    return slice_quiver(QuiverData((0,)), (v,), (w,), grassmannian_decomposition(v, s), [lam])


def orthogonal_real_root(hp: HyperplaneParams) -> DimVector:
    """The positive real root of the cyclic quiver orthogonal to lambda^c on d_i - d_j = l m c0.

    Its entries are |m| off the window i+1..j and |m|+1 (m <= 0) or |m|-1
    (m > 0) on it.
    """
    sign = 1 if hp.m <= 0 else -1
    return tuple(abs(hp.m) + (sign if hp.i < k <= hp.j else 0) for k in range(hp.ell))


def cherednik_decompositions(hp: HyperplaneParams, n: int) -> list[Decomposition]:
    vp = orthogonal_real_root(hp)
    q = rectangle_bound(n, hp.m)
    out = []
    for s in range(q + 1):
        v2 = tuple(n - s * x for x in vp) + (1,)
        assert p_of(framed(cyclic_quiver(hp.ell), (1,) + (0,) * (hp.ell - 1)), v2) == n - s * abs(hp.m) - s * s
        out.append(Decomposition(v2, ((vp + (0,), s),) if s else ()))
    return out


def cherednik_lambda(hp: HyperplaneParams) -> tuple[ExactScalar, ...]:
    """lambda^q at the symbolic generic point of the hyperplane, with lambda_inf appended."""
    lam = lambda_quantum(s_to_c(hp.to_sparams()))
    return lam


def cherednik_slice(hp: HyperplaneParams, n: int, s: int) -> SliceQuiver:
    """Slice at the stratum of r_1 (x) C^s.  The framing vertex is treated as part
    of v0, so the slice is computed on the unframed cyclic quiver with w = e_0."""
    q = rectangle_bound(n, hp.m)
    if not 0 <= s <= q:
        raise InconsistentDecompositionError(f"s must lie in 0..{q}")
    quiv = cyclic_quiver(hp.ell)
    vp = orthogonal_real_root(hp)
    w = (1,) + (0,) * (hp.ell - 1)
    v = (n,) * hp.ell
    dec = Decomposition(tuple(n - s * x for x in vp), ((vp, s),))
    return slice_quiver(quiv, v, w, dec, cherednik_lambda(hp))


__all__ = [
    "QuiverData", "DimVector", "Decomposition", "SliceQuiver", "RootKind", "INFINITY",
    "cyclic_quiver", "framed", "tits_form", "p_of", "classify_root", "is_root",
    "cb_simple_exists", "moment_flat", "generic_pair", "rho", "slice_quiver",
    "grassmannian_decomposition", "grassmannian_slice", "orthogonal_real_root",
    "cherednik_decompositions", "cherednik_lambda", "cherednik_slice",
]
