"""Chains of two-sided ideals for twisted differential operators on
Grassmannians and for the spherical Cherednik algebra, plus the simples the
averaging idempotent kills."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .multipartition import MultiPartition, enumerate_multipartitions
from .parameters import HyperplaneParams, enumerate_aspherical_hyperplanes, rectangle_bound
from .supports import closed_form_depth


@dataclass(frozen=True)
class IdealDescriptor:
    s: int
    slice: tuple[int, int, int] | None  # (vhat, what, lambda_hat); None for the unit ideal
    leaf_dim: int | None = None

    def to_json(self) -> dict:
        sl = None if self.slice is None else dict(zip(("v", "w", "lambda"), self.slice))
        return {"s": self.s, "slice": sl, "leaf_dim": self.leaf_dim}


@dataclass(frozen=True)
class IdealChain:
    algebra: str
    data: tuple
    ideals: tuple[IdealDescriptor, ...]
    p_grass: int
    p_stated: int | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.ideals)

    def to_json(self) -> dict:
        out = {"algebra": self.algebra, "data": list(self.data),
               "ideals": [d.to_json() for d in self.ideals], "p_grass": self.p_grass}
        if self.p_stated is not None:
            out["p_stated"] = self.p_stated
        out.update(self.extra)
        return out


def cohomology_nonvanishing(v: int, w: int, n: int) -> bool:
    """Total cohomology of O(n) on Gr(v, w) vanishes exactly for 1-w <= n <= -1."""
    return not (1 - w <= n <= -1)


def is_singular_grass(w: int, lam: int) -> bool:
    return 1 - w <= lam <= -1


def _grass_chain(v: int, w: int, lam: int, tag: str) -> IdealChain:
    if is_singular_grass(w, lam):
        p = max(lam + v, v - w - lam, 0)
        present = [s for s in range(v + 1) if cohomology_nonvanishing(s, w - 2 * v + 2 * s, lam + v - s)]
        # the window argument makes the surviving indices an initial segment
        assert present == list(range(p + 1)) or (p == 0 and present == []), (v, w, lam, present)
        algebra, top = "GrassmannSingular", p
    else:
        algebra, top = "GrassmannRegular", v
    ideals = [IdealDescriptor(s, (s, w - 2 * v + 2 * s, lam + v - s))
              for s in range(top + 1)]
    ideals.append(IdealDescriptor(top + 1, None, None))
    return IdealChain(tag or algebra, (v, w, lam), tuple(ideals), top)


def grass_chain(v: int, w: int, lam: int) -> IdealChain:
    if w <= 2 * v:
        raise PreconditionError(f"need w > 2v, got v={v}, w={w}")
    return _grass_chain(v, w, lam, "")


def normalized_mt(hp: HyperplaneParams) -> tuple[int, int]:
    """(m, t) after exchanging i and j when t < 0, so that t >= 0."""
    return (hp.m, hp.t) if hp.t >= 0 else (-hp.m, -hp.t)


def cherednik_chain(hp: HyperplaneParams, n: int) -> IdealChain:
    if n < 1 or hp not in enumerate_aspherical_hyperplanes(hp.ell, n):
        raise PreconditionError(f"hyperplane {hp} is not aspherical for n={n}")
    m, t = normalized_mt(hp)
    q = rectangle_bound(n, m)
    absm = abs(m)
    # w = |m| + 2q equals 2v when m = 0; the chain formulas still apply there
    grass = _grass_chain(q, absm + 2 * q, t - q, "SphericalCherednik")
    ideals = tuple(
        IdealDescriptor(d.s, d.slice, None if d.slice is None else 2 * (n - d.s * (absm + d.s)))
        for d in grass.ideals
    )
    return IdealChain(
        "SphericalCherednik", (hp.ell, hp.i, hp.j, hp.m, hp.t, n), ideals, grass.p_grass,
        p_stated=max(t, 0),
        extra={"q": q, "lambda_hat_q": t - q, "remark_holds": 1 - q <= hp.t <= q - 1,
               "p_grass_raw": max(hp.t, -hp.t - absm, 0)},
    )


def annihilated_simples(hp: HyperplaneParams, n: int) -> list[MultiPartition]:
    m, t = normalized_mt(hp)
    p = max(t, 0)
    threshold = n - (p + 1) * (abs(m) + p + 1)
    if threshold < 0:
        return []
    return [nu for nu in enumerate_multipartitions(hp.ell, n) if closed_form_depth(nu, hp) <= threshold]


def k0_kernel(hp: HyperplaneParams, n: int) -> list[MultiPartition]:
    """Simples whose classes generate the kernel of K0(O) -> K0(spherical O)."""
    return annihilated_simples(hp, n)


def e_membership(chain: IdealChain, s: int) -> bool:
    """Whether e lies in the ideal J_s of the full Cherednik chain."""
    return s >= chain.p_grass + 1


__all__ = [
    "IdealDescriptor", "IdealChain", "cohomology_nonvanishing", "is_singular_grass",
    "grass_chain", "normalized_mt", "cherednik_chain", "annihilated_simples", "k0_kernel", "e_membership",
]
