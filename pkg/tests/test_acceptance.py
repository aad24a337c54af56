"""Acceptance criteria 1-10, each printed as one PASS/FAIL line.

The heavy sweeps are exhaustive over the stated ranges; run with -s to see
the report lines (pytest.ini_options adds it by default).
"""
import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from aspherical.crystal import (
    Convention, descent_lengths, depth_by_descent, e_tilde, f_tilde, fock_e, fock_f, FockVector,
    is_highest_weight, reduce_signature, signature, z_classes, _regime,
)
from aspherical.ideals import cherednik_chain, grass_chain, is_singular_grass
from aspherical.multipartition import (
    addable_boxes, enumerate_multipartitions, leq_c, preceq_multipartition, removable_boxes,
)
from aspherical.parameters import (
    CParams, HyperplaneParams, c_to_h, c_to_s, enumerate_aspherical_hyperplanes, h_to_c, h_to_s,
    hyperplane_from_triple, is_aspherical_c, is_aspherical_s, lambda_classical, rectangle_bound,
    s_to_c, s_to_h, aspherical_witnesses_c,
)
from aspherical.quiver import cherednik_slice, grassmannian_slice
from aspherical.scalar import ExactScalar
from aspherical.supports import closed_form_depth, singular_family

F = Fraction


def report(number: int, ok: bool, detail: str = "") -> None:
    print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else ""))
    assert ok, detail


def small_family(ells=(2, 3), ms=range(-2, 3), ts=range(-2, 3)):
    for ell in ells:
        for i, j in itertools.combinations(range(ell), 2):
            for m in ms:
                for t in ts:
                    yield HyperplaneParams(ell, i, j, m, t)


def test_criterion_01_depth_oracle():
    bad, total = [], 0
    for hp in small_family():
        for n in range(8):
            for nu in enumerate_multipartitions(hp.ell, n):
                total += 1
                if closed_form_depth(nu, hp) != depth_by_descent(nu, hp, Convention.PRINTED):
                    bad.append((str(hp), str(nu)))
    report(1, not bad, f"{len(bad)} mismatches in {total} cases {bad[:3]}")


def test_criterion_02_singular_classification():
    bad, total = [], 0
    for ell in (2, 3):
        for n in range(1, 13):
            parts = enumerate_multipartitions(ell, n)
            for hp in enumerate_aspherical_hyperplanes(ell, n):
                total += 1
                hw = {nu for nu in parts if is_highest_weight(nu, hp)}
                if hw != set(singular_family(hp, n)):
                    bad.append((n, str(hp)))
    report(2, not bad, f"{len(bad)} mismatching (n, hyperplane) of {total}")


def test_criterion_03_depth_spectrum():
    bad, total = [], 0
    cases = [(hp, n) for hp in small_family() for n in range(8)]
    cases += [(hp, n) for ell in (2, 3) for n in range(1, 9) for hp in enumerate_aspherical_hyperplanes(ell, n)]
    for hp, n in cases:
        q = rectangle_bound(n, hp.m)
        allowed = {n - r * (r + abs(hp.m)) for r in range(q + 1)}
        for nu in enumerate_multipartitions(hp.ell, n):
            total += 1
            if depth_by_descent(nu, hp) not in allowed:
                bad.append((str(hp), str(nu)))
    report(3, not bad, f"{len(bad)} depths outside the spectrum in {total}")


def test_criterion_04_crystal_axioms():
    inverse, confluence, greedy = [], [], []
    checked = 0
    for hp in small_family(ms=range(-1, 2), ts=range(-1, 2)):
        for n in range(7):
            for nu in enumerate_multipartitions(hp.ell, n):
                for z in z_classes(nu, hp):
                    checked += 1
                    sig = signature(nu, z, hp)
                    if reduce_signature(sig, "stack") != reduce_signature(sig, "scan"):
                        confluence.append((str(hp), str(nu), str(z)))
                    down = e_tilde(nu, z, hp)
                    if down is not None and f_tilde(down, z, hp) != nu:
                        inverse.append((str(hp), str(nu), str(z), "e"))
                    up = f_tilde(nu, z, hp)
                    if up is not None and e_tilde(up, z, hp) != nu:
                        inverse.append((str(hp), str(nu), str(z), "f"))
                if n <= 6 and descent_lengths(nu, hp) != frozenset({depth_by_descent(nu, hp)}):
                    greedy.append((str(hp), str(nu)))
    ok = not (inverse or confluence or greedy)
    report(4, ok, f"{checked} (nu, z) pairs; inverse {len(inverse)}, confluence {len(confluence)}, "
                  f"greedy/exhaustive {len(greedy)}")


def test_criterion_05_fock_commutator():
    bad, total = [], 0
    for hp in small_family(ells=(2,)):
        reg = _regime(hp)
        for n in range(6):
            for nu in enumerate_multipartitions(2, n):
                classes = {reg.zclass(b) for b in addable_boxes(nu) + removable_boxes(nu)}
                for z in classes:
                    total += 1
                    v = FockVector.basis(nu)
                    lhs = fock_e(fock_f(v, z, hp), z, hp) - fock_f(fock_e(v, z, hp), z, hp)
                    k = sum(reg.zclass(b) == z for b in addable_boxes(nu)) - \
                        sum(reg.zclass(b) == z for b in removable_boxes(nu))
                    if lhs != v.scale(k):
                        bad.append((str(hp), str(nu), str(z)))
    report(5, not bad, f"{len(bad)} failures in {total}")


def test_criterion_06_slice_cross_check():
    grass_bad = []
    for v in range(1, 4):
        for w in range(2 * v + 1, 9):
            for s in range(v + 1):
                sl = grassmannian_slice(v, w, s)
                if (sl.vhat, sl.what, sl.lambda_hat) != ((s,), (w - 2 * v + 2 * s,), (v - s,)):
                    grass_bad.append((v, w, s))
    cher_bad, total = [], 0
    offsets = Counter()
    for ell in (2, 3):
        for n in range(1, 9):
            for hp in enumerate_aspherical_hyperplanes(ell, n):
                for s in range(rectangle_bound(n, hp.m) + 1):
                    total += 1
                    sl = cherednik_slice(hp, n, s)
                    want = ((s,), (abs(hp.m) + 2 * s,), (ExactScalar(hp.t - s),))
                    got = (sl.vhat, sl.what, sl.lambda_hat)
                    if got != want:
                        cher_bad.append((ell, n, str(hp), s, str(sl.lambda_hat[0])))
                        offsets[str(sl.lambda_hat[0] - (hp.t - s))] += 1
    detail = (f"grassmannian {len(grass_bad)} mismatches; cherednik {len(cher_bad)} of {total} "
              f"(lambda-hat minus (t - s), most common: {offsets.most_common(4)}; e.g. {cher_bad[:3]})")
    report(6, not grass_bad and not cher_bad, detail)


def _random_c(rng, ell):
    c0 = F(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 7))
    return CParams(ell, c0, tuple(F(rng.randint(-12, 12), rng.choice([1, 1, 2, 3, 5])) for _ in range(ell)))


def _point_on(rng, hp, generic=True):
    den = (lambda: rng.choice([10007, 10009, 10037, 10039])) if generic else (lambda: rng.randint(1, 4))
    kappa = F(rng.randint(1, 50), den())
    s = [F(rng.randint(-50, 50), den()) for _ in range(hp.ell)]
    return hp.instantiate(kappa, s)


def test_criterion_07_aspherical_forms():
    rng = random.Random(20240607)
    disagree, aspherical_seen = [], 0
    for ell in (2, 3):
        for n in range(2, 7):
            hps = enumerate_aspherical_hyperplanes(ell, n)
            for k in range(1000):
                # a third of the points are forced onto a hyperplane so both verdicts are exercised
                c = _random_c(rng, ell) if k % 3 else s_to_c(_point_on(rng, rng.choice(hps), generic=False))
                a, b = is_aspherical_c(c, n)[0], is_aspherical_s(c_to_s(c), n)[0]
                aspherical_seen += a
                if a != b:
                    disagree.append((ell, n, str(c.c0), [str(x) for x in c.d]))
    missing = []
    for ell in (2, 3):
        for n in range(2, 7):
            for hp in enumerate_aspherical_hyperplanes(ell, n):
                for _ in range(10):
                    c = s_to_c(_point_on(rng, hp))
                    hits = [w for w in aspherical_witnesses_c(c, n) if w.kind == "b"
                            and hyperplane_from_triple(ell, w.j, w.m, w.k) == hp]
                    if not hits:
                        missing.append((n, str(hp)))
    report(7, not disagree and not missing,
           f"{len(disagree)} c/s disagreements ({aspherical_seen} aspherical points), "
           f"{len(missing)} hyperplane points without a witness")


def test_criterion_08_ideal_chains():
    grass_bad = []
    for w in range(1, 9):
        for v in range(0, (w + 1) // 2):
            if 2 * v >= w:
                continue
            for lam in range(-w - 2, 3):
                ch = grass_chain(v, w, lam)
                want = max(lam + v, v - w - lam, 0) + 2 if is_singular_grass(w, lam) else v + 2
                if len(ch) != want:
                    grass_bad.append((v, w, lam, len(ch)))
    tally, examples, total = Counter(), [], 0
    for ell in (2, 3):
        for n in range(1, 9):
            for hp in enumerate_aspherical_hyperplanes(ell, n):
                ch = cherednik_chain(hp, n)
                if ch.extra["q"] < 1:
                    continue
                total += 1
                remark, agree = ch.extra["remark_holds"], ch.p_grass == ch.p_stated
                tally[(remark, agree)] += 1
                if not (remark and agree) and len(examples) < 6:
                    examples.append((ell, n, str(hp), ch.extra["q"], ch.p_grass, ch.p_stated))
    bad = total - tally[(True, True)]
    detail = (f"grassmannian {len(grass_bad)} mismatches; cherednik {bad} of {total} violate "
              f"(remark, p agreement) tally {dict(tally)}; examples (ell, n, hp, q, p_grass, p_stated) "
              f"{examples}")
    report(8, not grass_bad and bad == 0, detail)


def test_criterion_09_order_implication():
    # Matched boxes are equivalent, so preceq forces equal multisets of box
    # classes; pairs failing that are skipped after a sampled confirmation.
    rng = random.Random(9)
    bad, total, sampled = [], 0, 0
    for ell in (2, 3):
        for n in range(1, 6):
            parts = enumerate_multipartitions(ell, n)
            for hp in enumerate_aspherical_hyperplanes(ell, n):
                h = s_to_h(hp.to_sparams())
                reg = _regime(hp)
                key = {nu: sorted(Counter(reg.zclass(b) for b in nu.boxes()).items()) for nu in parts}
                for lam, lam2 in itertools.product(parts, repeat=2):
                    if key[lam] != key[lam2]:
                        if rng.random() < 0.002:
                            sampled += 1
                            assert not preceq_multipartition(lam, lam2, h)
                        continue
                    if leq_c(lam, lam2, h):
                        continue
                    total += 1
                    if preceq_multipartition(lam, lam2, h):
                        bad.append((str(hp), str(lam), str(lam2)))
    report(9, not bad, f"{len(bad)} pairs with preceq but not <=_c among {total} class-compatible pairs "
                       f"({sampled} skipped pairs re-checked by matching)")


def test_criterion_10_round_trips():
    rng = random.Random(10)
    bad = 0
    for _ in range(2000):
        ell = rng.randint(2, 5)
        c = _random_c(rng, ell)
        h = c_to_h(c)
        bad += h_to_c(h) != c
        bad += s_to_h(h_to_s(h)) != h
        bad += s_to_c(c_to_s(c)) != c
        bad += sum(lambda_classical(c), ExactScalar(0)) != c.c0
    for hp in small_family():
        c = s_to_c(hp.to_sparams())
        bad += sum(lambda_classical(c), ExactScalar(0)) != c.c0
        bad += c_to_s(c) != hp.to_sparams()
    report(10, bad == 0, f"{bad} failed identities")
